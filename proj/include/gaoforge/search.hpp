#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gaoforge/residue.hpp"

namespace gaoforge {

struct SearchBudget {
  std::uint64_t max_nodes = 500'000'000;
  double max_seconds = 3600.0;
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Thrown when a search hits its node or wall-clock ceiling before finishing.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, SearchStats stats)
      : std::runtime_error(what), stats_(stats) {}
  const SearchStats& stats() const { return stats_; }

 private:
  SearchStats stats_;
};

/// The nonzero term classes a search draws from.
///
/// For the full unit group the classes are the proper divisors of n (every
/// term is a unit multiple of gcd(term, n)). For another unit subgroup they
/// are its orbits on Z_n \ {0}. For any other weight set each nonzero residue
/// is its own class. Zero is never a class; searches account for zeros
/// separately.
class ClassSpace {
 public:
  enum class Kind { DivisorClasses, SubgroupOrbits, RawResidues };

  explicit ClassSpace(const WeightSet& a);

  Kind kind() const { return kind_; }
  Int n() const { return n_; }
  std::size_t size() const { return reps_.size(); }
  /// Smallest residue of each class, ascending.
  const std::vector<Int>& representatives() const { return reps_; }
  /// The sums a*rep, a in A.
  const std::vector<Int>& shifts(std::size_t i) const { return shifts_[i]; }
  /// Two terms of one class always admit weights cancelling each other.
  bool pairs_cancel() const { return pairs_cancel_; }

 private:
  Kind kind_;
  Int n_;
  std::vector<Int> reps_;
  std::vector<std::vector<Int>> shifts_;
  bool pairs_cancel_ = false;
};

/// A sequence produced by a search, as ascending class representatives with
/// zero terms written as n (so zeros sort last).
using ProfileEntries = std::vector<Int>;

struct LongestResult {
  Int length = 0;            // longest sequence avoiding the predicate
  ProfileEntries witness;    // lexicographically least among the longest
  SearchStats stats;
};

struct CollectResult {
  std::vector<ProfileEntries> sequences;  // ascending, deduplicated
  Int longest_seen = 0;                   // > target means the target was too small
  SearchStats stats;
};

/// Longest multiset with no nonempty weighted zero-sum.
LongestResult longest_zero_sum_free(const ClassSpace& space, const SearchBudget& budget);
/// Every multiset of exactly `target` terms with no nonempty weighted zero-sum.
CollectResult collect_zero_sum_free(const ClassSpace& space, Int target,
                                    const SearchBudget& budget);

/// Longest multiset with no weighted zero-sum of exactly n terms.
LongestResult longest_without_n_zero_sum(const ClassSpace& space, const SearchBudget& budget);
/// Every multiset of `target` terms with no weighted zero-sum of exactly n terms.
CollectResult collect_without_n_zero_sum(const ClassSpace& space, Int target,
                                         const SearchBudget& budget);

}  // namespace gaoforge
