#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaoforge/residue.hpp"

namespace gaoforge {

struct PropertyTally {
  PropertyTally() = default;
  PropertyTally(std::string name_, std::string scope_)
      : name(std::move(name_)), scope(std::move(scope_)) {}

  std::string name;
  std::string scope;             // what was enumerated or sampled
  std::uint64_t cases = 0;       // instances where the hypothesis held
  std::uint64_t violations = 0;
  std::optional<std::string> first_counterexample;
  bool pass() const { return violations == 0 && cases > 0; }
};

/// Multisets of residues are enumerated up to the largest length whose count
/// stays under this many (capped at kMaxLemmaLength).
inline constexpr std::uint64_t kLemmaMultisetCap = 200'000;
inline constexpr int kMaxLemmaLength = 10;

/// n = p^r, p odd: two terms prime to p force a full-length zero-sum.
PropertyTally check_gri(Int n);
/// n = 2^r: an even number (>= 2) of odd terms forces a full-length zero-sum.
PropertyTally check_2r0(Int n);
/// n = 2p: an even number of odd terms and not exactly one term prime to p
/// force a full-length zero-sum (nonempty sequences).
PropertyTally check_w(Int n);

/// Random lifts: lift_check true implies a full-length zero-sum upstairs.
PropertyTally check_lifts(std::uint64_t trials, std::uint64_t seed, Int max_n = 60);
/// Random paired-oracle runs: component product DP vs direct DP.
PropertyTally check_obs(std::uint64_t trials, std::uint64_t seed, Int max_n = 60,
                        int max_len = 12);
/// Random termwise unit scaling + permutation: predicates and canonical
/// profiles unchanged (full unit group, plus proper subgroups with a global unit).
PropertyTally check_unit_invariance(std::uint64_t trials, std::uint64_t seed, Int max_n = 60,
                                    int max_len = 10);
/// Every sequence of length <= max_len over Z_n, n <= max_n: bitset DP vs
/// subsets x weight assignments, unconstrained and every fixed length.
/// Weights U(n) and {1}.
PropertyTally check_dp_vs_naive(Int max_n = 10, int max_len = 6);

}  // namespace gaoforge
