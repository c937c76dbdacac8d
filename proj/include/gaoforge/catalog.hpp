#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gaoforge/constants.hpp"
#include "gaoforge/residue.hpp"
#include "gaoforge/search.hpp"
#include "gaoforge/sequence.hpp"

namespace gaoforge {

/// Equivalence-class invariant of a sequence, ascending, zero written as n.
/// For the full unit group the entries are gcd(term, n); for a proper unit
/// subgroup they are least orbit representatives after the best global unit.
struct CanonicalProfile {
  Int n = 0;
  std::vector<Int> entries;

  friend bool operator==(const CanonicalProfile&, const CanonicalProfile&) = default;
  friend auto operator<=>(const CanonicalProfile&, const CanonicalProfile&) = default;
};

/// Throws std::invalid_argument when A is not a subgroup of U(n).
CanonicalProfile canonicalize(const ResidueSequence& s, const WeightSet& a);

/// Throws std::invalid_argument on a length mismatch or when A is not a unit subgroup.
bool are_equivalent(const ResidueSequence& s, const ResidueSequence& t, const WeightSet& a);

/// The sequence whose terms are the profile entries (zero for n).
ResidueSequence representative(const CanonicalProfile& p);

enum class ConstantKind { Gao, Davenport };

const char* to_string(ConstantKind k);

struct CatalogClass {
  CanonicalProfile profile;
  ResidueSequence representative;
};

struct ExtremalCatalog {
  Int n = 0;
  ConstantKind kind = ConstantKind::Gao;
  std::string weights;
  Int constant = 0;                 // E or D; class lengths are constant - 1
  std::vector<CatalogClass> classes;  // ascending by profile
  SearchStats stats;
};

/// All classes of length E-1 without a weighted zero-sum of length n.
/// E is computed when not supplied. For weight sets that are not unit
/// subgroups no equivalence is applied and profiles are sorted sequences.
/// Throws BudgetExhausted.
ExtremalCatalog enumerate_gao_extremal(const Modulus& m, const WeightSet& a,
                                       const SearchBudget& budget = {},
                                       std::optional<Int> gao = std::nullopt);

/// All classes of length D-1 without a nonempty weighted zero-sum.
ExtremalCatalog enumerate_davenport_extremal(const Modulus& m, const WeightSet& a,
                                             const SearchBudget& budget = {},
                                             std::optional<Int> davenport = std::nullopt);

/// Re-runs the defining predicate on a class representative.
bool is_extremal(const ResidueSequence& s, const WeightSet& a, ConstantKind kind);

}  // namespace gaoforge
