#include "gaoforge/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gaoforge/engine.hpp"

namespace gaoforge {

namespace {

std::vector<Int> sorted_entries(const ResidueSequence& s) {
  std::vector<Int> e;
  e.reserve(s.size());
  for (Int x : s.terms()) e.push_back(x == 0 ? s.n() : x);
  std::sort(e.begin(), e.end());
  return e;
}

CanonicalProfile profile_or_raw(const ResidueSequence& s, const WeightSet& a) {
  if (a.is_unit_subgroup()) return canonicalize(s, a);
  return {s.n(), sorted_entries(s)};
}

ExtremalCatalog build(const Modulus& m, const WeightSet& a, ConstantKind kind, Int constant,
                      const CollectResult& found) {
  ExtremalCatalog cat{m.value(), kind, a.describe(), constant, {}, found.stats};
  std::set<CanonicalProfile> seen;
  for (const auto& entries : found.sequences) {
    auto seq = sequence_from_entries(m, entries);
    if (!is_extremal(seq, a, kind)) continue;
    seen.insert(profile_or_raw(seq, a));
  }
  for (const auto& p : seen) cat.classes.push_back({p, representative(p)});
  return cat;
}

}  // namespace

CanonicalProfile canonicalize(const ResidueSequence& s, const WeightSet& a) {
  const Int n = s.n();
  if (a.modulus().value() != n)
    throw std::invalid_argument("weight set and sequence live in different rings");
  if (!a.is_unit_subgroup()) throw std::invalid_argument("weights are not a subgroup of U(n)");
  if (a.realizes_all_units()) {
    std::vector<Int> e;
    for (Int x : s.terms()) e.push_back(divisor_class(x, n));
    std::sort(e.begin(), e.end());
    return {n, std::move(e)};
  }
  std::vector<Int> least(static_cast<std::size_t>(n), 0);
  for (Int x = 1; x < n; ++x) least[static_cast<std::size_t>(x)] = orbit_of(x, a).front();
  std::optional<std::vector<Int>> best;
  for (Int c : units(a.modulus())) {
    std::vector<Int> e;
    for (Int x : s.terms()) {
      const Int y = c * x % n;
      e.push_back(y == 0 ? n : least[static_cast<std::size_t>(y)]);
    }
    std::sort(e.begin(), e.end());
    if (!best || e < *best) best = std::move(e);
  }
  return {n, best ? std::move(*best) : std::vector<Int>{}};
}

bool are_equivalent(const ResidueSequence& s, const ResidueSequence& t, const WeightSet& a) {
  if (s.size() != t.size()) throw std::invalid_argument("sequences differ in length");
  return canonicalize(s, a) == canonicalize(t, a);
}

ResidueSequence representative(const CanonicalProfile& p) {
  return sequence_from_entries(Modulus(p.n), p.entries);
}

const char* to_string(ConstantKind k) { return k == ConstantKind::Gao ? "gao" : "davenport"; }

bool is_extremal(const ResidueSequence& s, const WeightSet& a, ConstantKind kind) {
  if (kind == ConstantKind::Davenport) return !has_wzs_subsequence(s, a);
  const auto n = static_cast<std::size_t>(s.n());
  return s.size() < n || !has_wzs_subsequence_of_length(s, a, n);
}

ExtremalCatalog enumerate_gao_extremal(const Modulus& m, const WeightSet& a,
                                       const SearchBudget& budget, std::optional<Int> gao) {
  const Int e = gao ? *gao : gao_constant(m, a, budget).value;
  const ClassSpace space(a);
  return build(m, a, ConstantKind::Gao, e, collect_without_n_zero_sum(space, e - 1, budget));
}

ExtremalCatalog enumerate_davenport_extremal(const Modulus& m, const WeightSet& a,
                                             const SearchBudget& budget,
                                             std::optional<Int> davenport) {
  const Int d = davenport ? *davenport : davenport_constant(m, a, budget).value;
  const ClassSpace space(a);
  return build(m, a, ConstantKind::Davenport, d, collect_zero_sum_free(space, d - 1, budget));
}

}  // namespace gaoforge
