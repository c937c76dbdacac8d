#include "gaoforge/constants.hpp"

#include "gaoforge/engine.hpp"

namespace gaoforge {

ResidueSequence sequence_from_entries(const Modulus& m, const std::vector<Int>& entries) {
  std::vector<Int> terms;
  terms.reserve(entries.size());
  for (Int e : entries) terms.push_back(e == m.value() ? 0 : e);
  return ResidueSequence(m, std::move(terms));
}

DavenportResult davenport_constant(const Modulus& m, const WeightSet& a,
                                   const SearchBudget& budget) {
  const ClassSpace space(a);
  auto r = longest_zero_sum_free(space, budget);
  return DavenportResult{r.length + 1, sequence_from_entries(m, r.witness), r.stats};
}

GaoResult gao_constant(const Modulus& m, const WeightSet& a, const SearchBudget& budget) {
  const ClassSpace space(a);
  auto r = longest_without_n_zero_sum(space, budget);
  GaoResult out{r.length + 1, sequence_from_entries(m, r.witness), r.stats};
  if (a.realizes_all_units())
    out.formula_cap_exceeded = out.value - 1 > m.value() + m.big_omega() + kGaoCapSlack;
  return out;
}

ConstantsRecord compute_constants(const Modulus& m, const WeightSet& a,
                                  const SearchBudget& budget) {
  return ConstantsRecord{m.value(), a.describe(), davenport_constant(m, a, budget),
                         gao_constant(m, a, budget)};
}

bool IdentityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

IdentityReport verify_identities(const ConstantsRecord& record, const Modulus& m) {
  const Int n = m.value();
  const auto units_ws = WeightSet::all_units(m);
  const Int d = record.davenport.value;
  const Int e = record.gao.value;
  IdentityReport rep{n, d, e, {}};
  rep.checks.push_back({"gao_minus_davenport", "E - D = n - 1", e - d == n - 1});
  rep.checks.push_back({"gao_formula", "E = n + Omega(n)", e == n + m.big_omega()});

  const auto& dw = record.davenport.witness;
  rep.checks.push_back({"davenport_witness", "witness of length D-1 has no zero-sum subsequence",
                        static_cast<Int>(dw.size()) == d - 1 && !has_wzs_subsequence(dw, units_ws)});
  const auto& gw = record.gao.witness;
  const bool gw_free = gw.size() < static_cast<std::size_t>(n) ||
                       !has_wzs_subsequence_of_length(gw, units_ws, static_cast<std::size_t>(n));
  rep.checks.push_back({"gao_witness", "witness of length E-1 has no zero-sum subsequence of length n",
                        static_cast<Int>(gw.size()) == e - 1 && gw_free});
  rep.checks.push_back({"gao_search_cap", "E - 1 <= n + Omega(n) + slack",
                        !record.gao.formula_cap_exceeded});
  return rep;
}

IdentityReport verify_identities(const Modulus& m, const SearchBudget& budget) {
  return verify_identities(compute_constants(m, WeightSet::all_units(m), budget), m);
}

}  // namespace gaoforge
