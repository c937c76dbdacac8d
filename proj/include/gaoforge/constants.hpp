#pragma once

#include <string>
#include <vector>

#include "gaoforge/residue.hpp"
#include "gaoforge/search.hpp"
#include "gaoforge/sequence.hpp"

namespace gaoforge {

struct DavenportResult {
  Int value = 0;              // D_A(n)
  ResidueSequence witness;    // length D-1, no weighted zero-sum subsequence
  SearchStats stats;
};

struct GaoResult {
  Int value = 0;              // E_A(n)
  ResidueSequence witness;    // length E-1, no weighted zero-sum subsequence of length n
  SearchStats stats;
  /// For unit weights: E went past n + Omega(n) + slack. Never expected; reported, not hidden.
  bool formula_cap_exceeded = false;
};

/// Extra length tolerated above n + Omega(n) before flagging the Gao search.
inline constexpr Int kGaoCapSlack = 2;

/// Search ceilings on n used by the CLI unless overridden.
inline constexpr Int kDefaultDavenportCeiling = 120;
inline constexpr Int kDefaultGaoCeiling = 60;

/// Converts search entries (zero written as n) to residues.
ResidueSequence sequence_from_entries(const Modulus& m, const std::vector<Int>& entries);

/// D_A(n) by exhausting zero-sum-free multisets of term classes.
/// Throws BudgetExhausted.
DavenportResult davenport_constant(const Modulus& m, const WeightSet& a,
                                   const SearchBudget& budget = {});

/// E_A(n) by exhausting multisets of nonzero term classes, padding with zeros.
/// Throws BudgetExhausted.
GaoResult gao_constant(const Modulus& m, const WeightSet& a, const SearchBudget& budget = {});

struct ConstantsRecord {
  Int n = 0;
  std::string weights;
  DavenportResult davenport;
  GaoResult gao;
};

ConstantsRecord compute_constants(const Modulus& m, const WeightSet& a,
                                  const SearchBudget& budget = {});

struct IdentityCheck {
  std::string name;
  std::string statement;
  bool pass = false;
};

struct IdentityReport {
  Int n = 0;
  Int davenport = 0;
  Int gao = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// Computes D and E for the full unit group and checks E - D = n - 1 and
/// E = n + Omega(n), plus re-validation of both witnesses.
IdentityReport verify_identities(const Modulus& m, const SearchBudget& budget = {});
IdentityReport verify_identities(const ConstantsRecord& record, const Modulus& m);

}  // namespace gaoforge
