#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaoforge/catalog.hpp"
#include "gaoforge/residue.hpp"
#include "gaoforge/search.hpp"
#include "gaoforge/sequence.hpp"

namespace gaoforge {

enum class FormKind {
  Star,
  Pow2Form,
  Ast,
  AstAst,
  StandardType,
  AmpDavenport,
  SquarefreeDavenport,
  None
};

const char* to_string(FormKind k);

/// One matched form. Unused parameters stay empty / -1.
struct FormTag {
  FormKind kind = FormKind::None;
  std::vector<Int> prime_order;  // p_1..p_k of the prime chain
  Int multiplicity = -1;         // m: copies of n/2 (Ast) or of 2^{r-1} (Pow2Form)
  Int two_exponent = -1;         // r: n = 2^{r+1} * odd (AstAst), n = 2^r (Pow2Form)

  friend bool operator==(const FormTag&, const FormTag&) = default;
};

/// Tags are listed in priority order Star, Pow2Form, Ast, AstAst,
/// StandardType, AmpDavenport, SquarefreeDavenport; {None} when nothing matches.
/// Weights are the full unit group.
std::vector<FormTag> classify(const ResidueSequence& s);

/// Canonical profiles of every sequence of a form in Z_n, each with the
/// parameters of its first construction. Empty when the form needs a
/// different modulus shape.
struct FormInstance {
  CanonicalProfile profile;
  FormTag tag;
};
std::vector<FormInstance> star_forms(const Modulus& m);
std::vector<FormInstance> ast_forms(const Modulus& m);
std::vector<FormInstance> astast_forms(const Modulus& m);
std::vector<FormInstance> pow2_forms(const Modulus& m);
/// The prime chain alone, no zeros: zero-sum free of length Omega(n).
std::vector<FormInstance> amp_davenport_forms(const Modulus& m);

enum class TheoremId { Odd, Pow2, TwoP, TwoRP };

const char* to_string(TheoremId t);

/// The family n belongs to for prediction, if any: n odd (n >= 3), n = 2^r
/// with r >= 2, n = 2p, or n = 2^r p with r >= 2 (p an odd prime).
std::optional<TheoremId> theorem_for(const Modulus& m);

/// Gao-extremal catalog predicted from the form definitions; nullopt when n
/// is outside the supported families.
std::optional<ExtremalCatalog> predicted_gao_extremal(const Modulus& m);

struct TheoremVerdict {
  Int n = 0;
  std::optional<TheoremId> theorem;
  bool inconclusive = false;  // unsupported n or budget exhausted
  std::string note;
  Int predicted = 0;
  Int enumerated = 0;
  std::vector<CanonicalProfile> missing;  // predicted, not enumerated
  std::vector<CanonicalProfile> extra;    // enumerated, not predicted
  bool pass = false;
};

TheoremVerdict verify_theorem(const Modulus& m, const SearchBudget& budget = {});
/// Same comparison against a catalog already enumerated.
TheoremVerdict compare_with_prediction(const Modulus& m, const ExtremalCatalog& enumerated);

/// (a, n/(2p_1), ..., n/(2p_r)) with a in {1, 2} making the odd-term count odd.
/// Throws std::invalid_argument unless n = 2 p_1 ... p_r is squarefree with r >= 1.
ResidueSequence squarefree_davenport_witness(const Modulus& m);

enum class AuditPattern { ExactlyOnce, DoubledOnce, Violation };

const char* to_string(AuditPattern p);

struct StructuralAudit {
  Int n = 0;
  int r = 0;
  Int p = 0;
  std::vector<Int> odd_multiple_counts;  // index i: terms that are odd multiples of 2^i, i <= r-2
  Int odd_terms = 0;
  AuditPattern pattern = AuditPattern::Violation;
  std::optional<int> doubled_j;
  bool odd_terms_in_range = false;  // 1 <= odd terms <= 2
  bool at_most_two_odd = false;
  bool pass = false;
};

/// Throws std::invalid_argument unless n = 2^r p with r >= 2 and p an odd prime.
StructuralAudit structural_audit_2rp(const ResidueSequence& s);

}  // namespace gaoforge
