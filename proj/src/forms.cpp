#include "gaoforge/forms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "gaoforge/constants.hpp"
#include "gaoforge/engine.hpp"

namespace gaoforge {

namespace {

using ProfileMap = std::map<std::vector<Int>, FormTag>;

// Sorted class multisets of the chains (B b_1, B p_1 b_2, ..., B p_1..p_{k-1} b_k)
// over every ordering of `primes`, with b_i prime to p_i (and odd when
// keep_two). Calls emit(classes, ordering) once per distinct multiset and ordering.
void for_each_chain(const Modulus& m, Int base, std::vector<Int> primes, bool keep_two,
                    const std::function<void(const std::vector<Int>&, const std::vector<Int>&)>& emit) {
  const auto divs = m.divisors();
  std::sort(primes.begin(), primes.end());
  std::set<std::vector<Int>> seen;
  do {
    std::vector<Int> picked;
    std::function<void(std::size_t, Int)> step = [&](std::size_t i, Int prefix) {
      if (i == primes.size()) {
        auto sorted = picked;
        std::sort(sorted.begin(), sorted.end());
        if (seen.insert(sorted).second) emit(sorted, primes);
        return;
      }
      const Int q = primes[i];
      for (Int d : divs) {
        if (d % prefix != 0) continue;
        if (valuation_of(d, q) != valuation_of(prefix, q)) continue;
        if (keep_two && valuation_of(d, 2) != valuation_of(prefix, 2)) continue;
        picked.push_back(d);
        step(i + 1, prefix * q);
        picked.pop_back();
      }
    };
    step(0, base);
    seen.clear();
  } while (std::next_permutation(primes.begin(), primes.end()));
}

std::vector<Int> with_tail(std::vector<Int> head, Int value, Int count) {
  head.insert(head.end(), static_cast<std::size_t>(count), value);
  std::sort(head.begin(), head.end());
  return head;
}

std::vector<FormInstance> to_instances(Int n, const ProfileMap& map) {
  std::vector<FormInstance> out;
  for (const auto& [entries, tag] : map) out.push_back({{n, entries}, tag});
  return out;
}

std::vector<Int> drop_one(std::vector<Int> primes, Int p) {
  primes.erase(std::find(primes.begin(), primes.end(), p));
  return primes;
}

Int odd_count(const std::vector<Int>& entries) {
  return std::count_if(entries.begin(), entries.end(), [](Int d) { return d % 2 != 0; });
}

bool contains(const std::vector<FormInstance>& v, const CanonicalProfile& p, FormTag* tag) {
  for (const auto& f : v)
    if (f.profile == p) {
      if (tag) *tag = f.tag;
      return true;
    }
  return false;
}

// n = 2^r * p with r >= 2 and p an odd prime; returns {r, p}.
std::optional<std::pair<int, Int>> two_r_p(const Modulus& m) {
  const auto& f = m.factors();
  if (f.size() != 2 || f[0].prime != 2 || f[0].exponent < 2 || f[1].exponent != 1) return {};
  return std::pair<int, Int>{f[0].exponent, f[1].prime};
}

}  // namespace

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::Star: return "Star";
    case FormKind::Pow2Form: return "Pow2Form";
    case FormKind::Ast: return "Ast";
    case FormKind::AstAst: return "AstAst";
    case FormKind::StandardType: return "StandardType";
    case FormKind::AmpDavenport: return "AmpDavenport";
    case FormKind::SquarefreeDavenport: return "SquarefreeDavenport";
    case FormKind::None: return "None";
  }
  return "None";
}

const char* to_string(TheoremId t) {
  switch (t) {
    case TheoremId::Odd: return "odd";
    case TheoremId::Pow2: return "pow2";
    case TheoremId::TwoP: return "2p";
    case TheoremId::TwoRP: return "2rp";
  }
  return "";
}

const char* to_string(AuditPattern p) {
  switch (p) {
    case AuditPattern::ExactlyOnce: return "exactly_once";
    case AuditPattern::DoubledOnce: return "doubled_once";
    case AuditPattern::Violation: return "violation";
  }
  return "";
}

std::vector<FormInstance> star_forms(const Modulus& m) {
  const Int n = m.value();
  ProfileMap out;
  for_each_chain(m, 1, m.prime_multiset(), false, [&](const auto& chain, const auto& order) {
    out.emplace(with_tail(chain, n, n - 1), FormTag{FormKind::Star, order, -1, -1});
  });
  return to_instances(n, out);
}

std::vector<FormInstance> amp_davenport_forms(const Modulus& m) {
  ProfileMap out;
  for_each_chain(m, 1, m.prime_multiset(), false, [&](const auto& chain, const auto& order) {
    out.emplace(chain, FormTag{FormKind::AmpDavenport, order, -1, -1});
  });
  return to_instances(m.value(), out);
}

std::vector<FormInstance> ast_forms(const Modulus& m) {
  const Int n = m.value();
  if (n % 2 != 0) return {};
  ProfileMap out;
  for_each_chain(m, 1, drop_one(m.prime_multiset(), 2), false,
                 [&](const auto& chain, const auto& order) {
                   for (Int mult = 1; mult < n; mult += 2)
                     out.emplace(with_tail(with_tail(chain, n / 2, mult), n, n - mult),
                                 FormTag{FormKind::Ast, order, mult, -1});
                 });
  return to_instances(n, out);
}

std::vector<FormInstance> astast_forms(const Modulus& m) {
  const Int n = m.value();
  const int e = m.valuation(2);
  if (e < 1) return {};
  const Int odd = n / ipow(2, e);
  if (odd == 1) return {};
  const int r = e - 1;
  const auto divs = m.divisors();
  const Int n2 = n / 2;

  // One class with v_2 = i for each i < r, then c with v_2 >= r + 1.
  std::vector<std::vector<Int>> slots;
  for (int i = 0; i < r; ++i) {
    std::vector<Int> s;
    for (Int d : divs)
      if (valuation_of(d, 2) == i) s.push_back(d);
    slots.push_back(s);
  }
  std::vector<Int> cs;
  for (Int d : divs)
    if (valuation_of(d, 2) >= r + 1) cs.push_back(d);
  slots.push_back(cs);

  ProfileMap out;
  const auto odd_primes = Modulus(odd).prime_multiset();
  for_each_chain(m, ipow(2, r), odd_primes, true, [&](const auto& chain, const auto& order) {
    std::vector<Int> picked;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == slots.size()) {
        auto head = chain;
        head.insert(head.end(), picked.begin(), picked.end());
        out.emplace(with_tail(head, n2, n - 1), FormTag{FormKind::AstAst, order, n - 1, r});
        return;
      }
      for (Int d : slots[i]) {
        picked.push_back(d);
        fill(i + 1);
        picked.pop_back();
      }
    };
    fill(0);
  });
  return to_instances(n, out);
}

std::vector<FormInstance> pow2_forms(const Modulus& m) {
  const Int n = m.value();
  if (!m.is_prime_power() || m.factors()[0].prime != 2 || m.factors()[0].exponent < 2) return {};
  const int r = m.factors()[0].exponent;
  std::vector<Int> head;
  for (int i = 0; i <= r - 2; ++i) head.push_back(ipow(2, i));
  ProfileMap out;
  for (Int mult = 1; mult < n; mult += 2)
    out.emplace(with_tail(with_tail(head, n / 2, mult), n, n - mult),
                FormTag{FormKind::Pow2Form, {}, mult, r});
  return to_instances(n, out);
}

std::vector<FormTag> classify(const ResidueSequence& s) {
  const Modulus& m = s.modulus();
  const Int n = m.value();
  const auto units_ws = WeightSet::all_units(m);
  const auto profile = canonicalize(s, units_ws);
  std::vector<FormTag> tags;
  FormTag tag;
  if (contains(star_forms(m), profile, &tag)) tags.push_back(tag);
  if (contains(pow2_forms(m), profile, &tag)) tags.push_back(tag);
  if (contains(ast_forms(m), profile, &tag)) tags.push_back(tag);
  if (contains(astast_forms(m), profile, &tag)) tags.push_back(tag);

  const auto zeros = std::count(s.terms().begin(), s.terms().end(), Int{0});
  if (zeros == n - 1 && static_cast<Int>(s.size()) == n - 1 + m.big_omega() &&
      is_extremal(s, units_ws, ConstantKind::Gao))
    tags.push_back({FormKind::StandardType, {}, -1, -1});

  if (contains(amp_davenport_forms(m), profile, &tag)) tags.push_back(tag);
  if (n % 2 == 0 && m.is_squarefree() && n > 2 &&
      canonicalize(squarefree_davenport_witness(m), units_ws) == profile)
    tags.push_back({FormKind::SquarefreeDavenport, {}, -1, -1});

  if (tags.empty()) tags.push_back({});
  return tags;
}

std::optional<TheoremId> theorem_for(const Modulus& m) {
  const Int n = m.value();
  if (n % 2 != 0) return TheoremId::Odd;
  const auto& f = m.factors();
  if (f.size() == 1) {
    if (f[0].exponent >= 2) return TheoremId::Pow2;
    return std::nullopt;
  }
  if (f.size() == 2 && f[1].exponent == 1) {
    if (f[0].exponent == 1) return TheoremId::TwoP;
    return TheoremId::TwoRP;
  }
  return std::nullopt;
}

std::optional<ExtremalCatalog> predicted_gao_extremal(const Modulus& m) {
  const auto theorem = theorem_for(m);
  if (!theorem) return std::nullopt;
  std::set<CanonicalProfile> profiles;
  auto add = [&](const std::vector<FormInstance>& v, std::optional<Int> odd_terms) {
    for (const auto& f : v)
      if (!odd_terms || odd_count(f.profile.entries) == *odd_terms) profiles.insert(f.profile);
  };
  switch (*theorem) {
    case TheoremId::Odd:
      add(star_forms(m), std::nullopt);
      break;
    case TheoremId::Pow2:
      add(pow2_forms(m), std::nullopt);
      break;
    case TheoremId::TwoP:
      add(star_forms(m), std::nullopt);
      add(ast_forms(m), std::nullopt);
      add(astast_forms(m), std::nullopt);
      break;
    case TheoremId::TwoRP:
      add(ast_forms(m), 2);
      add(star_forms(m), 1);
      add(ast_forms(m), 1);
      add(astast_forms(m), 1);
      break;
  }
  ExtremalCatalog cat{m.value(), ConstantKind::Gao, "units", m.value() + m.big_omega(), {}, {}};
  for (const auto& p : profiles) cat.classes.push_back({p, representative(p)});
  return cat;
}

TheoremVerdict compare_with_prediction(const Modulus& m, const ExtremalCatalog& enumerated) {
  TheoremVerdict v;
  v.n = m.value();
  v.theorem = theorem_for(m);
  const auto predicted = predicted_gao_extremal(m);
  if (!predicted) {
    v.inconclusive = true;
    v.note = "no characterization for this modulus";
    return v;
  }
  std::set<CanonicalProfile> want, got;
  for (const auto& c : predicted->classes) want.insert(c.profile);
  for (const auto& c : enumerated.classes) got.insert(c.profile);
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                      std::back_inserter(v.missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                      std::back_inserter(v.extra));
  v.predicted = static_cast<Int>(want.size());
  v.enumerated = static_cast<Int>(got.size());
  v.pass = v.missing.empty() && v.extra.empty();
  return v;
}

TheoremVerdict verify_theorem(const Modulus& m, const SearchBudget& budget) {
  if (!theorem_for(m)) {
    TheoremVerdict v;
    v.n = m.value();
    v.inconclusive = true;
    v.note = "no characterization for this modulus";
    return v;
  }
  try {
    return compare_with_prediction(
        m, enumerate_gao_extremal(m, WeightSet::all_units(m), budget));
  } catch (const BudgetExhausted& e) {
    TheoremVerdict v;
    v.n = m.value();
    v.theorem = theorem_for(m);
    v.inconclusive = true;
    v.note = e.what();
    return v;
  }
}

ResidueSequence squarefree_davenport_witness(const Modulus& m) {
  const Int n = m.value();
  if (n % 2 != 0 || !m.is_squarefree() || m.factors().size() < 2)
    throw std::invalid_argument(std::to_string(n) + " is not 2 p_1 ... p_r with r >= 1");
  std::vector<Int> hats;
  for (const auto& f : m.factors())
    if (f.prime != 2) hats.push_back(n / (2 * f.prime));
  const Int odd = odd_count(hats);
  std::vector<Int> terms{odd % 2 == 0 ? Int{1} : Int{2}};
  terms.insert(terms.end(), hats.begin(), hats.end());
  return ResidueSequence(m, std::move(terms));
}

StructuralAudit structural_audit_2rp(const ResidueSequence& s) {
  const Modulus& m = s.modulus();
  const auto shape = two_r_p(m);
  if (!shape)
    throw std::invalid_argument(std::to_string(m.value()) + " is not 2^r p with r >= 2");
  StructuralAudit a;
  a.n = m.value();
  a.r = shape->first;
  a.p = shape->second;
  a.odd_multiple_counts.assign(static_cast<std::size_t>(a.r - 1), 0);
  for (Int x : s.terms()) {
    if (x == 0) continue;
    const int v = valuation_of(divisor_class(x, a.n), 2);
    if (v == 0) ++a.odd_terms;
    if (v <= a.r - 2) ++a.odd_multiple_counts[static_cast<std::size_t>(v)];
  }
  const auto& c = a.odd_multiple_counts;
  const auto ones = std::count(c.begin(), c.end(), Int{1});
  const auto twos = std::count(c.begin(), c.end(), Int{2});
  if (ones == static_cast<std::ptrdiff_t>(c.size())) {
    a.pattern = AuditPattern::ExactlyOnce;
  } else if (twos == 1 && ones + 1 == static_cast<std::ptrdiff_t>(c.size())) {
    a.pattern = AuditPattern::DoubledOnce;
    a.doubled_j = static_cast<int>(std::find(c.begin(), c.end(), Int{2}) - c.begin());
  }
  a.odd_terms_in_range = a.odd_terms >= 1 && a.odd_terms <= 2;
  a.at_most_two_odd = a.odd_terms <= 2;
  a.pass = a.pattern != AuditPattern::Violation && a.odd_terms_in_range;
  return a;
}

}  // namespace gaoforge
