#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gaoforge/catalog.hpp"
#include "gaoforge/constants.hpp"
#include "gaoforge/engine.hpp"
#include "gaoforge/forms.hpp"
#include "gaoforge/properties.hpp"
#include "gaoforge/report.hpp"

using namespace gaoforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool run(const char* id, const char* title, double limit_secs, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const BudgetExhausted& e) {
    o.fail(std::string("budget exhausted: ") + e.what());
  } catch (const std::exception& e) {
    o.fail(std::string("error: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && secs > limit_secs) o.fail("over time limit");
  std::printf("%s %s: %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.detail.empty() ? "" : " ", o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

std::string profiles_json(const ExtremalCatalog& c) { return to_json(c).dump(); }

bool has_tag(const std::vector<FormTag>& tags, FormKind k) {
  for (const auto& t : tags)
    if (t.kind == k) return true;
  return false;
}

Outcome theorem_matches(const std::vector<Int>& ns, bool audit) {
  Outcome o;
  SearchBudget budget;
  budget.threads = 4;
  for (Int n : ns) {
    const Modulus m(n);
    const auto cat = enumerate_gao_extremal(m, WeightSet::all_units(m), budget);
    const auto v = compare_with_prediction(m, cat);
    if (!v.pass)
      o.fail("n=" + std::to_string(n) + " predicted " + std::to_string(v.predicted) + " enumerated " +
             std::to_string(v.enumerated));
    if (audit)
      for (const auto& k : cat.classes)
        if (!structural_audit_2rp(k.representative).pass)
          o.fail("audit n=" + std::to_string(n) + " " + format_sequence(k.representative));
  }
  return o;
}

Outcome tally(std::initializer_list<PropertyTally> ts) {
  Outcome o;
  for (const auto& t : ts)
    if (!t.pass())
      o.fail(t.name + " " + t.scope + " " + t.first_counterexample.value_or("no cases"));
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto count = [&](bool ok) { failed += ok ? 0 : 1; };

  count(run("AC1", "E = n + Omega(n) and D = Omega(n) + 1 for n in [2, 40]", 300, [] {
    Outcome o;
    SearchBudget budget;
    budget.threads = 4;
    for (Int n = 2; n <= 40; ++n) {
      const Modulus m(n);
      const auto a = WeightSet::all_units(m);
      const Int e = gao_constant(m, a, budget).value;
      const Int d = davenport_constant(m, a, budget).value;
      if (e != n + m.big_omega()) o.fail("E(" + std::to_string(n) + ")=" + std::to_string(e));
      if (d != m.big_omega() + 1) o.fail("D(" + std::to_string(n) + ")=" + std::to_string(d));
    }
    return o;
  }));

  count(run("AC2", "Z_8 catalog has the 4 listed classes, stable", 1, [] {
    Outcome o;
    const Modulus m(8);
    const auto a = WeightSet::all_units(m);
    const auto c = enumerate_gao_extremal(m, a);
    std::vector<std::string> got;
    for (const auto& k : c.classes) got.push_back(format_sequence(k.representative));
    const std::vector<std::string> want{"1,2,4,4,4,4,4,4,4,0", "1,2,4,4,4,4,4,0x3", "1,2,4,4,4,0x5",
                                        "1,2,4,0x7"};
    if (got != want) o.fail("classes differ");
    if (profiles_json(c) != profiles_json(enumerate_gao_extremal(m, a))) o.fail("unstable");
    return o;
  }));

  count(run("AC3", "odd n: classes are standard type, form (star), prediction exact", 600, [] {
    Outcome o;
    SearchBudget budget;
    budget.threads = 4;
    for (Int n : {3, 5, 7, 9, 15, 21, 25, 27, 35, 45}) {
      const Modulus m(n);
      const auto cat = enumerate_gao_extremal(m, WeightSet::all_units(m), budget);
      for (const auto& k : cat.classes) {
        const auto tags = classify(k.representative);
        if (!has_tag(tags, FormKind::StandardType) || !has_tag(tags, FormKind::Star))
          o.fail("n=" + std::to_string(n) + " " + format_sequence(k.representative));
      }
      if (!compare_with_prediction(m, cat).pass) o.fail("prediction n=" + std::to_string(n));
    }
    return o;
  }));

  count(run("AC4", "n = 2p catalogs match prediction", 300, [] { return theorem_matches({6, 10, 14}, false); }));
  count(run("AC5", "n = 2^r catalogs match prediction", 300, [] { return theorem_matches({4, 8, 16}, false); }));
  count(run("AC6", "n = 2^r p catalogs match prediction and pass the audit", 3600,
            [] { return theorem_matches({12, 20, 24}, true); }));

  count(run("AC7", "lemma property suites", 3600, [] {
    return tally({check_gri(9), check_gri(27), check_gri(25), check_2r0(4), check_2r0(8), check_2r0(16),
                  check_w(6), check_w(10), check_lifts(10'000, 1), check_obs(10'000, 1, 60, 12)});
  }));

  count(run("AC8", "bitset DP equals subset x weight brute force, n <= 10, length <= 6", 3600,
            [] { return tally({check_dp_vs_naive(10, 6)}); }));

  count(run("AC9", "squarefree witnesses for n in {6, 30, 42}", 60, [] {
    Outcome o;
    for (Int n : {6, 30, 42}) {
      const Modulus m(n);
      const auto s = squarefree_davenport_witness(m);
      if (static_cast<Int>(s.size()) != m.big_omega()) o.fail("length n=" + std::to_string(n));
      if (has_wzs_subsequence(s, WeightSet::all_units(m))) o.fail("zero-sum n=" + std::to_string(n));
    }
    return o;
  }));

  count(run("AC10", "unit scaling and permutation invariance", 3600,
            [] { return tally({check_unit_invariance(10'000, 1)}); }));

  return failed == 0 ? 0 : 1;
}
