#include "gaoforge/commands.hpp"

#include <algorithm>
#include <functional>

#include "gaoforge/catalog.hpp"
#include "gaoforge/constants.hpp"
#include "gaoforge/engine.hpp"
#include "gaoforge/forms.hpp"
#include "gaoforge/properties.hpp"

namespace gaoforge {

namespace {

std::string reproduce(const RunConfig& c, Int n) {
  std::string s = "gaoforge " + c.command + " --n " + std::to_string(n);
  if (c.command == "constants" || c.command == "extremal") s += " --weights " + c.weights;
  if (c.command == "extremal") s += " --kind " + c.kind;
  if (!c.seq.empty()) s += " --seq " + c.seq;
  s += " --seed " + std::to_string(c.seed);
  return s;
}

std::string join(const std::vector<Int>& v, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

const char* verdict_word(bool pass) { return pass ? "pass" : "FAIL"; }

Int single_modulus(const RunConfig& c) {
  const auto ns = parse_moduli(c.moduli);
  if (ns.size() != 1) throw ParseError(c.command + " takes a single modulus");
  return ns.front();
}

void note_budget(Report& r, Json& entry, const std::string& what) {
  r.budget_exhausted = true;
  entry["budget_exhausted"] = what;
}

void cmd_constants(const RunConfig& c, Report& r) {
  r.columns = {"n", "weights", "D", "E", "n+Omega(n)", "identities"};
  for (Int n : parse_moduli(c.moduli)) {
    const Modulus m(n);
    const auto a = parse_weights(c.weights, m);
    Json entry;
    entry["n"] = n;
    if (n > c.gao_ceiling || n > c.davenport_ceiling) {
      note_budget(r, entry, "n above the search ceiling");
      r.results.push_back(entry);
      r.rows.push_back({std::to_string(n), a.describe(), "-", "-", "-", "budget"});
      continue;
    }
    try {
      const auto rec = compute_constants(m, a, c.budget);
      entry = to_json(rec);
      std::string verdict = "recorded";
      if (a.realizes_all_units()) {
        const auto ir = verify_identities(rec, m);
        entry["identities"] = to_json(ir);
        for (const auto& chk : ir.checks)
          if (!chk.pass) r.failures.push_back({chk.name, "n=" + std::to_string(n) + ": " + chk.statement,
                                               reproduce(c, n)});
        verdict = verdict_word(ir.all_pass());
      } else {
        entry["identities"] = {{"asserted", false},
                               {"gao_minus_davenport_is_n_minus_1",
                                rec.gao.value - rec.davenport.value == n - 1}};
      }
      r.results.push_back(entry);
      r.rows.push_back({std::to_string(n), a.describe(), std::to_string(rec.davenport.value),
                        std::to_string(rec.gao.value), std::to_string(n + m.big_omega()), verdict});
    } catch (const BudgetExhausted& e) {
      entry["search"] = to_json(e.stats());
      note_budget(r, entry, e.what());
      r.results.push_back(entry);
      r.rows.push_back({std::to_string(n), a.describe(), "-", "-", "-", "budget"});
    }
  }
}

void cmd_extremal(const RunConfig& c, Report& r) {
  if (c.kind != "gao" && c.kind != "davenport") throw ParseError("unknown kind '" + c.kind + "'");
  const bool gao = c.kind == "gao";
  r.columns = {"n", "kind", "class", "profile", "representative"};
  for (Int n : parse_moduli(c.moduli)) {
    const Modulus m(n);
    const auto a = parse_weights(c.weights, m);
    Json entry;
    entry["n"] = n;
    if (n > (gao ? c.gao_ceiling : c.davenport_ceiling)) {
      note_budget(r, entry, "n above the search ceiling");
      r.results.push_back(entry);
      continue;
    }
    try {
      const auto cat = gao ? enumerate_gao_extremal(m, a, c.budget)
                           : enumerate_davenport_extremal(m, a, c.budget);
      r.results.push_back(to_json(cat));
      for (std::size_t i = 0; i < cat.classes.size(); ++i)
        r.rows.push_back({std::to_string(n), c.kind, std::to_string(i + 1),
                          join(cat.classes[i].profile.entries),
                          format_sequence(cat.classes[i].representative)});
    } catch (const BudgetExhausted& e) {
      entry["search"] = to_json(e.stats());
      note_budget(r, entry, e.what());
      r.results.push_back(entry);
    }
  }
}

void cmd_classify(const RunConfig& c, Report& r) {
  const Modulus m(single_modulus(c));
  const auto s = parse_sequence(c.seq, m);
  const auto units_ws = WeightSet::all_units(m);
  const auto tags = classify(s);
  Json tag_json = Json::array();
  std::vector<std::string> names;
  for (const auto& t : tags) {
    tag_json.push_back(to_json(t));
    names.emplace_back(to_string(t.kind));
  }
  std::string joined;
  for (std::size_t i = 0; i < names.size(); ++i) joined += (i ? "," : "") + names[i];

  const Int n = m.value();
  const auto len = static_cast<Int>(s.size());
  const bool gao_ext = len == n - 1 + m.big_omega() && is_extremal(s, units_ws, ConstantKind::Gao);
  const bool dav_ext = len == m.big_omega() && is_extremal(s, units_ws, ConstantKind::Davenport);

  Json entry;
  entry["n"] = n;
  entry["sequence"] = format_sequence(s);
  entry["profile"] = to_json(canonicalize(s, units_ws))["profile"];
  entry["tags"] = tag_json;
  entry["primary"] = names.front();
  entry["gao_extremal"] = gao_ext;
  entry["davenport_extremal"] = dav_ext;
  const auto& f = m.factors();
  if (f.size() == 2 && f[0].prime == 2 && f[0].exponent >= 2 && f[1].exponent == 1)
    entry["audit_2rp"] = to_json(structural_audit_2rp(s));
  r.results.push_back(entry);
  r.columns = {"n", "sequence", "tags", "gao_extremal", "davenport_extremal"};
  r.rows.push_back({std::to_string(n), format_sequence(s), joined, gao_ext ? "yes" : "no",
                    dav_ext ? "yes" : "no"});
}

bool in_family(const std::string& family, const Modulus& m) {
  const auto t = theorem_for(m);
  if (!t) return false;
  if (family == "all") return true;
  if (family == "odd") return *t == TheoremId::Odd;
  if (family == "pow2") return *t == TheoremId::Pow2;
  if (family == "2p") return *t == TheoremId::TwoP;
  if (family == "2rp") return *t == TheoremId::TwoRP;
  throw ParseError("unknown family '" + family + "'");
}

void verify_modulus(const RunConfig& c, Report& r, Int n) {
  const Modulus m(n);
  const auto units_ws = WeightSet::all_units(m);
  Json entry;
  entry["n"] = n;
  Json checks = Json::array();
  auto check = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    r.rows.push_back({std::to_string(n), name, verdict_word(pass), detail});
    if (!pass) r.failures.push_back({name, "n=" + std::to_string(n) + ": " + detail, reproduce(c, n)});
  };
  auto finish = [&] {
    entry["checks"] = checks;
    r.results.push_back(entry);
  };
  if (n > c.gao_ceiling) {
    note_budget(r, entry, "n above the search ceiling");
    r.rows.push_back({std::to_string(n), "search", "budget", "n above the search ceiling"});
    return finish();
  }

  std::optional<ConstantsRecord> rec;
  try {
    rec = compute_constants(m, units_ws, c.budget);
  } catch (const BudgetExhausted& e) {
    note_budget(r, entry, e.what());
    r.rows.push_back({std::to_string(n), "constants", "budget", e.what()});
    return finish();
  }
  const auto ir = verify_identities(*rec, m);
  entry["identities"] = to_json(ir);
  for (const auto& chk : ir.checks) check(chk.name, chk.pass, chk.statement);

  const auto theorem = theorem_for(m);
  if (!theorem) {
    entry["theorem"] = nullptr;
    entry["note"] = "no characterization for this modulus";
    return finish();
  }
  std::optional<ExtremalCatalog> cat;
  try {
    cat = enumerate_gao_extremal(m, units_ws, c.budget, rec->gao.value);
  } catch (const BudgetExhausted& e) {
    note_budget(r, entry, e.what());
    r.rows.push_back({std::to_string(n), "enumeration", "budget", e.what()});
    return finish();
  }
  const auto verdict = compare_with_prediction(m, *cat);
  entry["theorem"] = to_string(*theorem);
  entry["verdict"] = to_json(verdict);
  check(std::string("theorem_") + to_string(*theorem), verdict.pass,
        "predicted " + std::to_string(verdict.predicted) + ", enumerated " +
            std::to_string(verdict.enumerated));

  // Standard-type classes lose their zeros to Davenport-extremal sequences.
  bool remark_ok = true;
  bool odd_forms_ok = true;
  Json audits = Json::array();
  bool audits_ok = true;
  for (const auto& k : cat->classes) {
    const auto tags = classify(k.representative);
    auto has = [&](FormKind f) {
      return std::any_of(tags.begin(), tags.end(), [&](const FormTag& t) { return t.kind == f; });
    };
    if (has(FormKind::StandardType)) {
      std::vector<Int> nonzero;
      for (Int x : k.representative.terms())
        if (x != 0) nonzero.push_back(x);
      const ResidueSequence stripped(m, nonzero);
      remark_ok = remark_ok && static_cast<Int>(stripped.size()) == rec->davenport.value - 1 &&
                  is_extremal(stripped, units_ws, ConstantKind::Davenport);
    }
    if (*theorem == TheoremId::Odd) odd_forms_ok = odd_forms_ok && has(FormKind::Star) && has(FormKind::StandardType);
    if (*theorem == TheoremId::TwoRP) {
      const auto audit = structural_audit_2rp(k.representative);
      audits_ok = audits_ok && audit.pass;
      Json a = to_json(audit);
      a["profile"] = to_json(k.profile)["profile"];
      audits.push_back(a);
    }
  }
  check("standard_type_remark", remark_ok, "zero-free part of each standard-type class is Davenport-extremal");
  if (*theorem == TheoremId::Odd)
    check("odd_classes_star_standard", odd_forms_ok, "every class is StandardType and Star");
  if (*theorem == TheoremId::TwoRP) {
    entry["audits"] = audits;
    check("structural_audit_2rp", audits_ok, "every class passes the 2^r p audit");
  }
  finish();
}

void cmd_verify(const RunConfig& c, Report& r) {
  std::vector<Int> ns;
  if (!c.moduli.empty()) {
    ns = parse_moduli(c.moduli);
    if (!c.family.empty())
      for (Int n : ns)
        if (!in_family(c.family, Modulus(n)))
          throw ParseError(std::to_string(n) + " is not in family " + c.family);
  } else {
    if (c.family.empty()) throw ParseError("verify needs --n or --family");
    const Int hi = c.max_n.value_or(c.family == "odd" ? 27 : 16);
    for (Int n = 2; n <= hi; ++n)
      if (in_family(c.family, Modulus(n))) ns.push_back(n);
    if (ns.empty()) throw ParseError("no modulus of family " + c.family + " up to " + std::to_string(hi));
  }
  r.columns = {"n", "check", "result", "detail"};
  for (Int n : ns) verify_modulus(c, r, n);

  if (!c.properties) return;
  std::vector<PropertyTally> tallies;
  for (Int n : {9, 27, 25}) tallies.push_back(check_gri(n));
  for (Int n : {4, 8, 16}) tallies.push_back(check_2r0(n));
  for (Int n : {6, 10}) tallies.push_back(check_w(n));
  tallies.push_back(check_lifts(c.trials, c.seed));
  tallies.push_back(check_obs(c.trials, c.seed));
  tallies.push_back(check_unit_invariance(c.trials, c.seed));
  if (c.full) tallies.push_back(check_dp_vs_naive());
  for (const auto& t : tallies) {
    r.properties.push_back(to_json(t));
    if (!t.pass())
      r.failures.push_back({"property_" + t.name,
                            t.scope + ": " + t.first_counterexample.value_or("no cases"),
                            "gaoforge verify --family " + (c.family.empty() ? std::string("all") : c.family) +
                                " --seed " + std::to_string(c.seed)});
  }
}

void cmd_project(const RunConfig& c, Report& r) {
  const Modulus m(single_modulus(c));
  const auto s = parse_sequence(c.seq, m);
  const Int n = m.value();
  Json entry;
  entry["n"] = n;
  entry["sequence"] = format_sequence(s);
  r.columns = {"target", "modulus", "image"};
  Json comps = Json::array();
  for (const auto& f : m.factors()) {
    const auto img = crt_project(s, f.prime);
    comps.push_back({{"prime", f.prime}, {"modulus", img.n()}, {"image", format_sequence(img)}});
    r.rows.push_back({"p=" + std::to_string(f.prime), std::to_string(img.n()), format_sequence(img)});
  }
  entry["components"] = comps;
  if (c.to) {
    if (*c.to < 1 || n % *c.to != 0)
      throw ParseError(std::to_string(*c.to) + " does not divide " + std::to_string(n));
    const auto img = reduce_terms(s, *c.to);
    std::string lit;
    for (std::size_t i = 0; i < img.size(); ++i) lit += (i ? "," : "") + std::to_string(img[i]);
    entry["natural_map"] = {{"modulus", *c.to}, {"image", lit}};
    r.rows.push_back({"natural", std::to_string(*c.to), lit});
  }
  if (!s.empty()) {
    const auto units_ws = WeightSet::all_units(m);
    Json agree = Json::array();
    auto compare = [&](std::optional<std::size_t> len) {
      const bool direct = len ? has_wzs_subsequence_of_length(s, units_ws, *len)
                              : has_wzs_subsequence(s, units_ws);
      const bool comp = crt_equivalent_check(s, units_ws, len);
      agree.push_back({{"length", len ? Json(*len) : Json("any")},
                       {"direct", direct},
                       {"components", comp}});
      if (direct != comp)
        r.failures.push_back({"obs_agreement", "direct and component checks differ", reproduce(c, n)});
    };
    compare(std::nullopt);
    if (s.size() >= static_cast<std::size_t>(n)) compare(static_cast<std::size_t>(n));
    entry["zero_sum"] = agree;
  }
  r.results.push_back(entry);
}

}  // namespace

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["n"] = c.moduli;
  j["weights"] = c.weights;
  if (c.command == "extremal") j["kind"] = c.kind;
  if (!c.family.empty()) j["family"] = c.family;
  if (c.max_n) j["max_n"] = *c.max_n;
  if (!c.seq.empty()) j["seq"] = c.seq;
  if (c.to) j["to"] = *c.to;
  j["budget"] = {{"nodes", c.budget.max_nodes},
                 {"seconds", c.budget.max_seconds},
                 {"gao_ceiling", c.gao_ceiling},
                 {"davenport_ceiling", c.davenport_ceiling}};
  j["threads"] = c.budget.threads;
  j["seed"] = c.seed;
  if (c.command == "verify") {
    j["trials"] = c.trials;
    j["properties"] = c.properties;
    j["full"] = c.full;
  }
  return j;
}

Report run_command(const RunConfig& c) {
  Report r;
  r.command = c.command;
  r.config = config_json(c);
  try {
    if (c.budget.max_nodes == 0 || !(c.budget.max_seconds > 0) || c.budget.threads == 0)
      throw ParseError("budgets and thread count must be positive");
    if (c.command == "constants") cmd_constants(c, r);
    else if (c.command == "extremal") cmd_extremal(c, r);
    else if (c.command == "classify") cmd_classify(c, r);
    else if (c.command == "verify") cmd_verify(c, r);
    else if (c.command == "project") cmd_project(c, r);
    else throw ParseError("unknown command '" + c.command + "'");
  } catch (const std::invalid_argument& e) {
    r.parse_error = e.what();
  } catch (const std::out_of_range& e) {
    r.parse_error = e.what();
  }
  return r;
}

}  // namespace gaoforge
