#include "gaoforge/report.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace gaoforge {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Int parse_int(const std::string& tok, const std::string& what) {
  Int v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (tok.empty() || ec != std::errc() || ptr != last)
    throw ParseError("bad " + what + " '" + tok + "'");
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* status_name(int code) {
  switch (code) {
    case 0: return "ok";
    case 1: return "failed";
    case 2: return "budget_exhausted";
    default: return "parse_error";
  }
}

Json profile_entries(const std::vector<Int>& e) {
  Json a = Json::array();
  for (Int x : e) a.push_back(x);
  return a;
}

Json sequence_json(const ResidueSequence& s) {
  Json j;
  j["n"] = s.n();
  j["terms"] = format_sequence(s);
  return j;
}

}  // namespace

ResidueSequence parse_sequence(const std::string& literal, const Modulus& m) {
  const Int n = m.value();
  std::vector<Int> terms;
  if (trim(literal).empty()) return ResidueSequence(m, {});
  for (const auto& tok : split(literal, ',')) {
    if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
      const Int run = parse_int(tok.substr(2), "zero run");
      if (run < 1) throw ParseError("zero run must be positive in '" + tok + "'");
      terms.insert(terms.end(), static_cast<std::size_t>(run), 0);
      continue;
    }
    const Int v = parse_int(tok, "term");
    if (v < 0 || v >= n)
      throw ParseError("term " + tok + " outside [0, " + std::to_string(n) + ")");
    terms.push_back(v);
  }
  return ResidueSequence(m, std::move(terms));
}

std::string format_sequence(const ResidueSequence& s) {
  std::string out;
  const auto& t = s.terms();
  for (std::size_t i = 0; i < t.size();) {
    if (!out.empty()) out += ',';
    std::size_t j = i;
    while (j < t.size() && t[j] == 0) ++j;
    if (j - i >= 2) {
      out += "0x" + std::to_string(j - i);
      i = j;
    } else {
      out += std::to_string(t[i]);
      ++i;
    }
  }
  return out;
}

std::vector<Int> parse_moduli(const std::string& spec) {
  std::set<Int> out;
  for (const auto& item : split(spec, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.insert(parse_int(item, "modulus"));
      continue;
    }
    const Int lo = parse_int(trim(item.substr(0, dots)), "range start");
    const Int hi = parse_int(trim(item.substr(dots + 2)), "range end");
    if (hi < lo) throw ParseError("empty range '" + item + "'");
    for (Int n = lo; n <= hi; ++n) out.insert(n);
  }
  if (out.empty()) throw ParseError("no modulus given");
  if (*out.begin() < 2) throw ParseError("moduli must be at least 2");
  return {out.begin(), out.end()};
}

WeightSet parse_weights(const std::string& spec, const Modulus& m) {
  const auto s = trim(spec);
  if (s.empty() || s == "units") return WeightSet::all_units(m);
  std::vector<Int> res;
  for (const auto& tok : split(s, ',')) res.push_back(mod(parse_int(tok, "weight"), m.value()));
  return WeightSet::explicit_set(m, std::move(res));
}

Json to_json(const SearchStats& s) {
  Json j;
  j["nodes"] = s.nodes;
  return j;
}

Json to_json(const ConstantsRecord& r) {
  Json j;
  j["n"] = r.n;
  j["weights"] = r.weights;
  j["davenport"] = r.davenport.value;
  j["gao"] = r.gao.value;
  j["davenport_witness"] = sequence_json(r.davenport.witness);
  j["gao_witness"] = sequence_json(r.gao.witness);
  j["search"] = {{"davenport", to_json(r.davenport.stats)}, {"gao", to_json(r.gao.stats)}};
  return j;
}

Json to_json(const IdentityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"statement", c.statement}, {"pass", c.pass}});
  Json j;
  j["n"] = r.n;
  j["checks"] = checks;
  j["pass"] = r.all_pass();
  return j;
}

Json to_json(const CanonicalProfile& p) {
  Json j;
  j["n"] = p.n;
  j["profile"] = profile_entries(p.entries);
  return j;
}

Json to_json(const ExtremalCatalog& c) {
  Json classes = Json::array();
  for (const auto& k : c.classes)
    classes.push_back({{"profile", profile_entries(k.profile.entries)},
                       {"representative", format_sequence(k.representative)}});
  Json j;
  j["n"] = c.n;
  j["kind"] = to_string(c.kind);
  j["weights"] = c.weights;
  j["constant"] = c.constant;
  j["length"] = c.constant - 1;
  j["class_count"] = c.classes.size();
  j["classes"] = classes;
  j["search"] = to_json(c.stats);
  return j;
}

Json to_json(const FormTag& t) {
  Json j;
  j["kind"] = to_string(t.kind);
  if (!t.prime_order.empty()) j["prime_order"] = profile_entries(t.prime_order);
  if (t.multiplicity >= 0) j["multiplicity"] = t.multiplicity;
  if (t.two_exponent >= 0) j["two_exponent"] = t.two_exponent;
  return j;
}

Json to_json(const TheoremVerdict& v) {
  Json missing = Json::array(), extra = Json::array();
  for (const auto& p : v.missing) missing.push_back(profile_entries(p.entries));
  for (const auto& p : v.extra) extra.push_back(profile_entries(p.entries));
  Json j;
  j["n"] = v.n;
  j["theorem"] = v.theorem ? Json(to_string(*v.theorem)) : Json(nullptr);
  j["predicted"] = v.predicted;
  j["enumerated"] = v.enumerated;
  j["missing"] = missing;
  j["extra"] = extra;
  j["inconclusive"] = v.inconclusive;
  if (!v.note.empty()) j["note"] = v.note;
  j["pass"] = v.pass;
  return j;
}

Json to_json(const StructuralAudit& a) {
  Json j;
  j["n"] = a.n;
  j["r"] = a.r;
  j["p"] = a.p;
  j["odd_multiple_counts"] = profile_entries(a.odd_multiple_counts);
  j["odd_terms"] = a.odd_terms;
  j["pattern"] = to_string(a.pattern);
  j["doubled_j"] = a.doubled_j ? Json(*a.doubled_j) : Json(nullptr);
  j["odd_terms_in_range"] = a.odd_terms_in_range;
  j["at_most_two_odd"] = a.at_most_two_odd;
  j["pass"] = a.pass;
  return j;
}

Json to_json(const PropertyTally& t) {
  Json j;
  j["name"] = t.name;
  j["scope"] = t.scope;
  j["cases"] = t.cases;
  j["violations"] = t.violations;
  j["first_counterexample"] = t.first_counterexample ? Json(*t.first_counterexample) : Json(nullptr);
  j["pass"] = t.pass();
  return j;
}

int Report::exit_code() const {
  if (parse_error) return 3;
  if (!failures.empty()) return 1;
  if (budget_exhausted) return 2;
  return 0;
}

Json Report::to_json() const {
  Json fails = Json::array();
  for (const auto& f : failures)
    fails.push_back({{"check", f.check}, {"detail", f.detail}, {"reproduce", f.reproduce}});
  const int code = exit_code();
  Json j;
  j["schema"] = "gaoforge-report";
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = config;
  j["results"] = results;
  j["properties"] = properties;
  j["failures"] = fails;
  if (parse_error) j["parse_error"] = *parse_error;
  j["status"] = status_name(code);
  j["exit_code"] = code;
  return j;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw ParseError("unknown format '" + s + "'");
}

std::string render(const Report& r, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::Json:
      out << r.to_json().dump(2) << '\n';
      break;
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
      };
      line(r.columns);
      for (const auto& row : r.rows) line(row);
      break;
    }
    case Format::Text: {
      std::vector<std::size_t> width(r.columns.size(), 0);
      auto grow = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
          width[i] = std::max(width[i], cells[i].size());
      };
      grow(r.columns);
      for (const auto& row : r.rows) grow(row);
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << s << '\n';
      };
      line(r.columns);
      for (const auto& row : r.rows) line(row);
      for (const auto& p : r.properties)
        out << "property " << p["name"].get<std::string>() << ": "
            << (p["pass"].get<bool>() ? "pass" : "FAIL") << " (" << p["cases"].get<std::uint64_t>()
            << " cases)\n";
      for (const auto& fl : r.failures) out << "FAILED " << fl.check << ": " << fl.detail << '\n';
      const int code = r.exit_code();
      if (r.parse_error) out << "parse error: " << *r.parse_error << '\n';
      out << "status: " << status_name(code) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace gaoforge
