#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaoforge/commands.hpp"
#include "gaoforge/report.hpp"

using namespace gaoforge;

TEST_CASE("sequence literals") {
  const Modulus m(12);
  const auto s = parse_sequence("1,2,4,0x11", m);
  CHECK(s.size() == 14);
  CHECK(s.terms()[3] == 0);
  CHECK(format_sequence(s) == "1,2,4,0x11");
  CHECK(format_sequence(parse_sequence("0,3,0", m)) == "0,3,0");
  CHECK(format_sequence(parse_sequence("0x2,5", m)) == "0x2,5");
  CHECK(parse_sequence("", m).empty());
  CHECK(parse_sequence(" 1 , 2 ", m).terms() == std::vector<Int>{1, 2});
  for (const char* bad : {"12", "-1", "a", "1,,2", "0x", "1x3"})
    CHECK_THROWS_AS(parse_sequence(bad, m), ParseError);
}

TEST_CASE("moduli and weights") {
  CHECK(parse_moduli("8") == std::vector<Int>{8});
  CHECK(parse_moduli("2..5") == std::vector<Int>{2, 3, 4, 5});
  CHECK(parse_moduli("24,12,20,12") == std::vector<Int>{12, 20, 24});
  CHECK(parse_moduli("2..4,9") == std::vector<Int>{2, 3, 4, 9});
  for (const char* bad : {"1", "5..3", "x", "", "2..", "0"}) CHECK_THROWS_AS(parse_moduli(bad), ParseError);
  const Modulus m(10);
  CHECK(parse_weights("units", m).kind() == WeightSet::Kind::AllUnits);
  CHECK(parse_weights("1,9", m).residues().size() == 2);
  CHECK(parse_weights("", m).kind() == WeightSet::Kind::AllUnits);
  CHECK_THROWS_AS(parse_weights("1,q", m), ParseError);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("exit code precedence") {
  Report r;
  CHECK(r.exit_code() == 0);
  r.budget_exhausted = true;
  CHECK(r.exit_code() == 2);
  r.failures.push_back({"x", "y", "z"});
  CHECK(r.exit_code() == 1);
  r.parse_error = "bad";
  CHECK(r.exit_code() == 3);
  const auto j = r.to_json();
  CHECK(j["schema"] == "gaoforge-report");
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["exit_code"] == 3);
}

TEST_CASE("commands") {
  RunConfig c;
  c.command = "constants";
  c.moduli = "2..12";
  const auto a = run_command(c);
  CHECK(a.exit_code() == 0);
  CHECK(a.results.size() == 11);
  CHECK(render(a, Format::Json) == render(run_command(c), Format::Json));
  c.budget.threads = 4;
  CHECK(a.results.dump() == run_command(c).results.dump());
  const auto csv = render(a, Format::Csv);
  CHECK(csv.find('\n') != std::string::npos);

  RunConfig bad;
  bad.command = "constants";
  bad.moduli = "1..4";
  const auto e = run_command(bad);
  CHECK(e.exit_code() == 3);
  CHECK(e.to_json()["status"].is_string());

  RunConfig starve = c;
  starve.moduli = "24";
  starve.budget.max_nodes = 5;
  CHECK(run_command(starve).exit_code() == 2);

  RunConfig cls;
  cls.command = "classify";
  cls.moduli = "8";
  cls.seq = "1,2,4,0x7";
  const auto k = run_command(cls);
  CHECK(k.exit_code() == 0);
  cls.seq = "1,2,9";
  CHECK(run_command(cls).exit_code() == 3);

  RunConfig ext;
  ext.command = "extremal";
  ext.moduli = "6";
  const auto x = run_command(ext);
  CHECK(x.exit_code() == 0);
  CHECK(x.results[0]["classes"].size() == 8);

  RunConfig prj;
  prj.command = "project";
  prj.moduli = "12";
  prj.seq = "1,5,7,11";
  prj.to = 4;
  CHECK(run_command(prj).exit_code() == 0);
  prj.to = 5;
  CHECK(run_command(prj).exit_code() == 3);

  RunConfig ver;
  ver.command = "verify";
  ver.family = "2p";
  ver.max_n = 10;
  ver.trials = 50;
  const auto v = run_command(ver);
  CHECK(v.exit_code() == 0);
  CHECK(v.failures.empty());
}
