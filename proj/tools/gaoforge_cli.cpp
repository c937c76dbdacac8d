#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gaoforge/commands.hpp"

using namespace gaoforge;

namespace {

int emit(const Report& r, Format format, const std::string& out) {
  const auto text = render(r, format);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out << '\n';
      return 3;
    }
    f << text;
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted zero-sum constants, extremal sequences and structure checks over Z_n"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string format = "json";
  std::string out;
  Int max_n = 0;
  Int to = 0;
  double secs = cfg.budget.max_seconds;
  bool no_properties = false;

  app.add_option("--n", cfg.moduli, "Modulus: 8, 2..16 or 12,20,24")->envname("GAOFORGE_N");
  app.add_option("--kind", cfg.kind, "gao or davenport")->envname("GAOFORGE_KIND");
  app.add_option("--weights", cfg.weights, "units or a residue list")->envname("GAOFORGE_WEIGHTS");
  app.add_option("--budget-nodes", cfg.budget.max_nodes, "Search node ceiling")
      ->envname("GAOFORGE_BUDGET_NODES");
  app.add_option("--budget-secs", secs, "Search wall-clock ceiling")->envname("GAOFORGE_BUDGET_SECS");
  app.add_option("--threads", cfg.budget.threads, "Worker threads")->envname("GAOFORGE_THREADS");
  app.add_option("--format", format, "json, csv or text")->envname("GAOFORGE_FORMAT");
  app.add_option("--out", out, "Write the report here instead of stdout")->envname("GAOFORGE_OUT");
  app.add_option("--seed", cfg.seed, "Seed for randomized property suites")->envname("GAOFORGE_SEED");
  app.add_option("--seq", cfg.seq, "Sequence literal, e.g. 1,2,4,0x7")->envname("GAOFORGE_SEQ");
  app.add_option("--family", cfg.family, "odd, pow2, 2p, 2rp or all")->envname("GAOFORGE_FAMILY");
  app.add_option("--max-n", max_n, "Largest modulus for --family")->envname("GAOFORGE_MAX_N");
  app.add_option("--to", to, "project: also reduce to this divisor of n")->envname("GAOFORGE_TO");
  app.add_option("--trials", cfg.trials, "Randomized property trials")->envname("GAOFORGE_TRIALS");
  app.add_option("--gao-ceiling", cfg.gao_ceiling, "Largest n searched for E")
      ->envname("GAOFORGE_GAO_CEILING");
  app.add_option("--davenport-ceiling", cfg.davenport_ceiling, "Largest n searched for D")
      ->envname("GAOFORGE_DAVENPORT_CEILING");
  app.add_flag("--no-properties", no_properties, "verify: skip the property suites");
  app.add_flag("--full", cfg.full, "verify: add the exhaustive DP-vs-naive suite");

  for (const char* name : {"constants", "extremal", "classify", "verify", "project"})
    app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Report r;
    r.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    r.parse_error = e.what();
    Format f = Format::Json;
    try {
      f = parse_format(format);
    } catch (const ParseError&) {
    }
    return emit(r, f, out);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.budget.max_seconds = secs;
  if (max_n > 0) cfg.max_n = max_n;
  if (app.count("--to") || std::getenv("GAOFORGE_TO")) cfg.to = to;
  cfg.properties = !no_properties;

  Format f = Format::Json;
  try {
    f = parse_format(format);
  } catch (const ParseError& e) {
    Report r;
    r.command = cfg.command;
    r.config = config_json(cfg);
    r.parse_error = e.what();
    return emit(r, Format::Json, out);
  }
  return emit(run_command(cfg), f, out);
}
