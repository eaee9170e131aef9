#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>

namespace areawalk::cli {

namespace {

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "pretty") return Format::pretty;
  throw UsageError("--format must be csv, json or pretty, got '" + text + "'");
}

struct RawOptions {
  std::optional<int> length;
  std::optional<std::int64_t> line;
  std::optional<std::int64_t> only_t;
  std::string format;
  std::string out;
  std::string suite = "all";
  std::string ps;
  int max_n = 10;
  std::optional<unsigned> threads;
  int brute_cap = 14;
  int dp_cap = 40;
  int formula_cap = kDefaultFormulaCap;
  std::string method = "all";
  std::string walk;
};

void add_common(CLI::App& sub, RawOptions& o) {
  sub.add_option("-n,--length", o.length, "Number of steps");
  sub.add_option("--format", o.format, "csv, json or pretty");
  sub.add_option("--out", o.out, "Write output to this file instead of stdout");
  sub.add_option("--threads", o.threads, "Worker threads (0 = all cores); overrides AREAWALK_THREADS");
  sub.add_option("--brute-cap", o.brute_cap, "Largest length for brute force")->capture_default_str();
  sub.add_option("--dp-cap", o.dp_cap, "Largest length for the DP oracle")->capture_default_str();
  sub.add_option("--formula-cap", o.formula_cap, "Largest length for composition sums")->capture_default_str();
}

RunConfig to_config(const std::string& command, const RawOptions& o) {
  RunConfig c;
  c.command = command;
  c.length = o.length;
  c.line = o.line;
  c.only_t = o.only_t;
  if (!o.format.empty()) c.format = parse_format(o.format);
  c.out_path = o.out;
  c.suite = o.suite;
  if (!o.ps.empty()) c.ps = parse_ps_list(o.ps);
  c.max_n = o.max_n;
  c.threads = o.threads ? *o.threads : threads_from_env();
  c.brute_cap = o.brute_cap;
  c.dp_cap = o.dp_cap;
  c.formula_cap = o.formula_cap;
  c.method = o.method;
  c.walk = o.walk;
  if (c.brute_cap < 1 || c.dp_cap < 1 || c.formula_cap < 1) throw UsageError("caps must be positive");
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of lattice walks by algebraic area", "areawalk"};
  app.require_subcommand(1);
  RawOptions o;

  CLI::App* gf = app.add_subcommand("gf", "Area generating function of open walks or of one line k+l=c");
  add_common(*gf, o);
  gf->add_option("--line", o.line, "Restrict to endpoints on k+l=c");

  CLI::App* count = app.add_subcommand("count", "Walk counts per doubled area from the binomial multi-sums");
  add_common(*count, o);
  count->add_option("--line", o.line, "0 selects the diagonal k+l=0");
  count->add_option("--only-t", o.only_t, "Report a single doubled area t");

  CLI::App* verify = app.add_subcommand("verify", "Run cross-checks; one JSON line per check");
  add_common(*verify, o);
  verify->add_option("--suite", o.suite, "formulas, oracle, restricted, torus, properties or all")->capture_default_str();
  verify->add_option("--ps", o.ps, "Torus parameters as p:s pairs, comma separated");
  verify->add_option("--max-n", o.max_n, "Largest length checked")->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "Time brute force, DP and composition sums; CSV n,method,millis,terms");
  add_common(*bench, o);
  bench->add_option("--max-n", o.max_n, "Largest length timed")->capture_default_str();
  bench->add_option("--method", o.method, "brute, dp, formula or all")->capture_default_str();

  CLI::App* walk = app.add_subcommand("walk", "Endpoint and doubled area of one walk over RLUD");
  add_common(*walk, o);
  walk->add_option("walk", o.walk, "Steps, e.g. RULD")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Endpoint histogram from the brute-force or DP oracle");
  add_common(*oracle, o);
  oracle->add_option("--method", o.method, "dp or brute");

  CLI::App* rep = app.add_subcommand("rep", "Quantum torus representation parameters and residuals as JSON");
  add_common(*rep, o);
  rep->add_option("--ps", o.ps, "p:s pairs, comma separated");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::map<CLI::App*, int (*)(const RunConfig&, std::ostream&, std::ostream&)> handlers{
      {gf, cmd_gf},         {count, cmd_count}, {verify, cmd_verify}, {bench, cmd_bench},
      {walk, cmd_walk},     {oracle, cmd_oracle}, {rep, cmd_rep},
  };
  CLI::App* chosen = app.get_subcommands().front();

  try {
    const RunConfig config = to_config(chosen->get_name(), o);
    if (config.out_path.empty()) return handlers.at(chosen)(config, out, err);
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open --out file '" + config.out_path + "'");
    const int code = handlers.at(chosen)(config, file, err);
    file.close();
    if (!file) {
      err << "areawalk: failed writing '" << config.out_path << "'\n";
      return kExitVerifyFailed;
    }
    return code;
  } catch (const UsageError& e) {
    err << "areawalk " << chosen->get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "areawalk " << chosen->get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace areawalk::cli
