#include "tilings/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tilings/gfun.hpp"
#include "tilings/identities.hpp"
#include "tilings/series.hpp"

namespace tilings::cli {

namespace {

const std::map<std::string, Format> kFormats{
    {"paper", Format::paper}, {"csv", Format::csv}, {"json", Format::json}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

std::string render_tables(const std::vector<CountTable>& tables, Format format) {
  switch (format) {
    case Format::csv:
      return format_csv(tables);
    case Format::json:
      return format_json(tables);
    case Format::paper:
      break;
  }
  std::string out;
  for (const auto& t : tables) out += format_paper(t) + "\n";
  return out;
}

std::string do_table(const RunConfig& c) {
  std::vector<int> widths;
  if (c.n) widths.push_back(*c.n);
  else for (int n = 1; n <= require(c.n_max, "--n or --n-max"); ++n) widths.push_back(n);

  std::vector<CountTable> tables;
  for (int n : widths) {
    if (c.m) {
      tables.push_back(count_table(c.s, n, *c.m, c.state_cap));
    } else {
      auto sweep = table_sweep(c.s, n, require(c.m_max, "--m or --m-max"), c.state_cap);
      tables.insert(tables.end(), sweep.begin(), sweep.end());
    }
  }
  return render_tables(tables, c.format);
}

TransferGraph gf_graph(const RunConfig& c) {
  const int n = require(c.n, "--n");
  try {
    return enumerate_states(c.s, n, c.gf_cap);
  } catch (const StateCapExceeded& e) {
    throw GfCapExceeded(e.count(), c.gf_cap);
  }
}

std::string do_gf(const RunConfig& c) {
  if (c.format == Format::csv) throw UsageError("gf supports --format paper or json");
  TransferGraph g = gf_graph(c);
  RatFun gf = generating_function(build_matrix(g), c.gf_cap);
  std::optional<RatFun> sums;
  if (c.row_sums) sums = substitute_t(gf, 1);

  if (c.format == Format::json) {
    nlohmann::json j{{"s", c.s}, {"n", g.n}, {"states", g.size()},
                     {"gf", {{"num", gf.num().str()}, {"den", gf.den().str()}}}};
    if (sums) j["row_sums"] = {{"num", sums->num().str()}, {"den", sums->den().str()}};
    return j.dump(2) + "\n";
  }
  std::string out = gf.str() + "\n";
  if (sums) out += sums->str() + "\n";
  return out;
}

std::string do_verify(const RunConfig& c, bool& ok) {
  if (c.format == Format::csv) throw UsageError("verify supports --format paper or json");
  const int n_max = c.n_max.value_or(c.n.value_or(6));
  const int m_max = c.m_max.value_or(c.m.value_or(6));
  TableSource src(Caps{c.state_cap, c.oracle_cap});
  std::vector<IdentityReport> reports;
  reports.push_back(check_basic(src, {c.s, c.s}, {1, n_max}, {1, m_max}));
  reports.push_back(check_single_lane(src, c.s, {1, m_max}));
  reports.push_back(check_subwidth(src, {c.s, c.s}, m_max));
  reports.push_back(check_two_s_square(src, {c.s, c.s}));
  if (c.s == 2) reports.push_back(check_jacobsthal(src, m_max));
  reports.push_back(check_conjectures(src, {c.s, c.s}));
  reports.push_back(oracle_agreement(src));

  ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return c.format == Format::json ? render_json(reports) : render_text(reports);
}

std::string do_cas(const RunConfig& c) {
  return emit_cas_script(build_matrix(gf_graph(c)));
}

std::string do_graph(const RunConfig& c) {
  TransferGraph g = enumerate_states(c.s, require(c.n, "--n"), c.state_cap);
  return dump_states(g) + dump_edges(g);
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  CLI::App app{"Exact counts of tilings of rectangles by monomers and s x s squares"};
  app.require_subcommand(1);
  RunConfig cfg;
  int n = 0, n_max = 0, m = 0, m_max = 0;

  struct Flags {
    CLI::Option* n = nullptr;
    CLI::Option* n_max = nullptr;
    CLI::Option* m = nullptr;
    CLI::Option* m_max = nullptr;
  };
  std::map<std::string, Flags> flags;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    Flags& f = flags[name];
    sub->add_option("--s", cfg.s, "square side length")->check(CLI::PositiveNumber);
    f.n = sub->add_option("--n", n, "board width")->check(CLI::PositiveNumber);
    f.n_max = sub->add_option("--n-max", n_max, "sweep widths 1..N")->check(CLI::PositiveNumber);
    f.m = sub->add_option("--m", m, "board length")->check(CLI::NonNegativeNumber);
    f.m_max = sub->add_option("--m-max", m_max, "sweep lengths")->check(CLI::NonNegativeNumber);
    sub->add_option("--size-max", cfg.size_max, "largest square board")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "paper, csv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""));
    sub->add_option("--state-cap", cfg.state_cap, "maximum front states")->check(CLI::PositiveNumber);
    sub->add_option("--gf-cap", cfg.gf_cap, "maximum GF system dimension")->check(CLI::PositiveNumber);
    sub->add_option("--oracle-cap", cfg.oracle_cap, "maximum oracle board cells")
        ->check(CLI::Range(std::size_t{1}, kMaxOracleCells));
    sub->add_flag("--row-sums", cfg.row_sums, "also print the t=1 generating function");
    sub->add_option("--out", cfg.out_path, "write output to this file");
  };
  add("table", "count tables T(s,k) for an n x m sweep");
  add("gf", "bivariate generating function T_n(s,z,t)");
  add("square", "count tables for square boards 1..size-max");
  add("verify", "oracle agreement, identities and conjectures");
  add("cas", "emit a CAS script for the transfer system");
  add("graph", "dump front states and transfer edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    exit_code = code == 0 ? kExitOk : kExitUsage;
    return std::nullopt;
  }
  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  const Flags& f = flags[cfg.subcommand];
  if (f.n->count()) cfg.n = n;
  if (f.n_max->count()) cfg.n_max = n_max;
  if (f.m->count()) cfg.m = m;
  if (f.m_max->count()) cfg.m_max = m_max;
  exit_code = kExitOk;
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.s < 1) throw UsageError("--s must be at least 1");
    if (config.state_cap == 0 || config.gf_cap == 0 || config.oracle_cap == 0)
      throw UsageError("caps must be positive");

    bool ok = true;
    std::string text;
    if (config.subcommand == "table") {
      text = do_table(config);
    } else if (config.subcommand == "gf") {
      text = do_gf(config);
    } else if (config.subcommand == "square") {
      text = render_tables(square_table(config.s, config.size_max, config.state_cap), config.format);
    } else if (config.subcommand == "verify") {
      text = do_verify(config, ok);
    } else if (config.subcommand == "cas") {
      text = do_cas(config);
    } else if (config.subcommand == "graph") {
      text = do_graph(config);
    } else {
      throw UsageError("unknown subcommand '" + config.subcommand + "'");
    }

    if (config.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open " + config.out_path + " for writing");
      file << text;
    }
    return ok ? kExitOk : kExitVerifyFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const StateCapExceeded& e) {
    err << "error: " << e.what() << "; raise --state-cap (currently " << e.cap() << ")\n";
  } catch (const GfCapExceeded& e) {
    err << "error: " << e.what() << "; raise --gf-cap (currently " << e.cap() << ")\n";
  } catch (const BoardTooLarge& e) {
    err << "error: " << e.what() << "; raise --oracle-cap (currently " << e.cap() << ")\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace tilings::cli
