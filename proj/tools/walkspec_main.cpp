#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "walkspec/enumerate.hpp"
#include "walkspec/explorer/analyze.hpp"
#include "walkspec/explorer/converge.hpp"
#include "walkspec/explorer/repro.hpp"
#include "walkspec/explorer/search.hpp"
#include "walkspec/explorer/verify.hpp"
#include "walkspec/families.hpp"
#include "walkspec/graph_io.hpp"

namespace {

using namespace walkspec;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

/// Usage problems detected after CLI11 parsing (bad lists, missing input).
class UsageError : public Error {
 public:
  using Error::Error;
};

struct CommonFlags {
  std::string input;
  std::string format = "edgelist";
  std::string family;
  std::string report = "text";
  std::string q, r, p;
  int jobs = 1;
  double tolerance = kVerdictTolerance;
  bool no_timestamp = false;
};

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<Graph> load_graphs(const CommonFlags& f) {
  if (!f.family.empty()) {
    if (!f.input.empty()) throw UsageError("use either --input or --family, not both");
    return {GraphFamily::parse(f.family).build()};
  }
  if (f.input.empty()) throw UsageError("no input: pass --input PATH|- or --family SPEC");
  std::vector<Graph> graphs = parse_graphs(read_source(f.input), parse_format(f.format));
  if (graphs.empty()) throw ParseError("input contains no graph");
  return graphs;
}

Graph load_single(const CommonFlags& f) {
  auto graphs = load_graphs(f);
  if (graphs.size() != 1) throw UsageError("expected exactly one graph, got " + std::to_string(graphs.size()));
  return graphs.front();
}

std::vector<int> list_or(const std::string& text, std::vector<int> fallback) {
  if (text.empty()) return fallback;
  try {
    return parse_int_list(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

ParameterGrid grid_of(const CommonFlags& f) {
  ParameterGrid grid;
  grid.q = list_or(f.q, grid.q);
  grid.r = list_or(f.r, grid.r);
  grid.p = list_or(f.p, grid.p);
  return grid;
}

template <typename T>
void emit(const T& value, const CommonFlags& f) {
  if (f.report == "json") {
    std::cout << to_json(value).dump(2) << '\n';
  } else {
    std::cout << render_text(value);
  }
}

void add_input(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--input,-i", f.input, "Graph file, or - for stdin");
  cmd->add_option("--format", f.format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_option("--family", f.family, "Generator, e.g. kmp:2,2,1, C:6, petersen");
}

void add_report(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--report", f.report, "text or json")->check(CLI::IsMember({"text", "json"}));
}

void add_grid(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--q", f.q, "Comma-separated q values");
  cmd->add_option("--r", f.r, "Comma-separated r values");
  cmd->add_option("--p", f.p, "Comma-separated p values");
  cmd->add_option("--tolerance", f.tolerance, "Relative verdict slack")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walk counts, spectra and spectral-radius bounds of small graphs"};
  app.require_subcommand(1);
  CommonFlags f;
  int code = kExitOk;
  std::function<int()> action;

  auto* analyze_cmd = app.add_subcommand("analyze", "Every bound and structural flag for one graph");
  add_input(analyze_cmd, f);
  add_report(analyze_cmd, f);
  add_grid(analyze_cmd, f);
  analyze_cmd->add_flag("--no-timestamp", f.no_timestamp, "Omit the timestamp from JSON output");
  analyze_cmd->callback([&] {
    action = [&] {
      const Graph g = load_single(f);
      AnalysisReport rep = analyze(g, grid_of(f), f.tolerance);
      if (!f.no_timestamp) rep.meta.timestamp = json_io::utc_timestamp();
      emit(rep, f);
      return rep.violations() ? kExitViolation : kExitOk;
    };
  });

  int max_n = 0;
  bool all_graphs = false;
  bool skip_ms = false;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every theorem on a corpus");
  add_input(verify_cmd, f);
  add_report(verify_cmd, f);
  add_grid(verify_cmd, f);
  verify_cmd->add_option("--max-n", max_n, "Enumerate graphs up to this order instead of reading input")
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  verify_cmd->add_flag("--all", all_graphs, "Include disconnected graphs in the enumeration");
  verify_cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--skip-ms", skip_ms, "Skip the Motzkin-Straus ascent");
  verify_cmd->callback([&] {
    action = [&] {
      VerifyOptions opt;
      opt.grid = grid_of(f);
      opt.jobs = f.jobs;
      opt.tolerance = f.tolerance;
      opt.motzkin_straus = !skip_ms;
      std::vector<Graph> graphs;
      if (max_n > 0) {
        if (!f.input.empty() || !f.family.empty()) throw UsageError("use either --max-n or an input");
        graphs = enumerate_corpus(max_n, !all_graphs);
      } else {
        graphs = load_graphs(f);
      }
      const VerifySummary summary = verify_corpus(graphs, opt);
      emit(summary, f);
      return summary.ok() ? kExitOk : kExitViolation;
    };
  });

  std::string repro_id;
  auto* repro_cmd = app.add_subcommand("repro", "Reproduce a worked example");
  repro_cmd->add_option("id", repro_id, "kab_even_q, k2t2t or k4n4n_n")->required();
  add_report(repro_cmd, f);
  repro_cmd->callback([&] {
    action = [&] {
      ReproReport rep;
      try {
        rep = repro(repro_id);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      emit(rep, f);
      return rep.ok() ? kExitOk : kExitViolation;
    };
  });

  int converge_r = 1;
  std::vector<double> eps_list{1e-1, 1e-2, 1e-3, 1e-6};
  ConvergeOptions converge_opt;
  auto* converge_cmd = app.add_subcommand("converge", "Empirical q0(eps) for the walk-ratio sequence");
  add_input(converge_cmd, f);
  add_report(converge_cmd, f);
  converge_cmd->add_option("--r", converge_r, "Exponent r")->check(CLI::PositiveNumber);
  converge_cmd->add_option("--eps", eps_list, "Tolerances")->delimiter(',');
  converge_cmd->add_option("--max-q", converge_opt.max_q, "Largest q")->check(CLI::PositiveNumber);
  converge_cmd->add_option("--bit-budget", converge_opt.bit_budget, "Largest walk count size in bits");
  converge_cmd->callback([&] {
    action = [&] {
      const Graph g = load_single(f);
      ConvergeResult res;
      try {
        res = converge(g, converge_r, eps_list, converge_opt);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      emit(res, f);
      return kExitOk;
    };
  });

  SearchOptions search_opt;
  std::string odd_r;
  auto* search_cmd = app.add_subcommand("search", "Even-q walk-ratio question on connected bipartite graphs");
  search_cmd->add_option("--input,-i", f.input, "graph6 corpus instead of enumeration");
  search_cmd->add_option("--max-n", search_opt.max_n, "Largest order to enumerate")
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  search_cmd->add_option("--q", f.q, "Even q values");
  search_cmd->add_option("--r", f.r, "r values; odd entries are logged separately");
  search_cmd->add_option("--odd-r", odd_r, "Odd r values for the separate log");
  search_cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-graphs", search_opt.max_graphs, "Graph budget (0 = none)");
  search_cmd->add_option("--tolerance", f.tolerance, "Relative verdict slack")->check(CLI::PositiveNumber);
  add_report(search_cmd, f);
  search_cmd->callback([&] {
    action = [&] {
      search_opt.q = list_or(f.q, search_opt.q);
      search_opt.r = list_or(f.r, search_opt.r);
      search_opt.odd_r = list_or(odd_r, search_opt.odd_r);
      search_opt.jobs = f.jobs;
      search_opt.tolerance = f.tolerance;
      if (!f.input.empty()) {
        f.format = "graph6";
        search_opt.corpus = load_graphs(f);
      }
      SearchOutcome out;
      try {
        out = search_problem(search_opt);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      emit(out, f);
      return out.violations.empty() ? kExitOk : kExitViolation;
    };
  });

  int enum_n = 0;
  bool enum_all = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "List graphs up to isomorphism in graph6");
  enum_cmd->add_option("--n", enum_n, "Vertex count")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  enum_cmd->add_flag("--all", enum_all, "Include disconnected graphs");
  enum_cmd->callback([&] {
    action = [&] {
      for (const Graph& g : enumerate_graphs(enum_n, !enum_all)) std::cout << emit_graph6(g) << '\n';
      return kExitOk;
    };
  });

  std::string to_format = "graph6";
  auto* convert_cmd = app.add_subcommand("convert", "Convert between edge list and graph6");
  add_input(convert_cmd, f);
  convert_cmd->add_option("--to", to_format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  convert_cmd->callback([&] {
    action = [&] {
      const auto graphs = load_graphs(f);
      const bool g6 = to_format == "graph6";
      if (!g6 && graphs.size() != 1) throw UsageError("edge-list output holds exactly one graph");
      for (const Graph& g : graphs) std::cout << (g6 ? emit_graph6(g) + "\n" : emit_edgelist(g));
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    code = action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "invalid graph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::cout.flush();
  return code;
}
