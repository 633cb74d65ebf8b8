// Copyright 2026 The twofactor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: classify, props, gen, lift, named, matchings.
//
// Exit codes: 0 success, 1 internal error, 2 unreadable input, 3 invalid
// input under --strict or invalid parameters.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twofactor/constructions.hpp"
#include "twofactor/generator.hpp"
#include "twofactor/graph6.hpp"
#include "twofactor/report.hpp"
#include "twofactor/structure.hpp"
#include "twofactor/symmetry.hpp"
#include "twofactor/two_factor.hpp"
#include "twofactor/voltage.hpp"

namespace {

using namespace twofactor;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUnreadable = 2;
constexpr int kExitInvalid = 3;

constexpr const char* kWorkersEnv = "TWOFACTOR_WORKERS";

struct ExitRequest {
  int code;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "json";
  std::string mode = "hybrid";
  int workers = 0;
  std::uint64_t seed = 1;
  double max_seconds = 0;
  std::uint64_t max_matchings = 0;
  bool no_prune = false;
  bool strict = false;
  bool timing = false;
  std::string dump_matchings;
  int min_girth = 0;
  bool require_bipartite = false;
  bool require_e4ec = false;
  // gen
  int n = 0;
  bool count_only = false;
  bool pipeline = false;
  // lift
  std::string base;
  std::string group;
  bool allow_disconnected = false;
  // named
  std::string name;
  bool list = false;
  // matchings
  bool with_types = false;
};

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid " << kWorkersEnv << "=" << env
              << "\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Writes to the --output file when given, otherwise to standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) {
      std::cerr << "error: cannot open " << path << " for writing\n";
      throw ExitRequest{kExitUnreadable};
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Streams graph6 lines from the inputs (standard input when none), calling
// `visit` for each graph that decodes and passes `accept`.
template <typename Visit, typename Accept>
void for_each_graph(const RunConfig& config, Accept accept, Visit visit) {
  std::vector<std::string> inputs = config.inputs;
  if (inputs.empty()) inputs.push_back("-");
  for (const std::string& path : inputs) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
      file.open(path);
      if (!file) {
        std::cerr << "error: cannot read " << path << "\n";
        throw ExitRequest{kExitUnreadable};
      }
      in = &file;
    }
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(*in, line)) {
      ++line_number;
      if (line.empty() || line == "\r") continue;
      std::string problem;
      std::optional<Graph> g;
      try {
        g = parse_graph6(line);
        problem = accept(*g);
      } catch (const Error& e) {
        problem = e.what();
      }
      if (!problem.empty()) {
        std::cerr << (config.strict ? "error: " : "warning: skipping ") << path
                  << ":" << line_number << ": " << problem << "\n";
        if (config.strict) throw ExitRequest{kExitInvalid};
        continue;
      }
      visit(*g);
    }
    if (in->bad()) {
      std::cerr << "error: read failure on " << path << "\n";
      throw ExitRequest{kExitUnreadable};
    }
  }
}

std::string filter_problem(const RunConfig& config, const Graph& g) {
  if (config.min_girth > 0) {
    const std::optional<int> gi = girth(g);
    if (gi && *gi < config.min_girth) {
      return "girth " + std::to_string(*gi) + " below --min-girth";
    }
  }
  if (config.require_bipartite && !is_bipartite(g)) return "not bipartite";
  if (config.require_e4ec && !(g.is_cubic() && is_connected(g) &&
                               is_essentially_4_edge_connected(g))) {
    return "not essentially 4-edge-connected";
  }
  return {};
}

std::string cubic_problem(const Graph& g) {
  if (!g.is_cubic()) return "graph is not cubic";
  if (!is_connected(g)) return "graph is not connected";
  return {};
}

void require(bool ok, const std::string& message) {
  if (!ok) {
    std::cerr << "error: " << message << "\n";
    throw ExitRequest{kExitInvalid};
  }
}

ClassifyOptions classify_options(const RunConfig& config) {
  ClassifyOptions options;
  try {
    options.mode = parse_classify_mode(config.mode);
  } catch (const Error& e) {
    require(false, e.what());
  }
  options.workers = config.workers > 0 ? config.workers : default_workers();
  options.seed = config.seed;
  options.prune = !config.no_prune;
  options.max_seconds = config.max_seconds;
  options.max_attempts = config.max_matchings;
  return options;
}

void dump_matchings(std::ostream& out, const Graph& g, bool with_types) {
  out << "# " << write_graph6(g) << "\n";
  enumerate_perfect_matchings(g, [&](std::span<const Vertex> mate) {
    out << format_matching(mate);
    if (with_types) out << "\t" << format_cycle_type(two_factor_type(g, mate));
    out << "\n";
    return true;
  });
}

int cmd_classify(const RunConfig& config) {
  require(config.format == "json" || config.format == "tsv",
          "classify --format must be json or tsv");
  require(config.max_seconds >= 0, "--max-seconds must be nonnegative");
  const ClassifyOptions options = classify_options(config);
  Output output(config.output);
  std::ostream& out = output.stream();
  std::unique_ptr<std::ofstream> dump;
  if (!config.dump_matchings.empty()) {
    dump = std::make_unique<std::ofstream>(config.dump_matchings);
    if (!*dump) {
      std::cerr << "error: cannot open " << config.dump_matchings << "\n";
      return kExitUnreadable;
    }
  }
  if (config.format == "tsv") out << report_tsv_header() << "\n";
  ReportFormat format;
  format.include_timing = config.timing;
  std::uint64_t graphs = 0;
  std::uint64_t p2fi = 0;
  std::vector<std::pair<std::string, bool>> found;
  bool all_complete = true;
  for_each_graph(
      config,
      [&](const Graph& g) {
        std::string problem = cubic_problem(g);
        return problem.empty() ? filter_problem(config, g) : problem;
      },
      [&](const Graph& g) {
        const ClassificationReport report = classify(g, options);
        ++graphs;
        if (config.format == "json") {
          out << report_json(g, report, format) << "\n";
        } else {
          out << report_tsv(g, report) << "\n";
        }
        out.flush();
        if (dump) dump_matchings(*dump, g, false);
        if (report.pseudo_2f_isomorphic == std::optional<bool>(true)) {
          ++p2fi;
          found.emplace_back(write_graph6(g),
                             is_essentially_4_edge_connected(g));
        }
        if (!report.pseudo_2f_isomorphic) all_complete = false;
      });
  std::cerr << "summary: " << graphs << " graphs, " << p2fi
            << " pseudo 2-factor isomorphic";
  for (const auto& [g6, e4ec] : found) {
    std::cerr << "\n  " << g6
              << (e4ec ? "  essentially 4-edge-connected" : "");
  }
  std::cerr << "\n";
  if (!all_complete) {
    std::cerr << "note: some verdicts are undecided within the budget\n";
  }
  return kExitOk;
}

int cmd_props(const RunConfig& config) {
  require(config.format == "json" || config.format == "tsv",
          "props --format must be json or tsv");
  Output output(config.output);
  std::ostream& out = output.stream();
  if (config.format == "tsv") {
    out << "graph6\tn\tgirth\tbipartite\tedge_connectivity\tcyclic_ec\t"
           "e4ec\taut\tvertex_transitive\tedge_transitive\tsemisymmetric\n";
  }
  for_each_graph(
      config, [&](const Graph& g) { return filter_problem(config, g); },
      [&](const Graph& g) {
        const std::optional<int> gi = girth(g);
        const bool connected = is_connected(g);
        const int ec = g.order() >= 2 ? edge_connectivity(g) : 0;
        const std::optional<int> cec =
            connected ? cyclic_edge_connectivity(g) : std::nullopt;
        const bool e4ec =
            g.is_cubic() && connected && is_essentially_4_edge_connected(g);
        const AutomorphismInfo info = automorphisms(g);
        const Transitivity t = transitivity(g, info);
        const std::string aut = info.group_order.str();
        const int cec_value = cec.value_or(0);
        if (config.format == "json") {
          nlohmann::ordered_json j;
          j["graph6"] = write_graph6(g);
          j["n"] = g.order();
          j["girth"] = gi ? nlohmann::ordered_json(*gi) : nullptr;
          j["bipartite"] = is_bipartite(g);
          j["edge_connectivity"] = ec;
          j["cyclic_edge_connectivity"] =
              cec ? nlohmann::ordered_json(cec_value) : nullptr;
          j["essentially_4_edge_connected"] = e4ec;
          j["automorphism_group_order"] = aut;
          j["vertex_transitive"] = t.vertex_transitive;
          j["edge_transitive"] = t.edge_transitive;
          j["semisymmetric"] = t.semisymmetric;
          out << j.dump() << "\n";
        } else {
          auto flag = [](bool b) { return b ? "true" : "false"; };
          out << write_graph6(g) << "\t" << g.order() << "\t"
              << (gi ? std::to_string(*gi) : "inf") << "\t"
              << flag(is_bipartite(g)) << "\t" << ec << "\t"
              << (cec ? std::to_string(cec_value) : "undefined") << "\t"
              << flag(e4ec) << "\t" << aut << "\t"
              << flag(t.vertex_transitive) << "\t" << flag(t.edge_transitive)
              << "\t" << flag(t.semisymmetric) << "\n";
        }
      });
  return kExitOk;
}

int cmd_gen(const RunConfig& config) {
  require(config.n >= 2 && config.n % 2 == 0, "n must be a positive even number");
  if (config.n > 26) {
    std::cerr << "warning: n > 26 may take hours\n";
  }
  Output output(config.output);
  std::ostream& out = output.stream();
  if (config.pipeline) {
    const PipelineSummary summary =
        pipeline_classify(config.n, classify_options(config));
    out << "graphs\t" << summary.graphs << "\n";
    for (const auto& found : summary.pseudo_2f_isomorphic) {
      std::string types;
      for (const CycleType& type : found.types) {
        if (!types.empty()) types += ' ';
        types += format_cycle_type(type);
      }
      out << found.graph6 << "\t"
          << (found.essentially_4_edge_connected ? "e4ec" : "not-e4ec")
          << "\t" << types << "\n";
    }
    return kExitOk;
  }
  std::uint64_t emitted = 0;
  const std::uint64_t count = generate(config.n, [&](const Graph& g) {
    ++emitted;
    if (!config.count_only) out << write_graph6(g) << "\n";
    if (emitted % 100 == 0) std::cerr << "generated " << emitted << "\r";
  });
  if (emitted >= 100) std::cerr << "\n";
  if (config.count_only) out << count << "\n";
  return kExitOk;
}

BaseGraph parse_base(const std::string& text) {
  if (text == "theta") return BaseGraph::theta();
  for (const std::string& name : named_graphs()) {
    if (text == name) return BaseGraph::from_graph(named(name));
  }
  return BaseGraph::from_graph(parse_graph6(text));
}

int cmd_lift(const RunConfig& config) {
  std::optional<BaseGraph> base;
  std::optional<FiniteGroup> group;
  try {
    base = parse_base(config.base);
    group = make_group(config.group);
  } catch (const Error& e) {
    require(false, e.what());
  }
  require(config.min_girth >= 3 || config.min_girth == 0,
          "--min-girth must be at least 3");
  LiftOptions options;
  options.min_girth = std::max(3, config.min_girth);
  options.require_connected = !config.allow_disconnected;
  Output output(config.output);
  std::ostream& out = output.stream();
  std::uint64_t count = 0;
  try {
    count = enumerate_lifts(
        *base, *group, options,
        [&](const Graph& g) { return filter_problem(config, g).empty(); },
        [&](const Graph& g, const std::vector<int>&) {
          if (!config.count_only) out << write_graph6(g) << "\n";
        });
  } catch (const Error& e) {
    require(false, e.what());
  }
  if (config.count_only) out << count << "\n";
  return kExitOk;
}

int cmd_named(const RunConfig& config) {
  Output output(config.output);
  std::ostream& out = output.stream();
  if (config.list) {
    for (const std::string& name : named_graphs()) out << name << "\n";
    return kExitOk;
  }
  require(!config.name.empty(), "named: a graph name or --list is required");
  try {
    out << write_graph6(named(config.name)) << "\n";
  } catch (const Error& e) {
    require(false, e.what());
  }
  return kExitOk;
}

int cmd_matchings(const RunConfig& config) {
  Output output(config.output);
  std::ostream& out = output.stream();
  for_each_graph(
      config,
      [&](const Graph& g) {
        if (config.with_types) return cubic_problem(g);
        return std::string();
      },
      [&](const Graph& g) { dump_matchings(out, g, config.with_types); });
  return kExitOk;
}

void add_input_options(CLI::App* app, RunConfig& config) {
  app->add_option("inputs", config.inputs,
                  "graph6 files, one graph per line ('-' or none: stdin)");
  app->add_flag("--strict", config.strict,
                "fail with exit code 3 on an invalid graph instead of "
                "skipping it");
}

void add_filter_options(CLI::App* app, RunConfig& config) {
  app->add_option("--min-girth", config.min_girth, "skip graphs of lower girth");
  app->add_flag("--require-bipartite", config.require_bipartite,
                "skip non-bipartite graphs");
  app->add_flag("--require-e4ec", config.require_e4ec,
                "skip graphs that are not essentially 4-edge-connected");
}

void add_classify_options(CLI::App* app, RunConfig& config) {
  app->add_option("--mode", config.mode, "exhaustive, heuristic or hybrid")
      ->check(CLI::IsMember({"exhaustive", "heuristic", "hybrid"}));
  app->add_option("--workers", config.workers,
                  std::string("worker threads (default: $") + kWorkersEnv +
                      " or the hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", config.seed, "heuristic seed");
  app->add_option("--max-seconds", config.max_seconds,
                  "wall-clock budget per graph (0: none)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--max-matchings", config.max_matchings,
                  "heuristic matchings per worker (0: default)");
  app->add_flag("--no-prune", config.no_prune,
                "enumerate every 2-factor even after a parity refutation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo 2-factor isomorphism toolkit for cubic graphs"};
  app.require_subcommand(1);
  RunConfig config;

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify graph6 graphs");
  add_input_options(classify_cmd, config);
  add_filter_options(classify_cmd, config);
  add_classify_options(classify_cmd, config);
  classify_cmd->add_option("--format", config.format, "json or tsv");
  classify_cmd->add_option("-o,--output", config.output, "output file");
  classify_cmd->add_option("--dump-matchings", config.dump_matchings,
                           "also write every perfect matching to this file");
  classify_cmd->add_flag("--timing", config.timing,
                         "include elapsed seconds in JSON reports");

  CLI::App* props_cmd =
      app.add_subcommand("props", "structural properties of graph6 graphs");
  add_input_options(props_cmd, config);
  add_filter_options(props_cmd, config);
  props_cmd->add_option("--format", config.format, "json or tsv");
  props_cmd->add_option("-o,--output", config.output, "output file");

  CLI::App* gen_cmd = app.add_subcommand(
      "gen", "connected cubic bipartite graphs of girth >= 6 on n vertices");
  gen_cmd->add_option("n", config.n, "number of vertices")->required();
  gen_cmd->add_flag("--count-only", config.count_only,
                    "print only the number of graphs");
  gen_cmd->add_flag("--pipeline", config.pipeline,
                    "classify every graph and list the pseudo 2-factor "
                    "isomorphic ones");
  gen_cmd->add_option("-o,--output", config.output, "output file");
  add_classify_options(gen_cmd, config);

  CLI::App* lift_cmd =
      app.add_subcommand("lift", "regular lifts of a base graph up to "
                                 "isomorphism");
  lift_cmd->add_option("--base", config.base,
                       "theta, a named graph or a graph6 string")
      ->required();
  lift_cmd->add_option("--group", config.group,
                       "group such as Z7, Z3^2, NA27, HEIS27, Z3xZ5")
      ->required();
  lift_cmd->add_flag("--allow-disconnected", config.allow_disconnected,
                     "also emit disconnected lifts");
  lift_cmd->add_flag("--count-only", config.count_only,
                     "print only the number of lifts");
  lift_cmd->add_option("-o,--output", config.output, "output file");
  add_filter_options(lift_cmd, config);

  CLI::App* named_cmd = app.add_subcommand("named", "print a named graph");
  named_cmd->add_option("name", config.name, "graph name");
  named_cmd->add_flag("--list", config.list, "list the available names");
  named_cmd->add_option("-o,--output", config.output, "output file");

  CLI::App* matchings_cmd = app.add_subcommand(
      "matchings", "list every perfect matching as sorted u-v pairs");
  add_input_options(matchings_cmd, config);
  matchings_cmd->add_flag("--with-types", config.with_types,
                          "append the type of the complementary 2-factor");
  matchings_cmd->add_option("-o,--output", config.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*classify_cmd) return cmd_classify(config);
    if (*props_cmd) return cmd_props(config);
    if (*gen_cmd) return cmd_gen(config);
    if (*lift_cmd) return cmd_lift(config);
    if (*named_cmd) return cmd_named(config);
    if (*matchings_cmd) return cmd_matchings(config);
  } catch (const ExitRequest& request) {
    return request.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
