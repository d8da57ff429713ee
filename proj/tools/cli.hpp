// Copyright 2026 The defcol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Data goes to `out`, diagnostics to `err`.
//
// Exit status: 0 success / bound holds / minor-free, 1 negative result
// (stuck, verification failed, bound fails, minor found), 2 usage or input
// error, 3 search budget or size guard exceeded.

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "defcol/defcol.hpp"
#include "defcol/json_io.hpp"

namespace defcol::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kGuard = 3 };

struct RunConfig {
  std::string format = "json";
  std::size_t t = 0;
  double C = kDefaultDensityConstant;
  std::optional<double> density;
  std::optional<std::uint64_t> s_override;
  std::uint64_t s = 0;
  std::size_t k = 0;
  std::size_t parts = 0;
  std::uint64_t budget = kDefaultMinorBudget;
  std::size_t cap = kDefaultSharpCap;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  double p = 0.5;
  std::string input = "-";
  std::string partition_file;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_source(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

inline Graph load_graph(const std::string& path, std::istream& stdin_stream) {
  return parse_edge_list(read_source(path, stdin_stream));
}

inline void emit(std::ostream& out, const RunConfig& cfg, const ordered_json& j,
                 const std::string& text) {
  if (cfg.format == "json") {
    out << j.dump() << '\n';
  } else {
    out << text;
  }
}

inline std::string format_real(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

inline int cmd_params(const RunConfig& cfg, std::ostream& out) {
  Params p = make_params(cfg.t, cfg.C, cfg.density);
  ordered_json j;
  j["t"] = p.t;
  j["C"] = p.C;
  if (p.density_override) j["density_override"] = *p.density_override;
  j["r"] = p.r;
  j["s"] = p.s;
  emit(out, cfg, j, "r = " + format_real(p.r) + "\ns = " + std::to_string(p.s) + "\n");
  return kOk;
}

inline int cmd_color(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cfg.input, in);
  if (cfg.s_override) {
    err << "warning: --s-override bypasses the computed bound; a stuck result proves nothing\n";
  }
  auto outcome = defective_coloring(g, cfg.t, ColoringConfig{cfg.C, cfg.density, cfg.s_override});
  ordered_json j = outcome_to_json(outcome);
  std::ostringstream text;
  if (const auto* ok = std::get_if<Colored>(&outcome)) {
    text << "t = " << ok->params.t << ", s = " << ok->params.s << ", trace length "
         << ok->trace_len << '\n';
    for (std::size_t i = 0; i < ok->partition.parts.size(); ++i) {
      text << "part " << i << ':';
      for (VertexId v : ok->partition.parts[i]) text << ' ' << v;
      text << '\n';
    }
    emit(out, cfg, j, text.str());
    return kOk;
  }
  const auto& stuck = std::get<StuckOutcome>(outcome);
  text << "stuck on " << stuck.stuck.remaining.vertex_count() << " vertices:";
  for (VertexId v : stuck.stuck.remaining.vertices()) text << ' ' << v;
  text << '\n';
  emit(out, cfg, j, text.str());
  err << "no reduction applies; K_" << (cfg.t + 1)
      << " is a minor of the input if the density parameters are valid\n";
  return kNegative;
}

inline int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg.input, in);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_source(cfg.partition_file, in));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("partition file: ") + e.what());
  }
  Partition part;
  try {
    part = partition_from_json(doc);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("partition file: ") + e.what());
  }
  VerifyReport report = verify_partition(g, part, cfg.s);
  ordered_json j;
  j["ok"] = report.ok;
  j["s"] = cfg.s;
  j["violations"] = ordered_json::array();
  std::ostringstream text;
  text << (report.ok ? "ok" : "FAILED") << '\n';
  for (const auto& v : report.violations) {
    j["violations"].push_back(v.describe());
    text << "  " << v.describe() << '\n';
  }
  emit(out, cfg, j, text.str());
  return report.ok ? kOk : kNegative;
}

inline int cmd_sharp(const RunConfig& cfg, std::ostream& out) {
  Graph g = construct_sharp(cfg.s, cfg.t, cfg.cap);
  write_edge_list(out, g);
  return kOk;
}

inline int cmd_minor(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg.input, in);
  auto res = has_clique_minor(g, cfg.k, cfg.budget);
  ordered_json j;
  j["k"] = cfg.k;
  j["expansions"] = res.expansions;
  std::ostringstream text;
  switch (res.status) {
    case MinorStatus::yes:
      j["result"] = "yes";
      j["branch_sets"] = res.model->branch_sets;
      text << "K_" << cfg.k << " minor found\n";
      for (const auto& bs : res.model->branch_sets) {
        text << " ";
        for (VertexId v : bs) text << ' ' << v;
        text << '\n';
      }
      emit(out, cfg, j, text.str());
      return kNegative;
    case MinorStatus::no:
      j["result"] = "no";
      emit(out, cfg, j, "no K_" + std::to_string(cfg.k) + " minor\n");
      return kOk;
    case MinorStatus::timeout:
      j["result"] = "timeout";
      emit(out, cfg, j, "search budget exhausted\n");
      return kGuard;
  }
  return kGuard;
}

inline int cmd_oracle(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg.input, in);
  std::size_t d = min_defect(g, cfg.parts);
  ordered_json j;
  j["parts"] = cfg.parts;
  j["min_defect"] = d;
  emit(out, cfg, j, "min defect with " + std::to_string(cfg.parts) + " parts: " + std::to_string(d) + "\n");
  return kOk;
}

inline int cmd_density(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Graph g = load_graph(cfg.input, in);
  BoundCheck c = density_bound_holds(g, cfg.t, cfg.C);
  ordered_json j;
  j["holds"] = c.holds;
  j["edges"] = c.lhs;
  j["bound"] = c.rhs;
  emit(out, cfg, j,
       std::string(c.holds ? "holds" : "fails") + ": " + std::to_string(c.lhs) +
           " edges vs bound " + format_real(c.rhs) + "\n");
  return c.holds ? kOk : kNegative;
}

// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Defective colouring of graphs with an excluded clique minor"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto add_density = [&](CLI::App* sub) {
    sub->add_option("-C,--density-constant", cfg.C,
                    "Constant C in the edge bound C (t+1) sqrt(ln(t+1)) |V|")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--density-override", cfg.density,
                    "Use d instead of the generic bound; valid only if every minor of the "
                    "input has at most d|V| edges (forests 1, planar 3, k-trees k)")
        ->check(CLI::PositiveNumber);
  };

  auto* params = app.add_subcommand("params", "Print the density parameter r and defect bound s");
  params->add_option("-t", cfg.t, "Excluded clique is K_{t+1}")->required();
  add_density(params);

  auto* color = app.add_subcommand("color", "Partition a graph into t parts of bounded defect");
  color->add_option("-t", cfg.t, "Excluded clique is K_{t+1}; number of parts")->required();
  add_density(color);
  color->add_option("--s-override", cfg.s_override,
                    "UNSAFE: force the defect bound s (demonstrates the stuck pathway)")
      ->check(CLI::PositiveNumber);
  color->add_option("file", cfg.input, "Edge-list file, '-' for stdin")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a partition JSON against a graph");
  verify->add_option("-s", cfg.s, "Strict bound: every induced degree must be < s")->required();
  verify->add_option("file", cfg.input, "Edge-list file, '-' for stdin")->required();
  verify->add_option("partfile", cfg.partition_file, "Partition JSON")->required();

  auto* sharp = app.add_subcommand("sharp", "Emit the sharpness graph G(s,t) as an edge list");
  sharp->add_option("-s", cfg.s, "Defect s")->required();
  sharp->add_option("-t", cfg.t, "Level t >= 1")->required()->check(CLI::PositiveNumber);
  sharp->add_option("--cap", cfg.cap, "Maximum vertex count")->capture_default_str();

  auto* minor = app.add_subcommand("minor", "Exact search for a K_k minor");
  minor->add_option("-k", cfg.k, "Clique size")->required()->check(CLI::PositiveNumber);
  minor->add_option("--budget", cfg.budget, "Search-node expansion limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  minor->add_option("file", cfg.input, "Edge-list file, '-' for stdin")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Exact minimum defect with p parts (small graphs)");
  oracle->add_option("-p", cfg.parts, "Number of parts")->required()->check(CLI::PositiveNumber);
  oracle->add_option("file", cfg.input, "Edge-list file, '-' for stdin")->capture_default_str();

  auto* density = app.add_subcommand("density-check", "Compare |E| with C (t+1) sqrt(ln(t+1)) |V|");
  density->add_option("-t", cfg.t, "Excluded clique is K_{t+1}")->required();
  density->add_option("-C,--density-constant", cfg.C, "Constant C")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  density->add_option("file", cfg.input, "Edge-list file, '-' for stdin")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate a test graph");
  gen->require_subcommand(1);
  auto* forest = gen->add_subcommand("forest", "Random forest");
  forest->add_option("-n", cfg.n, "Vertex count")->required();
  forest->add_option("--seed", cfg.seed)->capture_default_str();
  auto* ktree = gen->add_subcommand("ktree", "Random k-tree");
  ktree->add_option("-n", cfg.n, "Vertex count (>= k+1)")->required();
  ktree->add_option("-k", cfg.k, "Tree width k")->required();
  ktree->add_option("--seed", cfg.seed)->capture_default_str();
  auto* grid = gen->add_subcommand("grid", "w x h grid");
  grid->add_option("-w,--width", cfg.width)->required();
  grid->add_option("-H,--height", cfg.height)->required();
  auto* random = gen->add_subcommand("random", "Erdos-Renyi G(n,p)");
  random->add_option("-n", cfg.n, "Vertex count")->required();
  random->add_option("-p", cfg.p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  random->add_option("--seed", cfg.seed)->capture_default_str();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("defcol");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*params) return cmd_params(cfg, out);
    if (*color) return cmd_color(cfg, in, out, err);
    if (*verify) return cmd_verify(cfg, in, out);
    if (*sharp) return cmd_sharp(cfg, out);
    if (*minor) return cmd_minor(cfg, in, out);
    if (*oracle) return cmd_oracle(cfg, in, out);
    if (*density) return cmd_density(cfg, in, out);
    if (*forest) {
      write_edge_list(out, gen_forest(cfg.n, cfg.seed));
    } else if (*ktree) {
      write_edge_list(out, gen_ktree(cfg.n, cfg.k, cfg.seed));
    } else if (*grid) {
      write_edge_list(out, gen_grid(cfg.width, cfg.height));
    } else if (*random) {
      write_edge_list(out, gen_random(cfg.n, cfg.p, cfg.seed));
    }
    return kOk;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace defcol::cli
