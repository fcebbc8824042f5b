// Copyright 2026 The Stegnet Authors
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

#include "cli.h"

#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "stegnet/detect.h"
#include "stegnet/errors.h"
#include "stegnet/graph.h"
#include "stegnet/graph_io.h"
#include "stegnet/multipoint.h"
#include "stegnet/probmodel.h"
#include "stegnet/task_io.h"

namespace stegnet::cli {
namespace {

struct RunConfig {
  std::string graph_path;
  std::string task_path;
  std::string output_path;
  int n = 0;
  std::int64_t m = 0;
  std::uint64_t seed = 0;
  int trials = 1000;
  std::vector<double> grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                              0.6, 0.7, 0.8, 0.9, 1.0};
};

void Emit(const RunConfig& config, const std::string& text,
          std::ostream& out) {
  if (config.output_path.empty()) {
    out << text;
  } else {
    WriteTextFile(config.output_path, text);
  }
}

std::string Join(const std::vector<int>& values) {
  return fmt::format("{}", fmt::join(values, ","));
}

std::string FormatPlan(const PlanSolution& plan) {
  std::string report;
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    const PlanGroup& group = plan.groups[g];
    report += fmt::format("group {} tasks={} terminals={}\n", g,
                          Join(group.task_indices), Join(group.terminals));
    for (const Edge& e : group.edges) {
      report += fmt::format("edge {} {} {:.6f}\n", e.u, e.v, e.value);
    }
    report += fmt::format("group_risk {:.6f}\n", group.risk);
  }
  return report;
}

Graph LoadRiskGraph(const std::string& path) {
  Graph graph = LoadGraphFile(path);
  if (graph.mode() != EdgeMode::kRisk) {
    throw std::invalid_argument("'" + path + "' is not a risk graph");
  }
  return graph;
}

std::string CmdGen(const RunConfig& config) {
  const Graph graph = GenerateRandomGraph(config.n, config.m, config.seed);
  return FormatGraph(graph, {fmt::format("generated n={} m={} seed={}",
                                         config.n, config.m, config.seed)});
}

std::string CmdPlan(const RunConfig& config) {
  const Graph graph = LoadRiskGraph(config.graph_path);
  const CommTask task = LoadTaskFile(config.task_path);
  const PlanSolution plan = SolveMultipoint(graph, task);
  return FormatPlan(plan) + fmt::format("total_risk {:.6f}\n", plan.risk);
}

std::string CmdProbPlan(const RunConfig& config) {
  const Graph graph = LoadGraphFile(config.graph_path);
  if (graph.mode() != EdgeMode::kProb) {
    throw std::invalid_argument("'" + config.graph_path +
                                "' is not a probability graph");
  }
  const CommTask task = LoadTaskFile(config.task_path);
  const ReliabilityResult result = SolveProbabilistic(graph, task);
  return FormatPlan(result.plan) +
         fmt::format("reliability {:.6f}\nequivalent_risk {:.6f}\n",
                     result.reliability, result.equivalent_risk);
}

std::string CmdPsr(const RunConfig& config) {
  const Graph graph = LoadRiskGraph(config.graph_path);
  return FormatPsrCsv(PathSupportRates(EdgeSupportCounts(graph)));
}

std::string CmdSimulate(const RunConfig& config) {
  return FormatCurveCsv(PhrCurveExperiment(config.n, config.m, config.trials,
                                           config.grid, config.seed));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  CLI::App app{"Covert communication planning and structural detection"};
  app.name("stegnet");
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a connected random graph");
  gen->add_option("-n", config.n, "Vertex count")->required();
  gen->add_option("-m", config.m, "Edge count")->required();
  gen->add_option("--seed", config.seed, "PRNG seed");
  gen->add_option("-o", config.output_path, "Output file");

  auto* plan = app.add_subcommand("plan", "Minimum-risk multi-point plan");
  plan->add_option("-g", config.graph_path, "Risk graph file")->required();
  plan->add_option("-t", config.task_path, "Task file")->required();

  auto* prob_plan = app.add_subcommand(
      "prob-plan", "Maximum-reliability plan on a probability graph");
  prob_plan->add_option("-g", config.graph_path, "Probability graph file")
      ->required();
  prob_plan->add_option("-t", config.task_path, "Task file")->required();

  auto* psr = app.add_subcommand("psr", "Per-edge path-support rates as CSV");
  psr->add_option("-g", config.graph_path, "Risk graph file")->required();

  auto* simulate = app.add_subcommand(
      "simulate", "Path-hit rate versus edge-selection rate on a random graph");
  simulate->add_option("-n", config.n, "Vertex count")->required();
  simulate->add_option("-m", config.m, "Edge count")->required();
  simulate->add_option("--trials", config.trials, "Sampled vertex pairs")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--grid", config.grid, "Comma-separated ESR values")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--seed", config.seed, "PRNG seed");
  simulate->add_option("-o", config.output_path, "Output file");

  std::vector<const char*> argv{"stegnet"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string text;
    if (gen->parsed()) {
      text = CmdGen(config);
    } else if (plan->parsed()) {
      text = CmdPlan(config);
    } else if (prob_plan->parsed()) {
      text = CmdProbPlan(config);
    } else if (psr->parsed()) {
      text = CmdPsr(config);
    } else {
      text = CmdSimulate(config);
    }
    Emit(config, text, out);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace stegnet::cli
