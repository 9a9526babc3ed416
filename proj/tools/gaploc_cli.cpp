// Copyright 2026 The gaploc Authors
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

// gaploc command-line frontend.
//
//   gaploc validate  SCENARIO
//   gaploc ranges    SCENARIO [--methods single,weighted,lex,lex-warm]
//   gaploc pareto    SCENARIO [--grid g] [--main k] [--delta d] [--ranges-from file]
//   gaploc heuristic SCENARIO [--policy vol|dist|cost|all]
//   gaploc oracle    SCENARIO [--cap n]
//   gaploc compare   SCENARIO BASELINE CANDIDATE
//   gaploc export    SCENARIO SOLUTION [--format csv|json|geojson]
//   gaploc generate  [--seed n] [--kind tiny|colocated]
//
// Exit codes: 0 success, 2 parse, 3 validation, 4 budget exhausted,
// 5 internal.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaploc/augmecon.hpp"
#include "gaploc/errors.hpp"
#include "gaploc/instance_gen.hpp"
#include "gaploc/metrics.hpp"
#include "gaploc/model.hpp"
#include "gaploc/oracle.hpp"
#include "gaploc/pagerank.hpp"
#include "gaploc/parallel.hpp"
#include "gaploc/ranges.hpp"
#include "gaploc/scenario.hpp"
#include "gaploc/solution_io.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;
using namespace gaploc;

constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kValidation = 3,
  kBudget = 4,
  kInternal = 5,
};

struct Common {
  std::string scenario;
  std::string csv_path;
  std::string json_path;
  bool no_timings = false;
  unsigned threads = 0;
};

void AddCommon(CLI::App* cmd, Common& c, bool needs_scenario = true) {
  if (needs_scenario) {
    cmd->add_option("scenario", c.scenario, "Scenario JSON file")->required();
  }
  cmd->add_option("--csv", c.csv_path, "Write the CSV table here instead of stdout");
  cmd->add_option("--json", c.json_path, "Write the JSON document here");
  cmd->add_flag("--no-timings", c.no_timings, "Report zero seconds and omit wall time");
  cmd->add_option("--threads", c.threads, "Worker threads (default GAPLOC_THREADS or all cores)");
}

unsigned Threads(const Common& c) { return c.threads > 0 ? c.threads : default_threads(); }

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  if (std::string(buf).find_first_not_of("-0.") == std::string::npos) {
    std::snprintf(buf, sizeof buf, "%.*f", digits, 0.0);
  }
  return buf;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::uint64_t Fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

class Run {
 public:
  Run(std::string command, const Common& common)
      : command_(std::move(command)), common_(common), start_(Clock::now()) {}

  Json& options() { return options_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  double Seconds(double s) const { return common_.no_timings ? 0.0 : s; }

  Json Manifest() const {
    Json m;
    m["command"] = command_;
    if (!common_.scenario.empty()) {
      m["scenario"] = {{"path", common_.scenario},
                       {"fnv1a64", Hex(Fnv1a64(ReadFile(common_.scenario)))}};
    }
    m["options"] = options_;
    m["seed"] = seed_ ? Json(*seed_) : Json(nullptr);
    m["version"] = kVersion;
    if (!common_.no_timings) {
      m["wall_seconds"] = std::chrono::duration<double>(Clock::now() - start_).count();
    }
    return m;
  }

  void EmitCsv(const std::string& csv) const {
    if (common_.csv_path.empty()) {
      std::cout << csv;
      return;
    }
    WriteFile(common_.csv_path, csv);
    WriteFile(common_.csv_path + ".manifest.json", Manifest().dump(2) + "\n");
  }

  void EmitJson(Json doc) const {
    if (common_.json_path.empty()) return;
    Json out;
    out["manifest"] = Manifest();
    for (auto& [k, v] : doc.items()) out[k] = v;
    WriteFile(common_.json_path, out.dump(2) + "\n");
  }

 private:
  std::string command_;
  const Common& common_;
  Clock::time_point start_;
  Json options_ = Json::object();
  std::optional<std::uint64_t> seed_;
};

Json SolutionJson(const Scenario& s, const Solution& sol) {
  return Json::parse(solution_to_json(s, sol));
}

Json RangesJson(const Ranges& r) {
  Json ideal = Json::array();
  Json nadir = Json::array();
  for (const auto& o : r) {
    ideal.push_back(o.ideal);
    nadir.push_back(o.nadir);
  }
  return {{"ideal", ideal}, {"nadir", nadir}};
}

Ranges RangesFromJson(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw ParseError("ranges file is not valid JSON: " + std::string(e.what()));
  }
  const Json& r = doc.contains("ranges") ? doc["ranges"] : doc;
  if (!r.is_object() || !r.contains("ideal") || !r.contains("nadir") ||
      !r["ideal"].is_array() || !r["nadir"].is_array() || r["ideal"].size() != kNumObjectives ||
      r["nadir"].size() != kNumObjectives) {
    throw SchemaError("ranges file needs 'ideal' and 'nadir' arrays of three numbers");
  }
  Ranges out;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (!r["ideal"][k].is_number() || !r["nadir"][k].is_number()) {
      throw SchemaError("ranges entries must be numbers");
    }
    out[k] = {r["ideal"][k].get<double>(), r["nadir"][k].get<double>()};
  }
  return out;
}

std::string OrderLabel(const MethodReport& r) {
  std::string out;
  for (std::size_t k : r.order) {
    if (!out.empty()) out += "-";
    out += std::to_string(k + 1);
  }
  return out;
}

// ---------------------------------------------------------------- validate

int CmdValidate(const Common& c) {
  const Scenario s = load_scenario(c.scenario);
  std::cout << "ok: " << s.name() << " (" << s.num_sites() << " sites, " << s.num_generators()
            << " generators, " << s.num_bins() << " bin types, " << s.num_fractions()
            << " fractions, " << s.num_frequencies() << " frequencies)\n";
  return kOk;
}

// ------------------------------------------------------------------ ranges

struct RangesArgs {
  std::vector<std::string> methods;
  double time_limit = 60.0;
};

MethodSelection ParseMethods(const std::vector<std::string>& names) {
  if (names.empty()) return {};
  MethodSelection sel{false, false, false, false};
  for (const auto& n : names) {
    if (n == "single") {
      sel.single = true;
    } else if (n == "weighted") {
      sel.weighted = true;
    } else if (n == "lex") {
      sel.lexicographic = true;
    } else if (n == "lex-warm") {
      sel.lexicographic_warm = true;
    } else if (n == "all") {
      sel = {};
    } else {
      throw ValidationError("unknown method '" + n + "'");
    }
  }
  return sel;
}

int CmdRanges(const Common& c, const RangesArgs& a) {
  Run run("ranges", c);
  run.options() = {{"methods", a.methods}, {"time_limit", a.time_limit}};
  const Scenario s = load_scenario(c.scenario);
  milp::SolveOptions opts;
  opts.time_limit_s = a.time_limit;
  const auto reports = run_methods(s, ParseMethods(a.methods), opts, Threads(c));

  bool any = false;
  int code = kOk;
  for (const auto& r : reports) {
    if (r.has_solution()) {
      any = true;
    } else {
      code = std::max<int>(code, r.status == milp::Status::kInfeasible ? kValidation : kBudget);
    }
  }
  std::optional<Ranges> ranges;
  if (any) ranges = build_ranges(reports);

  std::ostringstream csv;
  csv << "method,order,obj1,obj2,obj3,dobj1,dobj2,dobj3,l2,seconds,status,dominance\n";
  Json rows = Json::array();
  for (const auto& r : reports) {
    Json row;
    row["method"] = method_name(r.method);
    row["order"] = OrderLabel(r);
    row["status"] = milp::status_name(r.status);
    row["seconds"] = run.Seconds(r.wall_seconds);
    csv << method_name(r.method) << "," << OrderLabel(r) << ",";
    if (r.has_solution()) {
      const DeviationRow d = deviation(r.objectives, *ranges);
      csv << Num(r.objectives.f1) << "," << Num(r.objectives.f2) << "," << Num(r.objectives.f3);
      for (double v : d.delta) csv << "," << Fixed(v, 2);
      csv << "," << Fixed(d.l2, 2) << "," << Fixed(run.Seconds(r.wall_seconds), 3) << ","
          << milp::status_name(r.status) << "," << (r.dominated ? "dominated" : "non-dominated");
      row["objectives"] = {r.objectives.f1, r.objectives.f2, r.objectives.f3};
      row["delta"] = d.delta;
      row["l2"] = d.l2;
      row["dominated"] = r.dominated;
      row["solution"] = SolutionJson(s, *r.solution);
    } else {
      csv << ",,,,,,," << Fixed(run.Seconds(r.wall_seconds), 3) << ",no solution,";
      if (!r.error.empty()) row["error"] = r.error;
    }
    csv << "\n";
    rows.push_back(row);
  }
  Json doc;
  doc["reports"] = rows;
  if (ranges) {
    for (const char* which : {"ideal", "nadir"}) {
      csv << which << ",,";
      for (std::size_t k = 0; k < kNumObjectives; ++k) {
        csv << (k ? "," : "") << Num(which[0] == 'i' ? (*ranges)[k].ideal : (*ranges)[k].nadir);
      }
      csv << ",,,,,,,\n";
    }
    doc["ranges"] = RangesJson(*ranges);
  } else {
    doc["ranges"] = nullptr;
  }
  run.EmitCsv(csv.str());
  run.EmitJson(doc);
  return code;
}

// ------------------------------------------------------------------ pareto

struct ParetoArgs {
  int grid = 10;
  int main_objective = 1;
  double delta = 1e-3;
  double time_limit = 60.0;
  std::string ranges_from;
  bool parallel = false;
};

int CmdPareto(const Common& c, const ParetoArgs& a) {
  Run run("pareto", c);
  run.options() = {{"grid", a.grid},
                   {"main", a.main_objective},
                   {"delta", a.delta},
                   {"time_limit", a.time_limit},
                   {"ranges_from", a.ranges_from},
                   {"parallel", a.parallel}};
  if (a.main_objective < 1 || a.main_objective > 3) {
    throw ValidationError("--main must be 1, 2 or 3");
  }
  const Scenario s = load_scenario(c.scenario);
  milp::SolveOptions opts;
  opts.time_limit_s = a.time_limit;

  Ranges ranges;
  if (!a.ranges_from.empty()) {
    ranges = RangesFromJson(a.ranges_from);
  } else {
    const auto reports = run_methods(s, {}, opts, Threads(c));
    bool any = false;
    for (const auto& r : reports) any = any || r.has_solution();
    if (!any) {
      std::cerr << "error: no method produced a solution to estimate ranges from\n";
      return kBudget;
    }
    ranges = build_ranges(reports);
  }

  GridSpec grid;
  grid.gridpoints = a.grid;
  grid.main_objective = static_cast<std::size_t>(a.main_objective - 1);
  grid.augmentation_delta = a.delta;
  AugmeconOptions aopts;
  aopts.solve = opts;
  aopts.parallel = a.parallel;
  aopts.threads = Threads(c);
  const ParetoFront front = augmecon2(s, ranges, grid, aopts);

  std::ostringstream csv;
  csv << "solution,obj1,obj2,obj3,dobj1,dobj2,dobj3,l2\n";
  Json entries = Json::array();
  for (std::size_t n = 0; n < front.entries.size(); ++n) {
    const auto& e = front.entries[n];
    const DeviationRow d = deviation(e.objectives, ranges);
    csv << n + 1 << "," << Num(e.objectives.f1) << "," << Num(e.objectives.f2) << ","
        << Num(e.objectives.f3);
    for (double v : d.delta) csv << "," << Fixed(v, 2);
    csv << "," << Fixed(d.l2, 2) << "\n";
    entries.push_back({{"objectives", {e.objectives.f1, e.objectives.f2, e.objectives.f3}},
                       {"delta", d.delta},
                       {"l2", d.l2},
                       {"cell", {e.outer, e.inner}},
                       {"solution", SolutionJson(s, e.solution)}});
  }
  Json cells = Json::array();
  bool budget = false;
  for (const auto& cell : front.cells) {
    budget = budget || cell.status == milp::Status::kNoSolutionFound ||
             cell.status == milp::Status::kFeasibleTimeLimit;
    cells.push_back({{"outer", cell.outer},
                     {"inner", cell.inner},
                     {"eps_outer", cell.eps_outer},
                     {"eps_inner", cell.eps_inner},
                     {"status", milp::status_name(cell.status)},
                     {"nodes", cell.nodes},
                     {"seconds", run.Seconds(cell.wall_seconds)},
                     {"bypass", cell.bypass}});
  }
  std::cerr << "solver calls " << front.solver_calls << " of bound " << front.run_bound << "\n";
  run.EmitCsv(csv.str());
  run.EmitJson({{"ranges", RangesJson(ranges)},
                {"solver_calls", front.solver_calls},
                {"run_bound", front.run_bound},
                {"front", entries},
                {"cells", cells}});
  return budget ? kBudget : kOk;
}

// --------------------------------------------------------------- heuristic

struct HeuristicArgs {
  std::string policy = "all";
  double damping = 0.85;
  double tol = 1e-8;
  int max_iterations = 200;
};

int CmdHeuristic(const Common& c, const HeuristicArgs& a) {
  Run run("heuristic", c);
  run.options() = {{"policy", a.policy},
                   {"damping", a.damping},
                   {"tol", a.tol},
                   {"max_iterations", a.max_iterations}};
  std::vector<Policy> policies;
  if (a.policy == "all") {
    policies = {Policy::kVol, Policy::kDist, Policy::kCost};
  } else {
    policies = {parse_policy(a.policy)};
  }
  const Scenario s = load_scenario(c.scenario);
  PageRankOptions popts{a.damping, a.tol, a.max_iterations};
  const auto t0 = Clock::now();
  const RankVector ranks = pagerank(build_graph(s), popts);
  const double rank_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  struct Outcome {
    HeuristicSolution solution;
    HeuristicSummary summary;
    double seconds = 0.0;
  };
  std::vector<Outcome> outcomes(policies.size());
  parallel_for(policies.size(), Threads(c), [&](std::size_t k) {
    const auto t = Clock::now();
    outcomes[k].solution = construct(s, ranks, policies[k]);
    outcomes[k].summary = evaluate_heuristic(s, outcomes[k].solution);
    outcomes[k].seconds =
        rank_seconds + std::chrono::duration<double>(Clock::now() - t).count();
  });

  std::ostringstream csv;
  csv << "policy,obj2,obj3,collected_pct,served,seconds\n";
  Json rows = Json::array();
  for (std::size_t k = 0; k < policies.size(); ++k) {
    const auto& o = outcomes[k];
    const auto issues = audit_heuristic(s, o.solution);
    for (const auto& issue : issues) std::cerr << "audit: " << issue << "\n";
    csv << policy_name(policies[k]) << "," << Num(o.summary.average_distance) << ","
        << Num(o.summary.cost) << "," << Fixed(100.0 * o.summary.collected_fraction, 2) << ","
        << o.summary.served << "," << Fixed(run.Seconds(o.seconds), 3) << "\n";
    Json sites = Json::array();
    for (std::size_t i : o.solution.order) sites.push_back(s.sites()[i].id);
    rows.push_back({{"policy", policy_name(policies[k])},
                    {"average_distance", o.summary.average_distance},
                    {"cost", o.summary.cost},
                    {"collected_fraction", o.summary.collected_fraction},
                    {"served", o.summary.served},
                    {"skipped", o.solution.skipped},
                    {"visited", sites},
                    {"audit", issues},
                    {"seconds", run.Seconds(o.seconds)},
                    {"solution", SolutionJson(s, heuristic_to_solution(s, o.solution))}});
  }
  Json rank_doc = Json::object();
  for (std::size_t v : rank_order(ranks)) rank_doc[ranks.ids[v]] = ranks.rank[v];
  run.EmitCsv(csv.str());
  run.EmitJson({{"pagerank", {{"iterations", ranks.iterations},
                              {"residual", ranks.residual},
                              {"ranks", rank_doc}}},
                {"policies", rows}});
  return kOk;
}

// ------------------------------------------------------------------ oracle

struct OracleArgs {
  double cap = kDefaultOracleCap;
};

int CmdOracle(const Common& c, const OracleArgs& a) {
  Run run("oracle", c);
  run.options() = {{"cap", a.cap}};
  const Scenario s = load_scenario(c.scenario);
  const auto entries = enumerate_oracle(s, a.cap);
  const auto front = oracle_front(entries);

  std::ostringstream csv;
  csv << "obj1,obj2,obj3\n";
  for (const auto& v : front) csv << Num(v.f1) << "," << Num(v.f2) << "," << Num(v.f3) << "\n";
  Json points = Json::array();
  for (const auto& v : front) {
    Json sol = nullptr;
    for (const auto& e : entries) {
      if (e.non_dominated && approx_equal(e.objectives, v, 1e-12)) {
        sol = SolutionJson(s, e.solution);
        break;
      }
    }
    points.push_back({{"objectives", {v.f1, v.f2, v.f3}}, {"solution", sol}});
  }
  run.EmitCsv(csv.str());
  run.EmitJson({{"feasible", entries.size()}, {"front", points}});
  return kOk;
}

// ----------------------------------------------------------------- compare

struct CompareArgs {
  std::string baseline;
  std::string candidate;
};

int CmdCompare(const Common& c, const CompareArgs& a) {
  Run run("compare", c);
  run.options() = {{"baseline", a.baseline}, {"candidate", a.candidate}};
  const Scenario s = load_scenario(c.scenario);
  const Solution baseline = load_solution(s, a.baseline);
  const Solution candidate = load_solution(s, a.candidate);
  const BaselineComparison cmp = compare_to_baseline(s, eval_objectives(s, candidate), baseline);
  for (const auto& id : cmp.unreachable) {
    std::cerr << "warning: generator '" << id << "' has no open baseline site within D\n";
  }

  std::ostringstream csv;
  csv << "objective,baseline,candidate,change_pct\n";
  Json rows = Json::array();
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    csv << "obj" << k + 1 << "," << Num(cmp.baseline[k]) << "," << Num(cmp.candidate[k]) << ",";
    if (cmp.change[k]) csv << Fixed(*cmp.change[k], 2);
    csv << "\n";
    rows.push_back({{"objective", "obj" + std::to_string(k + 1)},
                    {"baseline", cmp.baseline[k]},
                    {"candidate", cmp.candidate[k]},
                    {"change_pct", cmp.change[k] ? Json(*cmp.change[k]) : Json(nullptr)}});
  }
  run.EmitCsv(csv.str());
  run.EmitJson({{"rows", rows},
                {"unreachable", cmp.unreachable},
                {"baseline_solution", SolutionJson(s, cmp.baseline_solution)}});
  return kOk;
}

// ------------------------------------------------------------------ export

struct ExportArgs {
  std::string solution;
  std::string format = "geojson";
  std::string out;
};

int CmdExport(const Common& c, const ExportArgs& a) {
  const Scenario s = load_scenario(c.scenario);
  const Solution sol = load_solution(s, a.solution);
  std::string text;
  if (a.format == "geojson") {
    text = solution_to_geojson(s, sol);
  } else if (a.format == "csv") {
    text = solution_to_csv(s, sol);
  } else if (a.format == "json") {
    text = solution_to_json(s, sol);
  } else {
    throw ValidationError("unknown export format '" + a.format + "'");
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    Run run("export", c);
    run.options() = {{"solution", a.solution}, {"format", a.format}};
    WriteFile(a.out, text);
    WriteFile(a.out + ".manifest.json", run.Manifest().dump(2) + "\n");
  }
  return kOk;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::uint64_t seed = kDefaultSeed;
  std::string kind = "tiny";
  std::size_t sites = 8;
  std::string out;
};

int CmdGenerate(const Common& c, const GenerateArgs& a) {
  Scenario s = [&] {
    if (a.kind == "tiny") return random_tiny_instance(a.seed);
    if (a.kind == "colocated") return random_colocated_instance(a.seed, a.sites);
    throw ValidationError("unknown instance kind '" + a.kind + "'");
  }();
  const std::string text = to_canonical_json(s);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    Run run("generate", c);
    run.options() = {{"kind", a.kind}, {"sites", a.sites}};
    run.set_seed(a.seed);
    WriteFile(a.out, text);
    WriteFile(a.out + ".manifest.json", run.Manifest().dump(2) + "\n");
  }
  return kOk;
}

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const SchemaError*>(&e)) return kParse;
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const UnknownId*>(&e) ||
      dynamic_cast<const UnknownPolicy*>(&e) ||
      dynamic_cast<const ExportWithoutCoordinates*>(&e) ||
      dynamic_cast<const MissingSiteDistances*>(&e) ||
      dynamic_cast<const InstanceTooLarge*>(&e) ||
      dynamic_cast<const DegenerateRange*>(&e) ||
      dynamic_cast<const InfeasibleWarmStart*>(&e)) {
    return kValidation;
  }
  if (dynamic_cast<const StageFailed*>(&e) || dynamic_cast<const EmptyPool*>(&e)) return kBudget;
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waste bin location: exact AUGMECON2 fronts and PageRank heuristics", "gaploc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  RangesArgs ranges_args;
  ParetoArgs pareto_args;
  HeuristicArgs heuristic_args;
  OracleArgs oracle_args;
  CompareArgs compare_args;
  ExportArgs export_args;
  GenerateArgs generate_args;

  auto* validate = app.add_subcommand("validate", "Load and validate a scenario");
  validate->add_option("scenario", common.scenario, "Scenario JSON file")->required();

  auto* ranges = app.add_subcommand("ranges", "Estimate objective ranges with four methods");
  AddCommon(ranges, common);
  ranges->add_option("--methods", ranges_args.methods, "single, weighted, lex, lex-warm or all")
      ->delimiter(',');
  ranges->add_option("--time-limit", ranges_args.time_limit, "Seconds per solve")
      ->check(CLI::NonNegativeNumber);

  auto* pareto = app.add_subcommand("pareto", "Compute the Pareto front with AUGMECON2");
  AddCommon(pareto, common);
  pareto->add_option("--grid", pareto_args.grid, "Gridpoints per constrained objective");
  pareto->add_option("--main", pareto_args.main_objective, "Main objective (1, 2 or 3)");
  pareto->add_option("--delta", pareto_args.delta, "Augmentation coefficient");
  pareto->add_option("--time-limit", pareto_args.time_limit, "Seconds per solve")
      ->check(CLI::NonNegativeNumber);
  pareto->add_option("--ranges-from", pareto_args.ranges_from, "JSON written by 'ranges --json'");
  pareto->add_flag("--parallel", pareto_args.parallel, "Solve all cells concurrently, no bypass");

  auto* heuristic = app.add_subcommand("heuristic", "Run the PageRank constructive heuristics");
  AddCommon(heuristic, common);
  heuristic->add_option("--policy", heuristic_args.policy, "vol, dist, cost or all");
  heuristic->add_option("--damping", heuristic_args.damping, "PageRank damping factor");
  heuristic->add_option("--tol", heuristic_args.tol, "PageRank convergence tolerance");
  heuristic->add_option("--max-iter", heuristic_args.max_iterations, "PageRank iteration cap");

  auto* oracle = app.add_subcommand("oracle", "Enumerate every solution of a tiny scenario");
  AddCommon(oracle, common);
  oracle->add_option("--cap", oracle_args.cap, "Maximum number of combinations");

  auto* compare = app.add_subcommand("compare", "Compare a candidate with a baseline layout");
  AddCommon(compare, common);
  compare->add_option("baseline", compare_args.baseline, "Baseline solution JSON")->required();
  compare->add_option("candidate", compare_args.candidate, "Candidate solution JSON")
      ->required();

  auto* exporter = app.add_subcommand("export", "Export a solution as CSV, JSON or GeoJSON");
  exporter->add_option("scenario", common.scenario, "Scenario JSON file")->required();
  exporter->add_option("solution", export_args.solution, "Solution JSON")->required();
  exporter->add_option("--format", export_args.format, "geojson, csv or json");
  exporter->add_option("--out", export_args.out, "Output file (default stdout)");

  auto* generate = app.add_subcommand("generate", "Write a seeded random scenario");
  generate->add_option("--seed", generate_args.seed, "Random seed");
  generate->add_option("--kind", generate_args.kind, "tiny or colocated");
  generate->add_option("--sites", generate_args.sites, "Sites for colocated instances");
  generate->add_option("--out", generate_args.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*validate) return CmdValidate(common);
    if (*ranges) return CmdRanges(common, ranges_args);
    if (*pareto) return CmdPareto(common, pareto_args);
    if (*heuristic) return CmdHeuristic(common, heuristic_args);
    if (*oracle) return CmdOracle(common, oracle_args);
    if (*compare) return CmdCompare(common, compare_args);
    if (*exporter) return CmdExport(common, export_args);
    if (*generate) return CmdGenerate(common, generate_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  }
  return kInternal;
}
