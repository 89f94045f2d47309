#include "rstab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rstab/approx.hpp"
#include "rstab/exact.hpp"
#include "rstab/generators.hpp"
#include "rstab/io.hpp"
#include "rstab/reduction.hpp"

namespace rstab::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Fraction {
  std::int64_t num = 1;
  std::int64_t den = 1;
};

Fraction parse_fraction(const std::string& text) {
  Fraction f;
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    f.num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw 0;
    if (slash != std::string::npos) {
      f.den = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) throw 0;
    }
  } catch (...) {
    throw UsageError("expected a fraction like 3/4, got \"" + text + "\"");
  }
  if (f.num < 0 || f.den <= 0) {
    throw UsageError("fraction must be nonnegative with positive denominator");
  }
  return f;
}

// foo.json -> foo.<tag>.json
std::string sidecar_path(const std::string& path, const std::string& tag) {
  fs::path p(path);
  const std::string ext = p.has_extension() ? p.extension().string() : ".json";
  return (p.parent_path() / (p.stem().string() + "." + tag + ext)).string();
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << io::dump(j);
  } else {
    io::write_file(path, io::dump(j));
  }
}

bool globally_feasible(const Instance& inst) {
  return verify(inst, Solution(inst.hlines(), inst.vlines())).unstabbed.empty();
}

Json stats_json(const approx::SearchStats& s) {
  Json j;
  j["splits_tried"] = s.splits_tried;
  j["splits_rejected"] = s.splits_rejected;
  j["vertical_guesses"] = s.vertical_guesses;
  j["vertical_pruned"] = s.vertical_pruned;
  j["horizontal_guesses"] = s.horizontal_guesses;
  j["twosat_calls"] = s.twosat_calls;
  j["verify_failures"] = s.verify_failures;
  return j;
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Instance load_instance(const std::string& path) {
  return io::instance_from_json(io::read_json(path));
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string instance;
  std::string out;
  bool approx = false;
  bool exact = false;
  bool min = false;
  bool timing = false;
  std::size_t k = 0;
  std::size_t kmax = 0;
  std::size_t max_size = 0;
  std::uint64_t node_limit = 0;
  CLI::Option* k_opt = nullptr;
  CLI::Option* kmax_opt = nullptr;
  CLI::Option* max_size_opt = nullptr;
  CLI::Option* node_limit_opt = nullptr;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  if (o.approx == o.exact) throw UsageError("pick exactly one of --approx, --exact");
  if (o.approx && o.min && !o.kmax_opt->count()) {
    throw UsageError("--min needs --kmax");
  }
  if (o.approx && !o.min && !o.k_opt->count()) throw UsageError("--approx needs -k");

  const Instance inst = load_instance(o.instance);
  Json report;
  report["command"] = "solve";
  report["instance"] = o.instance;
  report["rects"] = inst.rects().size();
  report["lines"] = inst.num_lines();

  const auto start = Clock::now();
  std::optional<Solution> sol;
  if (o.approx) {
    const auto res = o.min ? approx::solve_min(inst, o.kmax)
                           : approx::solve_with_budget(inst, o.k);
    report["solver"] = o.min ? "approx-min" : "approx";
    report["budget"] = res.budget;
    if (res.solved()) {
      report["outcome"] = "solved";
      report["size"] = res.solution->size();
      report["bound"] = approx::size_bound(res.budget);
      report["split"] = {res.split.k_h, res.split.k_v};
      sol = res.solution;
    } else {
      report["outcome"] = globally_feasible(inst) ? "no-witness" : "infeasible";
    }
    report["stats"] = stats_json(res.stats);
  } else {
    // Without --max-size the search is unbounded.
    const std::size_t cap = o.max_size_opt->count() ? o.max_size : inst.num_lines();
    exact::SearchBudget budget{cap, std::nullopt};
    if (o.node_limit_opt->count()) budget.node_limit = o.node_limit;
    const auto res = exact::opt_exact(inst, budget);
    report["solver"] = "exact";
    report["budget"] = cap;
    if (const Solution* s = res.solution()) {
      report["outcome"] = "solved";
      report["size"] = s->size();
      sol = *s;
    } else if (std::holds_alternative<exact::NoSolutionWithin>(res.outcome)) {
      report["outcome"] = globally_feasible(inst) ? "no-witness" : "infeasible";
    } else {
      report["outcome"] = "error";
      report["reason"] = "node limit exceeded";
    }
    report["nodes"] = res.nodes;
  }
  if (o.timing) report["wall_ms"] = elapsed_ms(start);
  if (sol && !o.out.empty()) io::write_file(o.out, io::dump(io::to_json(*sol)));
  out << io::dump(report);
  return sol ? kOk : kFail;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& inst_path, const std::string& sol_path,
               std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(inst_path);
  const Solution sol = io::solution_from_json(io::read_json(sol_path));
  const VerifyReport rep = verify(inst, sol);
  Json j;
  j["command"] = "verify";
  j["ok"] = rep.ok();
  j["size"] = sol.size();
  j["unstabbed"] = rep.unstabbed.size();
  j["unknown_lines"] = rep.unknown_lines.size();
  out << io::dump(j);
  for (const Rect& r : rep.unstabbed) err << "unstabbed " << r << "\n";
  for (const Line& l : rep.unknown_lines) err << "not a candidate: " << l << "\n";
  return rep.ok() ? kOk : kFail;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t lines = 0;
  std::size_t distractors = 0;
  Coord range = 100;
  std::uint64_t seed = 0;
  std::string prob = "1/2";
  bool plant = false;
  std::string input;
  std::string out;
  std::string witness_out;
  std::string clique_out;
  CLI::Option* distractors_opt = nullptr;
};

int cmd_gen_planted(const GenOptions& o, std::ostream& out) {
  std::optional<std::size_t> distractors;
  if (o.distractors_opt->count()) distractors = o.distractors;
  const auto p = gen::gen_planted(o.k, o.n, o.range, o.seed, distractors);
  emit(io::to_json(p.inst), o.out, out);
  std::string wpath = o.witness_out;
  if (wpath.empty() && !o.out.empty()) wpath = sidecar_path(o.out, "witness");
  if (!wpath.empty()) io::write_file(wpath, io::dump(io::to_json(p.witness)));
  return kOk;
}

int cmd_gen_mcgraph(const GenOptions& o, std::ostream& out) {
  const Fraction prob = parse_fraction(o.prob);
  if (prob.num > prob.den) throw UsageError("--prob must be at most 1");
  const auto g = gen::gen_mcgraph(o.k, o.r, static_cast<std::uint64_t>(prob.num),
                                  static_cast<std::uint64_t>(prob.den), o.seed,
                                  o.plant);
  emit(io::to_json(g.graph), o.out, out);
  std::string cpath = o.clique_out;
  if (cpath.empty() && !o.out.empty() && g.clique) cpath = sidecar_path(o.out, "clique");
  if (!cpath.empty() && g.clique) io::write_file(cpath, io::dump(io::to_json(*g.clique)));
  return kOk;
}

int cmd_gen_discretize(const GenOptions& o, std::ostream& out, std::ostream& err) {
  const auto pts = io::read_points_csv(io::read_file(o.input));
  try {
    emit(io::to_json(gen::discretization_to_stabbing(pts)), o.out, out);
  } catch (const gen::CoincidentPoints& e) {
    err << "infeasible: " << e.what() << "\n";
    return kFail;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// reduce / forward / extract

reduction::ReducedInstance from_table(Instance inst, const io::StripTable& t) {
  return {std::move(inst), t.graph, t.strips, t.force_count, t.adjacency_count,
          t.equality_count};
}

int cmd_reduce(const std::string& graph_path, const std::string& out_path,
               std::string strips_path, bool nondegenerate, std::ostream& out,
               std::ostream& err) {
  const auto g = io::graph_from_json(io::read_json(graph_path));
  if (g.r() < 2) throw UsageError("reduction needs part size r >= 2");
  if (const std::size_t intra = g.intra_part_edges()) {
    err << "warning: ignoring " << intra << " edge(s) inside a part\n";
  }
  const auto red = reduction::build(g);
  io::StripTable table{g, red.strips, red.force_count, red.adjacency_count,
                       red.equality_count, nondegenerate};
  const Instance inst = nondegenerate ? reduction::make_nondegenerate(red.inst) : red.inst;
  emit(io::to_json(inst), out_path, out);
  if (strips_path.empty() && !out_path.empty()) {
    strips_path = sidecar_path(out_path, "strips");
  }
  if (!strips_path.empty()) io::write_file(strips_path, io::dump(io::to_json(table)));
  if (!out_path.empty()) {
    Json j;
    j["command"] = "reduce";
    j["k"] = g.k();
    j["r"] = g.r();
    j["rects"] = inst.rects().size();
    j["lines"] = inst.num_lines();
    j["force"] = red.force_count;
    j["adjacency"] = red.adjacency_count;
    j["equality"] = red.equality_count;
    j["doubled"] = nondegenerate;
    out << io::dump(j);
  }
  return kOk;
}

int cmd_forward(const std::string& strips_path, const std::string& clique_path,
                const std::string& out_path, std::ostream& out) {
  const auto table = io::strip_table_from_json(io::read_json(strips_path));
  const auto clique =
      io::clique_from_json(io::read_json(clique_path), table.graph.k());
  const auto red = reduction::build(table.graph);
  Solution sol = reduction::forward(red, clique);
  if (table.doubled) {
    std::vector<Coord> hs, vs;
    for (Coord y : sol.hlines()) hs.push_back(2 * y);
    for (Coord x : sol.vlines()) vs.push_back(2 * x);
    sol = Solution(std::move(hs), std::move(vs));
  }
  emit(io::to_json(sol), out_path, out);
  return kOk;
}

// Inverse of make_nondegenerate on its image.
Instance undouble(const Instance& inst) {
  std::vector<Rect> rects;
  for (const Rect& r : inst.rects()) {
    rects.push_back({reduction::halve(r.x1), reduction::halve(r.x2),
                     reduction::halve(r.y1), reduction::halve(r.y2)});
  }
  const Solution lines = reduction::halve(Solution(inst.hlines(), inst.vlines()));
  return Instance(std::move(rects), lines.hlines(), lines.vlines());
}

int cmd_extract(const std::string& inst_path, const std::string& sol_path,
                const std::string& strips_path, const std::string& eps_text,
                std::ostream& out, std::ostream& err) {
  const Fraction eps = parse_fraction(eps_text);
  if (eps.num == 0) throw UsageError("--eps must be positive");
  Instance inst = load_instance(inst_path);
  Solution sol = io::solution_from_json(io::read_json(sol_path));
  const auto table = io::strip_table_from_json(io::read_json(strips_path));
  if (table.doubled) {
    inst = undouble(inst);
    sol = reduction::halve(sol);
  }
  const auto red = from_table(std::move(inst), table);
  Json j;
  j["command"] = "extract";
  try {
    const auto res = reduction::reverse(red, sol, eps.num, eps.den);
    if (const auto* na = std::get_if<reduction::NotApplicable>(&res)) {
      j["outcome"] = "not-applicable";
      j["reason"] = na->reason;
      out << io::dump(j);
      err << "not applicable: " << na->reason << "\n";
      return kFail;
    }
    const auto& clique = std::get<reduction::MCClique>(res);
    j["outcome"] = "clique";
    j["size"] = clique.size();
    j["clique"] = io::to_json(clique)["clique"];
    out << io::dump(j);
    return kOk;
  } catch (const reduction::ExtractionError& e) {
    j["outcome"] = "error";
    j["reason"] = e.what();
    out << io::dump(j);
    err << "extraction failed: " << e.what() << "\n";
    return kFail;
  }
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string dir;
  std::string solvers = "approx,exact";
  std::size_t kmax = 8;
  std::size_t max_size = 8;
  std::uint64_t node_limit = 5'000'000;
  std::size_t jobs = 1;
  std::string out;
  std::string summary;
  bool timing = false;
};

struct BenchRow {
  BenchRow(std::string name, std::string solver_name, std::string n_rects = {},
           std::string n_lines = {})
      : instance(std::move(name)),
        solver(std::move(solver_name)),
        rects(std::move(n_rects)),
        lines(std::move(n_lines)) {}

  std::string instance;
  std::string solver;
  std::string rects, lines, outcome, size, k, bound, ratio, splits, vguesses,
      hguesses, twosat, nodes, wall_ms;
};

const char* kBenchHeader =
    "instance,solver,rects,lines,outcome,size,k,bound,ratio,splits_tried,"
    "vertical_guesses,horizontal_guesses,twosat_calls,nodes,wall_ms\n";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<BenchRow> bench_one(const fs::path& path, const BenchOptions& o,
                                const std::vector<std::string>& solvers) {
  const std::string name = path.filename().string();
  std::vector<BenchRow> rows;
  std::optional<Instance> inst;
  try {
    inst = load_instance(path.string());
  } catch (const std::exception&) {
    for (const auto& s : solvers) {
      rows.emplace_back(name, s);
      rows.back().outcome = "error";
    }
    return rows;
  }
  const std::string nr = std::to_string(inst->rects().size());
  const std::string nl = std::to_string(inst->num_lines());
  const bool feasible = globally_feasible(*inst);
  std::optional<std::size_t> opt;
  std::map<std::string, BenchRow> by_solver;  // keyed by solver name

  if (std::count(solvers.begin(), solvers.end(), "exact")) {
    BenchRow row{name, "exact", nr, nl};
    try {
      const auto start = Clock::now();
      const auto res = exact::opt_exact(*inst, {o.max_size, o.node_limit});
      if (o.timing) row.wall_ms = fixed4(elapsed_ms(start));
      row.nodes = std::to_string(res.nodes);
      if (const Solution* s = res.solution()) {
        opt = s->size();
        row.outcome = "solved";
        row.size = row.k = row.bound = std::to_string(*opt);
      } else if (std::holds_alternative<exact::NoSolutionWithin>(res.outcome)) {
        row.outcome = feasible ? "no-witness" : "infeasible";
      } else {
        row.outcome = "error";
      }
    } catch (const std::exception&) {
      row.outcome = "error";
    }
    by_solver.emplace("exact", row);
  }
  if (std::count(solvers.begin(), solvers.end(), "approx")) {
    BenchRow row{name, "approx", nr, nl};
    try {
      const auto start = Clock::now();
      const auto res = approx::solve_min(*inst, o.kmax);
      if (o.timing) row.wall_ms = fixed4(elapsed_ms(start));
      row.splits = std::to_string(res.stats.splits_tried);
      row.vguesses = std::to_string(res.stats.vertical_guesses);
      row.hguesses = std::to_string(res.stats.horizontal_guesses);
      row.twosat = std::to_string(res.stats.twosat_calls);
      if (res.solved()) {
        row.outcome = "solved";
        row.size = std::to_string(res.solution->size());
        row.k = std::to_string(res.budget);
        row.bound = std::to_string(approx::size_bound(res.budget));
        if (opt && *opt > 0) {
          row.ratio = fixed4(static_cast<double>(res.solution->size()) /
                             static_cast<double>(*opt));
        }
      } else {
        row.outcome = feasible ? "no-witness" : "infeasible";
      }
    } catch (const std::exception&) {
      row.outcome = "error";
    }
    by_solver.emplace("approx", row);
  }
  for (const auto& s : solvers) rows.push_back(by_solver.at(s));
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string text = kBenchHeader;
  for (const auto& r : rows) {
    const std::string* cells[] = {&r.instance, &r.solver,   &r.rects,  &r.lines,
                                  &r.outcome,  &r.size,     &r.k,      &r.bound,
                                  &r.ratio,    &r.splits,   &r.vguesses, &r.hguesses,
                                  &r.twosat,   &r.nodes,    &r.wall_ms};
    for (std::size_t i = 0; i < std::size(cells); ++i) {
      if (i) text += ',';
      text += csv_field(*cells[i]);
    }
    text += '\n';
  }
  return text;
}

// Solution sizes grouped by (solver, k).
std::string summary_csv(const std::vector<BenchRow>& rows) {
  struct Acc {
    std::size_t count = 0;
    std::size_t total = 0;
    std::size_t max = 0;
  };
  std::map<std::pair<std::string, std::size_t>, Acc> groups;
  for (const auto& r : rows) {
    if (r.outcome != "solved") continue;
    const std::size_t k = std::stoul(r.k);
    const std::size_t size = std::stoul(r.size);
    auto& acc = groups[{r.solver, k}];
    ++acc.count;
    acc.total += size;
    acc.max = std::max(acc.max, size);
  }
  std::string text = "solver,k,instances,mean_size,max_size,bound\n";
  for (const auto& [key, acc] : groups) {
    const auto& [solver, k] = key;
    const std::size_t bound = solver == "approx" ? approx::size_bound(k) : k;
    text += solver + "," + std::to_string(k) + "," + std::to_string(acc.count) +
            "," + fixed4(static_cast<double>(acc.total) / static_cast<double>(acc.count)) +
            "," + std::to_string(acc.max) + "," + std::to_string(bound) + "\n";
  }
  return text;
}

bool is_instance_file(const fs::path& p) {
  try {
    const Json j = io::read_json(p);
    return !j.is_object() || j.contains("rects");
  } catch (const io::ParseError&) {
    return true;  // reported as an error row
  }
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  if (!fs::is_directory(o.dir)) throw UsageError("not a directory: " + o.dir);
  std::vector<std::string> solvers;
  {
    std::stringstream ss(o.solvers);
    std::string s;
    while (std::getline(ss, s, ',')) {
      if (s != "approx" && s != "exact") throw UsageError("unknown solver " + s);
      if (std::find(solvers.begin(), solvers.end(), s) == solvers.end()) {
        solvers.push_back(s);
      }
    }
  }
  // Exact runs first so the approx row can report its ratio.
  std::sort(solvers.begin(), solvers.end(), std::greater<>());
  if (o.jobs == 0) throw UsageError("--jobs must be positive");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        is_instance_file(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<std::vector<BenchRow>> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      results[i] = bench_one(files[i], o, solvers);
    }
  };
  const std::size_t threads = std::min(o.jobs, std::max<std::size_t>(files.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<BenchRow> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());

  const std::string csv = bench_csv(rows);
  if (o.out.empty()) {
    out << csv;
  } else {
    io::write_file(o.out, csv);
  }
  if (!o.summary.empty()) io::write_file(o.summary, summary_csv(rows));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rectangle stabbing toolkit"};
  app.name("rstab");
  app.require_subcommand(1);

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", so.instance, "Instance JSON")->required();
  solve->add_flag("--approx", so.approx, "Run the 7/4-approximation");
  solve->add_flag("--exact", so.exact, "Run branch and bound");
  solve->add_flag("--min", so.min, "Search the smallest budget up to --kmax");
  so.k_opt = solve->add_option("-k", so.k, "Budget for --approx");
  so.kmax_opt = solve->add_option("--kmax", so.kmax, "Largest budget for --min");
  so.max_size_opt = solve->add_option("--max-size", so.max_size, "Size cap for --exact (default: unbounded)");
  so.node_limit_opt = solve->add_option("--node-limit", so.node_limit, "Node cap for --exact");
  solve->add_option("--out", so.out, "Write the solution here");
  solve->add_flag("--timing", so.timing, "Report wall time");

  std::string inst_path, sol_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution");
  verify_cmd->add_option("instance", inst_path)->required();
  verify_cmd->add_option("solution", sol_path)->required();

  GenOptions go;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances and graphs");
  gen_cmd->require_subcommand(1);
  auto* planted = gen_cmd->add_subcommand("planted", "Instance with a planted solution");
  planted->add_option("--k", go.k)->required();
  planted->add_option("--n", go.n)->required();
  planted->add_option("--range", go.range, "Coordinates in [0, range)");
  planted->add_option("--seed", go.seed);
  go.distractors_opt = planted->add_option("--distractors", go.distractors);
  planted->add_option("--out", go.out);
  planted->add_option("--witness-out", go.witness_out);
  auto* uniform = gen_cmd->add_subcommand("uniform", "Uniform random instance");
  uniform->add_option("--n", go.n)->required();
  uniform->add_option("--lines", go.lines)->required();
  uniform->add_option("--range", go.range);
  uniform->add_option("--seed", go.seed);
  uniform->add_option("--out", go.out);
  auto* mcgraph = gen_cmd->add_subcommand("mcgraph", "Multicolored clique graph");
  mcgraph->add_option("--k", go.k)->required();
  mcgraph->add_option("--r", go.r)->required();
  mcgraph->add_option("--prob", go.prob, "Cross-part edge probability num/den");
  mcgraph->add_option("--seed", go.seed);
  mcgraph->add_flag("--plant", go.plant);
  mcgraph->add_option("--out", go.out);
  mcgraph->add_option("--clique-out", go.clique_out);
  auto* discretize = gen_cmd->add_subcommand("discretize", "Colored points CSV to instance");
  discretize->add_option("points", go.input)->required();
  discretize->add_option("--out", go.out);

  std::string graph_path, out_path, strips_path, clique_path, eps = "1/1";
  bool nondegenerate = false;
  auto* reduce = app.add_subcommand("reduce", "Build the hardness instance of a graph");
  reduce->add_option("graph", graph_path)->required();
  reduce->add_option("--out", out_path);
  reduce->add_option("--strips", strips_path);
  reduce->add_flag("--nondegenerate", nondegenerate);

  auto* forward = app.add_subcommand("forward", "Lines encoding a clique");
  forward->add_option("strips", strips_path)->required();
  forward->add_option("clique", clique_path)->required();
  forward->add_option("--out", out_path);

  auto* extract = app.add_subcommand("extract", "Recover a clique from a solution");
  extract->add_option("instance", inst_path)->required();
  extract->add_option("solution", sol_path)->required();
  extract->add_option("--strips", strips_path)->required();
  extract->add_option("--eps", eps);

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Run solvers over a directory");
  bench->add_option("dir", bo.dir)->required();
  bench->add_option("--solvers", bo.solvers);
  bench->add_option("--kmax", bo.kmax);
  bench->add_option("--max-size", bo.max_size);
  bench->add_option("--node-limit", bo.node_limit);
  bench->add_option("--jobs", bo.jobs);
  bench->add_option("--out", bo.out);
  bench->add_option("--summary", bo.summary);
  bench->add_flag("--timing", bo.timing);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(so, out);
    if (*verify_cmd) return cmd_verify(inst_path, sol_path, out, err);
    if (*planted) return cmd_gen_planted(go, out);
    if (*uniform) {
      emit(io::to_json(gen::gen_uniform(go.n, go.lines, go.range, go.seed)), go.out, out);
      return kOk;
    }
    if (*mcgraph) return cmd_gen_mcgraph(go, out);
    if (*discretize) return cmd_gen_discretize(go, out, err);
    if (*reduce) {
      return cmd_reduce(graph_path, out_path, strips_path, nondegenerate, out, err);
    }
    if (*forward) return cmd_forward(strips_path, clique_path, out_path, out);
    if (*extract) return cmd_extract(inst_path, sol_path, strips_path, eps, out, err);
    if (*bench) return cmd_bench(bo, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace rstab::cli
