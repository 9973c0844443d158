#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "upcover/errors.hpp"
#include "upcover/gen.hpp"
#include "upcover/io.hpp"
#include "upcover/model.hpp"
#include "upcover/oracle.hpp"
#include "upcover/path.hpp"
#include "upcover/reductions.hpp"
#include "upcover/star.hpp"
#include "upcover/topology.hpp"
#include "upcover/tree.hpp"

namespace {

using namespace upcover;

oracle::GridSpec parse_step(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (num <= 0 || den <= 0) throw ValidationError("step must be positive");
    return {num, den};
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    long long num = std::stoll(text);
    if (num <= 0) throw ValidationError("step must be positive");
    return {num, 1};
  }
  // Decimal like 0.25 -> 25/100, reduced.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  long long num = std::stoll(digits);
  long long den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  if (num <= 0) throw ValidationError("step must be positive");
  for (long long f = 2; f <= num; ++f) {
    while (num % f == 0 && den % f == 0) {
      num /= f;
      den /= f;
    }
  }
  return {num, den};
}

double work_bound_from_env() {
  if (const char* s = std::getenv("UPCOVER_WORK_BOUND")) {
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw ValidationError("UPCOVER_WORK_BOUND is not a number");
    }
  }
  return oracle::Options{}.work_bound;
}

bool uniform_weights(const Instance& inst) {
  for (double w : inst.weights) {
    if (w != inst.weights[0]) return false;
  }
  return true;
}

struct AlgoResult {
  Solution solution;
  std::string algo;  // the solver actually used
};

AlgoResult run_algo(const Instance& inst, const std::string& algo, oracle::GridSpec grid,
                    double work_bound) {
  const int p = inst.facilities;
  if (algo == "star") {
    return {p == 1 ? star::solve_uniform_1(inst) : star::solve_uniform_p(inst, p), "star"};
  }
  if (algo == "path") {
    if (p != 1) throw ApplicabilityError("path solver handles a single facility only");
    return {path::solve_1(inst), "path"};
  }
  if (algo == "tree") {
    if (p != 1) throw ApplicabilityError("tree solver handles a single facility only");
    return {tree::solve_1(inst), "tree"};
  }
  if (algo == "brute") {
    return {oracle::solve_exact(inst, p, grid, {work_bound}), "brute"};
  }
  if (algo != "auto") throw ValidationError("unknown algorithm '" + algo + "'");

  // Topology decides the candidate order (star > path > tree > brute); each
  // solver's own preconditions decide applicability.
  Shape shape = classify(inst);
  if (shape == Shape::Star && uniform_weights(inst) && p <= inst.node_count()) {
    return {p == 1 ? star::solve_uniform_1(inst) : star::solve_uniform_p(inst, p), "star"};
  }
  if (p == 1 && !path_order(inst).empty()) {
    return {path::solve_1(inst), "path"};
  }
  if (p == 1 && is_tree(inst) && inst.integer_params) {
    return {tree::solve_1(inst), "tree"};
  }
  return {oracle::solve_exact(inst, p, grid, {work_bound}), "brute"};
}

Instance load_validated(const std::string& path) {
  Instance inst = io::read_instance_file(path);
  auto violations = validate(inst);
  if (!violations.empty()) {
    throw ValidationError(path + ": " + violations.front());
  }
  return inst;
}

/// Stream to `path`, with "-" meaning standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw ValidationError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_solve(const std::string& input, const std::string& algo, const std::string& step,
              const std::string& output) {
  Instance inst = load_validated(input);
  AlgoResult res = run_algo(inst, algo, parse_step(step), work_bound_from_env());
  Output out(output);
  io::write_solution(out.stream(), inst, res.solution);
  return 0;
}

int cmd_decide(const std::string& input, double threshold, const std::string& step,
               const std::string& output) {
  Instance inst = load_validated(input);
  bool yes = oracle::decide(inst, inst.facilities, threshold, parse_step(step),
                            {work_bound_from_env()});
  Output out(output);
  out.stream() << (yes ? "true" : "false") << '\n';
  return 0;
}

int cmd_check(const std::string& input) {
  Instance inst = io::read_instance_file(input);
  auto violations = validate(inst);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cout << "violation: " << v << '\n';
    return 1;
  }
  Instance norm = normalize(inst);
  std::cout << "valid: " << inst.node_count() << " nodes, " << inst.edge_count() << " edges, "
            << shape_name(classify(inst)) << " topology\n";
  for (int e = 0; e < inst.edge_count(); ++e) {
    if (norm.edges[e].bound != inst.edges[e].bound) {
      std::cout << "normalize: edge " << inst.edges[e].a << ' ' << inst.edges[e].b << " bound "
                << io::format_number(inst.edges[e].bound) << " -> "
                << io::format_number(norm.edges[e].bound) << '\n';
    }
    if (norm.edges[e].uncrossable) {
      std::cout << "normalize: edge " << inst.edges[e].a << ' ' << inst.edges[e].b
                << " uncrossable for coverage\n";
    }
  }
  return 0;
}

int cmd_gen(const gen::Options& opt, const std::string& output) {
  Instance inst = gen::generate(opt);
  Output out(output);
  io::write_instance(out.stream(), inst);
  return 0;
}

int cmd_reduce(const std::string& input, const std::string& to, const std::string& output) {
  reductions::KnapsackInstance ks = io::read_knapsack_file(input);
  Instance inst;
  double threshold = 0;
  if (to == "star") {
    auto g = reductions::knapsack_to_star(ks);
    inst = std::move(g.instance);
    threshold = g.threshold;
  } else if (to == "path") {
    auto g = reductions::knapsack_to_path(ks);
    inst = std::move(g.instance);
    threshold = g.threshold;
  } else {
    throw ValidationError("reduce: target must be star or path");
  }
  Output out(output);
  out.stream() << "# decide threshold: " << io::format_number(threshold) << '\n';
  io::write_instance(out.stream(), inst);
  if (output != "-") {
    std::cout << "threshold " << io::format_number(threshold) << '\n'
              << "p " << inst.facilities << '\n';
  }
  return 0;
}

struct BenchSource {
  std::string label;
  Instance instance;
};

int cmd_bench(const std::vector<std::string>& files, const std::vector<std::string>& gen_specs,
              std::vector<std::string> algos, bool verify, const std::string& step,
              const std::string& output) {
  if (algos.empty()) algos.push_back("auto");
  std::vector<BenchSource> sources;
  for (const std::string& f : files) sources.push_back({f, load_validated(f)});
  for (const std::string& spec : gen_specs) {
    // shape:n:seed
    std::istringstream ss(spec);
    std::string shape, n_str, seed_str;
    if (!std::getline(ss, shape, ':') || !std::getline(ss, n_str, ':') ||
        !std::getline(ss, seed_str)) {
      throw ValidationError("bad --gen spec '" + spec + "' (want shape:n:seed)");
    }
    gen::Options opt;
    opt.shape = gen::shape_from_name(shape);
    opt.n = std::stoi(n_str);
    opt.seed = std::stoull(seed_str);
    sources.push_back({"gen:" + spec, gen::generate(opt)});
  }

  struct Row {
    std::string instance, algo, value, usec, verified;
    const Instance* inst = nullptr;
  };
  std::vector<Row> rows;
  const double bound = work_bound_from_env();
  const oracle::GridSpec grid = parse_step(step);
  for (const BenchSource& src : sources) {
    for (const std::string& algo : algos) {
      Row row;
      row.instance = src.label;
      row.algo = algo;
      row.inst = &src.instance;
      try {
        auto start = std::chrono::steady_clock::now();
        AlgoResult res = run_algo(src.instance, algo, grid, bound);
        auto stop = std::chrono::steady_clock::now();
        row.value = io::format_number(res.solution.value);
        row.usec = std::to_string(
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
        if (verify) {
          try {
            Solution ref = oracle::solve_exact(src.instance, src.instance.facilities, grid, {bound});
            row.verified = res.solution.value == ref.value ? "true" : "false";
          } catch (const ApplicabilityError&) {
            row.verified = "";  // oracle intractable here
          }
        }
      } catch (const std::exception& e) {
        std::cerr << "bench: " << src.label << " [" << algo << "]: " << e.what() << '\n';
      }
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.instance, a.algo) < std::tie(b.instance, b.algo);
  });
  Output out(output);
  out.stream() << "instance,algo,n,m,p,R,B,value,usec,verified\n";
  for (const Row& r : rows) {
    const Instance& in = *r.inst;
    out.stream() << r.instance << ',' << r.algo << ',' << in.node_count() << ','
                 << in.edge_count() << ',' << in.facilities << ','
                 << io::format_number(in.radius) << ',' << io::format_number(in.budget) << ','
                 << r.value << ',' << r.usec << ',' << r.verified << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for the upgrading maximal covering location problem"};
  app.require_subcommand(1);

  std::string input, output = "-", algo = "auto", step = "1", reduce_to = "star";
  double threshold = 0;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("instance", input, "instance file")->required();
  solve->add_option("--algo", algo, "auto|star|path|tree|brute")->capture_default_str();
  solve->add_option("--step", step, "enumeration grid step for brute (e.g. 1, 1/2)")
      ->capture_default_str();
  solve->add_option("--output", output, "solution file, - for stdout")->capture_default_str();

  auto* decide = app.add_subcommand("decide", "answer the covering decision problem");
  decide->add_option("instance", input, "instance file")->required();
  decide->add_option("--threshold", threshold, "weight threshold T")->required();
  decide->add_option("--step", step, "enumeration grid step")->capture_default_str();
  decide->add_option("--output", output, "output, - for stdout")->capture_default_str();

  auto* check = app.add_subcommand("check", "validate an instance and report normalization");
  check->add_option("instance", input, "instance file")->required();

  gen::Options gopt;
  std::string gen_shape = "tree";
  auto* gcmd = app.add_subcommand("gen", "generate a random valid instance");
  gcmd->add_option("--shape", gen_shape, "star|path|tree")->capture_default_str();
  gcmd->add_option("--n", gopt.n, "node count")->required();
  gcmd->add_option("--seed", gopt.seed, "RNG seed")->capture_default_str();
  gcmd->add_option("--p", gopt.p, "facility count")->capture_default_str();
  gcmd->add_option("--l-max", gopt.length_max, "max edge length")->capture_default_str();
  gcmd->add_option("--c-max", gopt.cost_max, "max upgrade cost")->capture_default_str();
  gcmd->add_option("--w-max", gopt.weight_max, "max node weight")->capture_default_str();
  gcmd->add_option("--r-max", gopt.radius_max, "max radius drawn")->capture_default_str();
  gcmd->add_option("--b-max", gopt.budget_max, "max budget drawn")->capture_default_str();
  gcmd->add_option("--radius", gopt.radius, "fixed radius (overrides --r-max)");
  gcmd->add_option("--budget", gopt.budget, "fixed budget (overrides --b-max)");
  gcmd->add_flag("--uniform-weights", gopt.uniform_weights, "equal weight on every node");
  gcmd->add_flag("--tight-bounds", gopt.tight_bounds, "largest feasible bound per edge");
  gcmd->add_option("--output", output, "instance file, - for stdout")->capture_default_str();

  std::string reduce_from = "knapsack";
  auto* reduce = app.add_subcommand("reduce", "materialize a hardness gadget");
  reduce->add_option("knapsack", input, "knapsack file (n K U, then g b lines)")->required();
  reduce->add_option("--from", reduce_from, "source problem (knapsack)")->capture_default_str();
  reduce->add_option("--to", reduce_to, "star|path")->capture_default_str();
  reduce->add_option("--output", output, "instance file, - for stdout")->capture_default_str();

  std::vector<std::string> bench_files, bench_gens, bench_algos;
  bool bench_verify = false;
  auto* bench = app.add_subcommand("bench", "time solvers and emit CSV");
  bench->add_option("instances", bench_files, "instance files");
  bench->add_option("--gen", bench_gens, "generated instance spec shape:n:seed (repeatable)");
  bench->add_option("--algo", bench_algos, "algorithms to run (repeatable, default auto)");
  bench->add_flag("--verify", bench_verify, "cross-check values against the oracle");
  bench->add_option("--step", step, "enumeration grid step")->capture_default_str();
  bench->add_option("--output", output, "CSV file, - for stdout")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(input, algo, step, output);
    if (decide->parsed()) return cmd_decide(input, threshold, step, output);
    if (check->parsed()) return cmd_check(input);
    if (gcmd->parsed()) {
      gopt.shape = gen::shape_from_name(gen_shape);
      return cmd_gen(gopt, output);
    }
    if (reduce->parsed()) {
      if (reduce_from != "knapsack") throw ValidationError("reduce: only --from knapsack exists");
      return cmd_reduce(input, reduce_to, output);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_files, bench_gens, bench_algos, bench_verify, step, output);
    }
  } catch (const ApplicabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
