#include "lsa/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>

#include "lsa/bench.hpp"
#include "lsa/complete_solver.hpp"
#include "lsa/config_lp.hpp"
#include "lsa/error.hpp"
#include "lsa/exact.hpp"
#include "lsa/extension.hpp"
#include "lsa/fpt.hpp"
#include "lsa/io.hpp"
#include "lsa/oracle.hpp"
#include "lsa/reductions.hpp"
#include "lsa/rounding.hpp"

namespace lsa::cli {

namespace {

using json = nlohmann::json;

// Doubles that must print with exactly nine decimals travel as tagged strings
// and are spliced back as bare numbers when the document is written.
constexpr const char* kFixedTag = "\x01" "fixed:";

json fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return std::string(kFixedTag) + buf;
}

std::string render(const json& j) {
  static const std::regex tagged(R"re("\\u0001fixed:([-0-9.]+)")re");
  return std::regex_replace(j.dump(), tagged, "$1");
}

json load(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return io::parse_document(text);
  }
  return io::read_file(path);
}

json allocation_json(const Allocation& a) {
  if (!is_feasible(a)) throw InternalError("refusing to emit an infeasible allocation");
  return io::to_json(a);
}

double ratio(Value welfare, double bound) {
  if (bound > 0) return static_cast<double>(welfare) / bound;
  return welfare == 0 ? 1.0 : 0.0;
}

template <class T>
T field(const json& params, const char* name) {
  if (!params.is_object() || !params.contains(name)) {
    throw InputError(std::string("params need field '") + name + "'");
  }
  try {
    return params.at(name).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad params field '") + name + "': " + e.what());
  }
}

Formula3SAT formula_from(const json& params) {
  Formula3SAT f;
  f.num_vars = field<int>(params, "num_vars");
  for (const auto& c : field<std::vector<std::vector<int>>>(params, "clauses")) {
    if (c.size() != 3) throw InputError("every clause needs exactly 3 literals");
    f.clauses.push_back({c[0], c[1], c[2]});
  }
  return f;
}

Variant variant_from(const json& params, const std::string& flag) {
  std::string name = flag;
  if (name.empty()) name = params.contains("variant") ? field<std::string>(params, "variant") : "partial";
  if (name == "partial") return Variant::Partial;
  if (name == "complete") return Variant::Complete;
  throw InputError("unknown variant '" + name + "'");
}

MaxMinInstance maxmin_from(const json& params) {
  MaxMinInstance mm;
  mm.utility = field<std::vector<std::vector<Value>>>(params, "utility");
  mm.num_agents = static_cast<int>(mm.utility.size());
  mm.num_items = mm.utility.empty() ? 0 : static_cast<int>(mm.utility.front().size());
  return mm;
}

ThreePartitionInstance three_partition_from(const json& params) {
  ThreePartitionInstance tp;
  tp.a = field<std::vector<Value>>(params, "a");
  tp.target = field<Value>(params, "T");
  tp.m = static_cast<int>(tp.a.size() / 3);
  return tp;
}

// 1-based labels from the params file to 0-based indices.
std::vector<int> zero_based(std::vector<int> labels) {
  for (int& x : labels) {
    if (x < 1) throw InputError("labels in params are 1-based");
    --x;
  }
  return labels;
}

struct Inputs {
  std::string instance;
  std::string allocation;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Latin square allocation solver"};
  app.require_subcommand(1);

  Inputs io_paths;
  std::string algorithm = "partial-approx";
  std::string objective = "umax";
  std::string mode = "partial";
  std::optional<std::uint64_t> seed;
  bool derandomize = false;
  double delta = 0.05;
  double epsilon = 1e-9;
  int limit_n = 0;
  double time_limit = 0.0;
  int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  bool no_pruning = false;
  int max_rounds = 0;
  std::string notion;
  bool weak = false;
  std::string scope = "same";
  int pareto_limit = kParetoLimit;
  std::string family;
  std::string params_path;
  std::string variant;
  std::string config_path;
  bool deterministic = false;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", io_paths.instance, "Instance JSON path ('-' or omitted: stdin)");
  };
  auto add_exact_limits = [&](CLI::App* sub) {
    sub->add_option("--limit-n", limit_n, "Largest order for exhaustive search");
    sub->add_option("--time-limit", time_limit, "Seconds before exhaustive search gives up");
    sub->add_option("--threads", threads, "Worker threads for exhaustive search");
  };

  CLI::App* solve = app.add_subcommand("solve", "Run an allocation algorithm");
  add_instance(solve);
  solve->add_option("--algorithm", algorithm)->check(
      CLI::IsMember({"partial-approx", "complete-approx", "fpt", "exact"}));
  solve->add_option("--objective", objective)->check(CLI::IsMember({"umax", "emax"}));
  solve->add_option("--mode", mode)->check(CLI::IsMember({"partial", "complete"}));
  solve->add_option("--seed", seed, "Seed; selects randomized rounding unless --derandomize");
  solve->add_flag("--derandomize", derandomize, "Conditional-expectation rounding (default)");
  solve->add_option("--delta", delta, "FPT failure probability");
  solve->add_option("--epsilon", epsilon, "LP tolerance");
  add_exact_limits(solve);

  CLI::App* lp = app.add_subcommand("lp", "Solve the configuration LP");
  add_instance(lp);
  lp->add_option("--epsilon", epsilon, "LP tolerance");
  lp->add_option("--max-rounds", max_rounds, "Pricing rounds (0: 10 n^3)");

  CLI::App* ext = app.add_subcommand("extend", "Complete a partial allocation");
  ext->add_option("--in", io_paths.allocation, "Allocation JSON path")->required();
  ext->add_option("--instance", io_paths.instance, "Instance JSON path (adds welfare)");

  CLI::App* check = app.add_subcommand("check", "Test a fairness or efficiency notion");
  add_instance(check);
  check->add_option("--in", io_paths.allocation, "Allocation JSON path")->required();
  check->add_option("--notion", notion, "EF, EF1, EFX, PROP, PROP1, PROPX, EQ, EQ1, EQX, non-wasteful, pareto-optimal")
      ->required();
  check->add_flag("--weak", weak, "Weak EFX/EQX/PROPX (positive goods only)");
  check->add_option("--scope", scope, "Pareto comparison class")->check(CLI::IsMember({"same", "partial", "complete"}));
  check->add_option("--pareto-limit", pareto_limit, "Largest order for the Pareto search");

  CLI::App* exact = app.add_subcommand("exact", "Exact optimum by exhaustive search");
  add_instance(exact);
  exact->add_option("--objective", objective)->check(CLI::IsMember({"umax", "emax"}));
  exact->add_option("--mode", mode)->check(CLI::IsMember({"partial", "complete"}));
  exact->add_flag("--no-pruning", no_pruning);
  add_exact_limits(exact);

  CLI::App* fair = app.add_subcommand("fair-exists", "Search for a fair complete allocation");
  add_instance(fair);
  fair->add_option("--notion", notion)->required();
  fair->add_flag("--weak", weak);
  fair->add_flag("--no-pruning", no_pruning);
  fair->add_option("--limit-n", limit_n);

  CLI::App* generate = app.add_subcommand("generate", "Build a reduction instance");
  generate->add_option("--family", family)->required()->check(CLI::IsMember({"pls", "3sat", "maxmin", "3partition"}));
  generate->add_option("--params", params_path, "Parameter JSON path ('-': stdin)");
  generate->add_option("--variant", variant)->check(CLI::IsMember({"partial", "complete"}));

  CLI::App* witness = app.add_subcommand("witness", "Map a source certificate to an allocation");
  witness->add_option("--family", family)->required()->check(CLI::IsMember({"pls", "3sat", "maxmin", "3partition"}));
  witness->add_option("--params", params_path, "Parameter JSON path ('-': stdin)");
  witness->add_option("--variant", variant)->check(CLI::IsMember({"partial", "complete"}));
  add_exact_limits(witness);

  CLI::App* bench = app.add_subcommand("bench", "Benchmark algorithms against the oracle (CSV)");
  bench->add_option("--config", config_path, "Bench config JSON path ('-': stdin)");
  bench->add_flag("--deterministic", deterministic, "Write wall_ms as 0 for byte-identical runs");

  CLI::App* binary = app.add_subcommand("binary-emax", "Partial Emax >= 1 check for binary valuations");
  add_instance(binary);

  auto fail = [&](const char* kind, const std::string& message, int code) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("usage_error", e.what(), 1);
  }

  ExactOptions exact_options;
  if (limit_n > 0) exact_options.limit_partial = exact_options.limit_complete = limit_n;
  exact_options.time_limit = time_limit;
  exact_options.threads = threads;
  exact_options.pruning = !no_pruning;

  try {
    json result;
    if (solve->parsed()) {
      const Instance inst = io::instance_from_json(load(io_paths.instance, in));
      const Objective obj = parse_objective(objective);
      if (obj == Objective::Emax && algorithm != "exact") {
        throw InputError("only --algorithm exact supports --objective emax");
      }
      const RoundingMode rounding{!seed || derandomize, seed.value_or(0)};
      LpOptions lp_options;
      lp_options.epsilon = epsilon;
      if (algorithm == "partial-approx") {
        const auto r = solve_partial_approx(inst, rounding, lp_options);
        result = allocation_json(r.outcome.allocation);
        result["welfare"] = r.outcome.welfare;
        result["lp_bound"] = fixed9(r.lp_bound);
        result["ratio"] = ratio(r.outcome.welfare, r.lp_bound);
        result["rounding"] = rounding.derandomize ? "derandomized" : "randomized";
        if (!rounding.derandomize) result["seed"] = rounding.seed;
      } else if (algorithm == "complete-approx") {
        const auto r = solve_complete_approx(inst, rounding, lp_options);
        result = allocation_json(r.allocation);
        result["welfare"] = r.welfare;
        result["lp_bound"] = fixed9(r.lp_bound);
        result["ratio"] = ratio(r.welfare, r.lp_bound);
        result["block_chosen"] = r.block_chosen;
        result["partial_welfare"] = r.partial_welfare;
        result["rounding"] = rounding.derandomize ? "derandomized" : "randomized";
        if (!rounding.derandomize) result["seed"] = rounding.seed;
      } else if (algorithm == "fpt") {
        FptOptions options;
        options.delta = delta;
        options.seed = seed.value_or(0);
        options.exact = exact_options;
        const auto r = solve_fpt_value(inst, parse_mode(mode), options);
        result = allocation_json(r.allocation);
        result["value"] = r.value;
        result["delta"] = r.delta;
        result["deterministic"] = r.deterministic || r.enumerated;
        result["enumerated"] = r.enumerated;
        result["s_reached"] = r.s_reached;
        result["colorings"] = r.colorings;
      } else {
        const auto r = solve_exact_enumeration(inst, obj, parse_mode(mode), exact_options);
        result = allocation_json(r.allocation);
        result["value"] = r.value;
        result["objective"] = objective;
        result["mode"] = mode;
      }
    } else if (lp->parsed()) {
      const Instance inst = io::instance_from_json(load(io_paths.instance, in));
      LpOptions options;
      options.epsilon = epsilon;
      options.max_rounds = max_rounds;
      const LpResult r = solve_configuration_lp(inst, options);
      json support = json::array();
      for (const auto& col : r.solution.columns) {
        json cells = json::array();
        for (const Cell& c : col.bundle) cells.push_back({c.item + 1, c.round + 1});
        support.push_back({{"agent", col.agent + 1}, {"weight", col.weight}, {"value", col.value}, {"cells", cells}});
      }
      result = {{"lp_bound", fixed9(r.solution.objective)},
                {"iterations", r.iterations},
                {"columns", r.columns},
                {"support", support}};
    } else if (ext->parsed()) {
      const Allocation a = io::allocation_from_json(load(io_paths.allocation, in));
      if (io_paths.instance.empty()) {
        result = allocation_json(extend(a));
      } else {
        const Instance inst = io::read_instance(io_paths.instance);
        const Allocation full = extend(inst, a);
        result = allocation_json(full);
        result["welfare"] = utilitarian_welfare(inst, full);
      }
    } else if (check->parsed()) {
      if (io_paths.instance.empty() && io_paths.allocation.empty()) {
        throw InputError("check needs --instance or --in from a file");
      }
      const Instance inst = io::instance_from_json(load(io_paths.instance, in));
      const Allocation a = io::allocation_from_json(load(io_paths.allocation, in));
      require_same_order(inst, a);
      if (!is_feasible(a)) throw InputError("allocation is infeasible");
      bool satisfied = false;
      if (notion == "non-wasteful" || notion == "pareto-optimal") {
        const ParetoScope s = scope == "partial"    ? ParetoScope::Partial
                              : scope == "complete" ? ParetoScope::Complete
                                                    : ParetoScope::SameAsInput;
        satisfied = efficiency_check(inst, a, parse_efficiency(notion), s, pareto_limit);
      } else {
        satisfied = fairness_check(inst, a, parse_fairness(notion), weak);
      }
      result = {{"notion", notion}, {"weak", weak}, {"satisfied", satisfied}};
    } else if (exact->parsed()) {
      const Instance inst = io::instance_from_json(load(io_paths.instance, in));
      const auto r = solve_exact_enumeration(inst, parse_objective(objective), parse_mode(mode), exact_options);
      result = allocation_json(r.allocation);
      result["value"] = r.value;
      result["objective"] = objective;
      result["mode"] = mode;
      result["nodes"] = r.nodes;
    } else if (fair->parsed()) {
      const Instance inst = io::instance_from_json(load(io_paths.instance, in));
      FairSearchOptions options;
      if (limit_n > 0) options.limit = limit_n;
      options.pruning = !no_pruning;
      const auto r = exists_fair_complete(inst, parse_fairness(notion), weak, options);
      result = {{"notion", notion}, {"weak", weak}, {"exists", r.exists},
                {"witness", r.witness ? allocation_json(*r.witness) : json(nullptr)}};
    } else if (generate->parsed() || witness->parsed()) {
      const json params = load(params_path, in);
      const bool want_witness = witness->parsed();
      if (family == "pls") {
        const Allocation p = io::allocation_from_json(params);
        const Instance inst = from_partial_latin_square(p);
        if (!want_witness) {
          result = io::to_json(inst);
        } else {
          // Completion search is exhaustive and limited to small orders.
          const auto r = solve_exact_enumeration(inst, Objective::Umax, Mode::Complete, exact_options);
          if (r.value != static_cast<Value>(inst.n()) * inst.n()) {
            throw SolverError("partial Latin square has no completion");
          }
          result = allocation_json(r.allocation);
        }
      } else if (family == "3sat") {
        const Formula3SAT f = formula_from(params);
        const Variant v = variant_from(params, variant);
        if (!want_witness) {
          result = io::to_json(from_3sat(f, v));
        } else {
          result = allocation_json(assignment_to_allocation(f, field<std::vector<bool>>(params, "truth"), v));
        }
      } else if (family == "maxmin") {
        const MaxMinInstance mm = maxmin_from(params);
        if (!want_witness) {
          result = io::to_json(from_maxmin(mm));
        } else {
          result = allocation_json(partition_to_allocation(mm, zero_based(field<std::vector<int>>(params, "partition"))));
        }
      } else {
        const ThreePartitionInstance tp = three_partition_from(params);
        if (!want_witness) {
          result = io::to_json(from_3partition(tp));
        } else {
          std::vector<std::array<int, 3>> parts;
          for (const auto& part : field<std::vector<std::vector<int>>>(params, "parts")) {
            if (part.size() != 3) throw InputError("every part needs exactly 3 indices");
            const auto z = zero_based(part);
            parts.push_back({z[0], z[1], z[2]});
          }
          result = allocation_json(partition_to_fair_allocation(tp, parts));
        }
      }
    } else if (bench->parsed()) {
      BenchConfig config = bench_config_from_json(load(config_path, in));
      config.deterministic = config.deterministic || deterministic;
      std::ostringstream notes;
      run_bench(config, out, notes);
      err << notes.str();
      return 0;
    } else if (binary->parsed()) {
      const Instance inst = io::instance_from_json(load(io_paths.instance, in));
      result = {{"positive", binary_partial_emax_positive(inst)}};
    }
    out << render(result) << '\n';
    return 0;
  } catch (const InputError& e) {
    return fail("input_error", e.what(), 1);
  } catch (const SolverError& e) {
    return fail("solver_error", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("solver_error", e.what(), 2);
  }
}

}  // namespace lsa::cli
