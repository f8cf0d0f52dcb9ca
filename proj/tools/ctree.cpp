// Command-line front end: evaluation, optimization, witness zoo, type lab.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ctree/error.hpp"
#include "ctree/families.hpp"
#include "ctree/json_io.hpp"
#include "ctree/random_instances.hpp"
#include "ctree/reports.hpp"
#include "ctree/semantics.hpp"
#include "ctree/solvers.hpp"
#include "ctree/zoo.hpp"

using namespace ctree;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      auto v = static_cast<std::uint32_t>(std::stoul(text));
      return {v, v};
    }
    auto lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, dots)));
    auto hi = static_cast<std::uint32_t>(std::stoul(text.substr(dots + 2)));
    if (lo == 0 || hi < lo) throw std::invalid_argument("range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "bad range '" + text + "', expected a or a..b with 1 <= a <= b");
  }
}

struct EvalArgs {
  std::string structure, problem, format = "json";
  std::vector<std::string> input;
};

int cmd_eval(const EvalArgs& a) {
  auto u = structure_from_json(read_json_file(a.structure));
  auto z = problem_from_json(read_json_file(a.problem));
  validate_problem(u, z);
  std::vector<Atom> atoms;
  for (const auto& s : a.input) atoms.push_back(parse_atom(s));
  auto tuple = resolve_atoms(u, atoms);
  if (tuple.size() != z.input_count())
    throw Error(ErrorKind::ArityMismatch, "problem has " + std::to_string(z.input_count()) + " inputs, got " +
                                              std::to_string(tuple.size()));
  auto alphas = alpha_values(u, z, tuple);
  auto code = signature_of(u, z, tuple);
  const auto& answer = problem_value(u, z, tuple);
  if (a.format == "text") {
    std::cout << "answer {";
    for (std::size_t k = 0; k < answer.size(); ++k) std::cout << (k ? "," : "") << answer[k];
    std::cout << "}\nsignature " << signature_string(code, z.predicate_count()) << "\n";
  } else {
    Json in = Json::array();
    for (const auto& x : atoms) in.push_back(atom_to_json(x));
    std::vector<int> av(alphas.begin(), alphas.end());
    std::cout << dump_canonical(Json{{"input", in},
                                     {"alphas", av},
                                     {"signature", signature_string(code, z.predicate_count())},
                                     {"answer", answer}});
  }
  return kOk;
}

struct OptimizeArgs {
  std::string structure, problem, measure, mode = "det", out, format = "json";
  std::optional<std::uint64_t> pool_budget;
};

int cmd_optimize(const OptimizeArgs& a) {
  auto u = structure_from_json(read_json_file(a.structure));
  auto z = problem_from_json(read_json_file(a.problem));
  auto psi = a.measure.empty() ? Measure::depth(u) : measure_from_json(read_json_file(a.measure));
  validate_problem(u, z);
  auto pool = enumerate_pool(u, z.inputs(), psi, a.pool_budget);
  for (const auto& e : z.seq())
    if (e.is_predicate() && std::find(pool.begin(), pool.end(), e) == pool.end()) pool.push_back(e);
  bool det = a.mode == "det";
  auto res = det ? psi_d_exact(u, z, pool, psi) : psi_a_exact(u, z, pool, psi);
  auto check = solves(u, res.tree, z, det ? SolveMode::Deterministic : SolveMode::Nondeterministic);
  bool measured = measure_tree(psi, res.tree) == res.value;
  Json tree = tree_to_json(res.tree);
  if (!a.out.empty()) write_file(a.out, dump_canonical(tree));
  if (a.format == "text") {
    std::cout << (det ? "psi_d = " : "psi_a = ") << res.value << "  (psi_i = " << psi_i(psi, z) << ", pool "
              << pool.size() << ")\n"
              << render_tree(res.tree);
  } else {
    Json j{{"mode", det ? "det" : "nondet"},
           {"value", res.value},
           {"psi_i", psi_i(psi, z)},
           {"pool_size", pool.size()},
           {"witness_solves", check.ok},
           {"witness_measure_matches", measured}};
    if (a.out.empty()) j["tree"] = tree;
    std::cout << dump_canonical(j);
  }
  if (!check.ok) std::cerr << "witness check failed: " << check.diagnostic << "\n";
  return check.ok && measured ? kOk : kCheckFailed;
}

struct ZooBuildArgs {
  std::optional<int> pi;
  std::string tau, structure_out, measure_out;
  std::int64_t trunc = 4;
  std::uint32_t lift = 0;
};

int cmd_zoo_build(const ZooBuildArgs& a) {
  if (a.pi.has_value() == !a.tau.empty()) throw Error(ErrorKind::Parse, "give exactly one of --pi and --tau");
  SmPair pair = a.pi ? build_pi(*a.pi, default_truncation(*a.pi, a.trunc))
                     : build_tau_pair(parse_tau(a.tau), a.trunc).pair;
  if (a.pi && a.lift > 0) pair = lift_structure(pair, a.lift);
  auto sj = structure_to_json(pair.u);
  auto mj = measure_to_json(pair.psi);
  if (!a.structure_out.empty()) write_file(a.structure_out, dump_canonical(sj));
  if (!a.measure_out.empty()) write_file(a.measure_out, dump_canonical(mj));
  if (a.structure_out.empty() && a.measure_out.empty())
    std::cout << dump_canonical(Json{{"structure", sj}, {"measure", mj}});
  return kOk;
}

struct ZooProblemArgs {
  std::string kind, out;
  std::int64_t param = 1;
  std::uint32_t n = 1;
  std::uint32_t level = 0;
};

int cmd_zoo_problem(const ZooProblemArgs& a) {
  auto z = witness_problem(parse_witness_kind(a.kind), a.param, a.n,
                           a.level ? std::optional<std::uint32_t>(a.level) : std::nullopt);
  auto text = dump_canonical(problem_to_json(z));
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_file(a.out, text);
  }
  return kOk;
}

struct TypelabArgs {
  std::string tau, n = "1", format = "text";
  std::uint64_t big_m = 3;
  std::int64_t trunc = 4;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> max_size;
  bool lattice = false;
};

int cmd_typelab(const TypelabArgs& a, std::size_t threads) {
  if (a.lattice) {
    std::cout << (a.format == "json" ? dump_canonical(lattice_to_json()) : lattice_text());
    return kOk;
  }
  if (a.tau.empty()) throw Error(ErrorKind::Parse, "typelab needs --tau or --lattice");
  TypelabConfig cfg;
  cfg.tau = a.tau;
  std::tie(cfg.n_lo, cfg.n_hi) = parse_range(a.n);
  cfg.big_m = a.big_m;
  cfg.trunc = a.trunc;
  cfg.options.budget = a.budget.value_or(a.big_m);
  cfg.options.max_size = a.max_size.value_or(static_cast<std::size_t>(cfg.options.budget));
  cfg.options.threads = threads;
  auto run = run_typelab(cfg);
  if (a.format == "json") {
    std::cout << dump_canonical(run.report);
  } else if (a.format == "csv") {
    std::cout << profiles_csv(run.cases);
  } else {
    std::cout << typelab_text(run);
  }
  return run.consistent ? kOk : kCheckFailed;
}

int cmd_chaincheck(std::size_t trials, std::uint64_t seed, std::size_t threads) {
  auto report = chaincheck_report(trials, seed, threads);
  std::cout << dump_canonical(report);
  return report["violations"].get<std::size_t>() == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computation-tree complexity toolkit"};
  app.require_subcommand(1);
  std::size_t threads = 1;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a problem on one input tuple");
  eval->add_option("--structure", ev.structure)->required();
  eval->add_option("--problem", ev.problem)->required();
  eval->add_option("--input", ev.input, "Atoms: 3, (5,1), k1^2")->required();
  eval->add_option("--format", ev.format)->check(CLI::IsMember({"json", "text"}));

  OptimizeArgs opt;
  auto* optimize = app.add_subcommand("optimize", "Exact psi^d / psi^a with a witness tree");
  optimize->add_option("--structure", opt.structure)->required();
  optimize->add_option("--problem", opt.problem)->required();
  optimize->add_option("--measure", opt.measure, "Measure JSON (default: depth)");
  optimize->add_option("--mode", opt.mode)->check(CLI::IsMember({"det", "nondet"}));
  optimize->add_option("--pool-budget", opt.pool_budget, "Drop pool expressions heavier than this");
  optimize->add_option("--out", opt.out, "Write the witness tree here");
  optimize->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  auto* zoo = app.add_subcommand("zoo", "Witness structures and problems");
  zoo->require_subcommand(1);
  ZooBuildArgs zb;
  auto* build = zoo->add_subcommand("build", "Materialize pi_r or a tau pair");
  build->add_option("--pi", zb.pi)->check(CLI::Range(2, 7));
  build->add_option("--tau", zb.tau, "Blocks v:w, e.g. 2:1,3:inf");
  build->add_option("--trunc", zb.trunc, "Largest predicate index")->check(CLI::NonNegativeNumber);
  build->add_option("--lift", zb.lift, "Lift pi_r to this level");
  build->add_option("--structure-out", zb.structure_out);
  build->add_option("--measure-out", zb.measure_out);
  ZooProblemArgs zp;
  auto* problem = zoo->add_subcommand("problem", "Named witness problem");
  problem->add_option("--kind", zp.kind)->required()->check(CLI::IsMember({"z5", "z6", "eta7", "zt7", "zbin3"}));
  problem->add_option("--param,--m,--i,--t,--q", zp.param, "Witness parameter (m, i, t or q)");
  problem->add_option("--n", zp.n, "Number of inputs")->check(CLI::PositiveNumber);
  problem->add_option("--level", zp.level, "Use lifted predicates of this level");
  problem->add_option("--out", zp.out);

  TypelabArgs tl;
  auto* typelab = app.add_subcommand("typelab", "Predicted vs observed type tables");
  typelab->add_option("--tau", tl.tau);
  typelab->add_option("--n", tl.n, "n or a..b");
  typelab->add_option("--M", tl.big_m, "Profile window 0..M");
  typelab->add_option("--trunc", tl.trunc, "Largest predicate index")->check(CLI::NonNegativeNumber);
  typelab->add_option("--budget", tl.budget, "psi^i budget of enumerated problems (default M)");
  typelab->add_option("--max-size", tl.max_size, "Largest enumerated subset (default budget)");
  typelab->add_option("--format", tl.format)->check(CLI::IsMember({"json", "csv", "text"}));
  typelab->add_flag("--lattice", tl.lattice, "Print the Hasse diagram and the seven families");

  std::size_t trials = 500;
  std::uint64_t seed = 1;
  auto* chain = app.add_subcommand("chaincheck", "psi^a <= psi^d <= psi^i on random instances");
  chain->add_option("--trials", trials);
  chain->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*eval) return cmd_eval(ev);
    if (*optimize) return cmd_optimize(opt);
    if (*build) return cmd_zoo_build(zb);
    if (*problem) return cmd_zoo_problem(zp);
    if (*typelab) return cmd_typelab(tl, threads);
    if (*chain) return cmd_chaincheck(trials, seed, threads);
  } catch (const Error& e) {
    std::cerr << dump_canonical(Json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}});
    return kUsage;
  }
  return kUsage;
}
