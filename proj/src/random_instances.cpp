#include "ctree/random_instances.hpp"

#include <algorithm>

#include "ctree/parallel.hpp"
#include "ctree/solvers.hpp"

namespace ctree {

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 finalizer over (seed, k).
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomInstance random_instance(Rng& rng, const RandomParams& params) {
  auto carrier_size = static_cast<std::size_t>(rng.range(2, static_cast<std::int64_t>(params.max_carrier)));
  std::vector<Atom> carrier;
  for (std::size_t k = 0; k < carrier_size; ++k) carrier.push_back(Atom::base(static_cast<std::int64_t>(k)));

  std::map<std::string, std::uint64_t, std::less<>> weights;
  std::vector<PredicateSym> preds;
  auto pred_count = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(params.max_predicates)));
  for (std::size_t k = 0; k < pred_count; ++k) {
    PredicateSym p{"p" + std::to_string(k), static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(params.max_arity))), {}};
    p.table.resize(table_size(carrier_size, p.arity));
    for (auto& v : p.table) v = static_cast<std::uint8_t>(rng.coin());
    weights[p.name] = static_cast<std::uint64_t>(rng.range(1, static_cast<std::int64_t>(params.max_weight)));
    preds.push_back(std::move(p));
  }
  std::vector<FunctionSym> funcs;
  if (params.with_functions) {
    auto fn_count = static_cast<std::size_t>(rng.range(1, 2));
    for (std::size_t k = 0; k < fn_count; ++k) {
      FunctionSym f{"f" + std::to_string(k), static_cast<std::size_t>(rng.range(0, 2)), {}};
      f.table.resize(table_size(carrier_size, f.arity));
      for (auto& v : f.table) v = static_cast<AtomIndex>(rng.below(carrier_size));
      weights[f.name] = static_cast<std::uint64_t>(rng.range(1, static_cast<std::int64_t>(params.max_weight)));
      funcs.push_back(std::move(f));
    }
  }
  StructureInstance u(carrier, funcs, preds);
  auto psi = Measure::weighted_depth(weights);

  auto n = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(params.max_inputs)));
  std::vector<Var> inputs;
  for (Var v = 1; v <= n; ++v) inputs.push_back(v);

  auto all = enumerate_pool(u, inputs, psi);
  std::vector<Expression> pool;
  auto pool_size = std::min<std::size_t>(all.size(), static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(params.max_pool))));
  while (pool.size() < pool_size) {
    auto k = rng.below(all.size());
    pool.push_back(all[k]);
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(k));
  }

  auto r = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(params.max_r)));
  std::vector<Expression> seq;
  Var top = static_cast<Var>(n);
  std::size_t placed = 0;
  while (placed < r) {
    if (!funcs.empty() && rng.below(3) == 0) {
      const auto& f = funcs[rng.below(funcs.size())];
      std::vector<Var> args;
      for (std::size_t k = 0; k < f.arity; ++k) args.push_back(static_cast<Var>(rng.range(1, top)));
      Var target = static_cast<Var>(rng.range(1, top + 1));
      top = std::max(top, target);
      seq.push_back(Expression::functional(target, f.name, std::move(args)));
      continue;
    }
    if (funcs.empty()) {
      seq.push_back(pool[rng.below(pool.size())]);
    } else {
      const auto& p = preds[rng.below(preds.size())];
      std::vector<Var> args;
      for (std::size_t k = 0; k < p.arity; ++k) args.push_back(static_cast<Var>(rng.range(1, top)));
      seq.push_back(Expression::predicate(p.name, std::move(args)));
    }
    ++placed;
  }
  std::vector<AnswerSet> nu;
  for (std::size_t code = 0; code < (std::size_t{1} << r); ++code) {
    AnswerSet s;
    while (s.empty())
      for (std::size_t a = 0; a < params.max_answer; ++a)
        if (rng.below(3) == 0) s.push_back(a);
    nu.push_back(std::move(s));
  }
  Problem z(inputs, AnswerTable(r, std::move(nu)), std::move(seq));
  return {std::move(u), std::move(psi), std::move(z), std::move(pool)};
}

Json chaincheck_report(std::size_t trials, std::uint64_t seed, std::size_t threads) {
  struct Row {
    std::uint64_t i = 0, d = 0, a = 0;
    std::size_t classes = 0;
  };
  std::vector<Row> rows(trials);
  parallel_for(trials, threads, [&](std::size_t k) {
    Rng rng(instance_seed(seed, k));
    auto inst = random_instance(rng, RandomParams{});
    PoolContext ctx(inst.u, inst.z.inputs(), inst.pool, inst.psi);
    rows[k] = {psi_i(inst.psi, inst.z), ctx.psi_d(inst.z).value, ctx.psi_a(inst.z).value,
               ctx.quotient().classes.size()};
  });
  std::size_t violations = 0, strict_ad = 0, strict_di = 0;
  Json first = Json::array();
  std::uint64_t checksum = 1469598103934665603ULL;
  for (std::size_t k = 0; k < trials; ++k) {
    const auto& r = rows[k];
    bool ok = r.a <= r.d && r.d <= r.i;
    if (!ok) {
      ++violations;
      if (first.size() < 10) first.push_back(Json{{"trial", k}, {"psi_i", r.i}, {"psi_d", r.d}, {"psi_a", r.a}});
    }
    strict_ad += r.a < r.d;
    strict_di += r.d < r.i;
    for (auto v : {r.i, r.d, r.a, static_cast<std::uint64_t>(r.classes)}) checksum = (checksum ^ v) * 1099511628211ULL;
  }
  return Json{{"config", {{"trials", trials}, {"seed", seed}}},
              {"violations", violations},
              {"first_violations", first},
              {"strict_a_lt_d", strict_ad},
              {"strict_d_lt_i", strict_di},
              {"checksum", checksum}};
}

}  // namespace ctree
