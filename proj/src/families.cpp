#include "ctree/families.hpp"

#include <algorithm>
#include <limits>

#include "ctree/error.hpp"
#include "ctree/parallel.hpp"
#include "ctree/semantics.hpp"

namespace ctree {

std::vector<Expression> reduced_pool(const StructureInstance& u, std::span<const Var> inputs, const Measure& psi,
                                     std::uint64_t budget) {
  auto pool = enumerate_pool(u, inputs, psi, budget);
  if (pool.empty()) return {};
  auto q = quotient_classes(u, inputs, pool, psi);
  std::vector<Expression> kept;
  for (std::size_t g = 0; g < q.attributes.size(); ++g)
    if (!q.ones[g].empty() && !(q.ones[g] == q.all)) kept.push_back(q.attributes[g]);
  // Restore pool order.
  std::vector<Expression> out;
  for (const auto& e : pool)
    if (std::find(kept.begin(), kept.end(), e) != kept.end()) out.push_back(e);
  return out;
}

Triple evaluate_triple(const PoolContext& ctx, const Problem& z, const Measure& psi) {
  return {psi_i(psi, z), ctx.psi_d(z).value, ctx.psi_a(z).value};
}

namespace {

std::string seq_label(const std::vector<Expression>& seq) {
  std::string s;
  for (const auto& e : seq) s += (s.empty() ? "" : ";") + e.to_string();
  return s;
}

void subsets(const std::vector<Expression>& pool, const std::vector<std::uint64_t>& weights, std::size_t max_size,
             std::uint64_t budget, std::size_t from, std::vector<std::size_t>& cur, std::uint64_t w,
             std::vector<std::vector<std::size_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (cur.size() == max_size) return;
  for (std::size_t k = from; k < pool.size(); ++k) {
    if (w + weights[k] > budget) continue;
    cur.push_back(k);
    subsets(pool, weights, max_size, budget, k + 1, cur, w + weights[k], out);
    cur.pop_back();
  }
}

}  // namespace

Family pool_family(const StructureInstance& u, const Measure& psi, const std::vector<Var>& inputs,
                   const FamilyOptions& options, const std::vector<NamedProblem>& extra) {
  Family f;
  auto pool = reduced_pool(u, inputs, psi, options.budget);
  auto full = enumerate_pool(u, inputs, psi);
  if (full.empty()) throw Error(ErrorKind::EmptyPool, "structure has no predicate expressions over the inputs");
  std::uint64_t w_min = std::numeric_limits<std::uint64_t>::max();
  for (const auto& e : full) w_min = std::min(w_min, std::max<std::uint64_t>(1, attribute_weight(psi, e)));
  std::uint64_t by_size = (options.max_size + 1) * w_min - 1;
  f.closed_budget = std::min(options.budget, by_size);
  f.descriptor = "subsets(n=" + std::to_string(inputs.size()) + ", budget=" + std::to_string(options.budget) +
                 ", size<=" + std::to_string(options.max_size) + ", pool=" + std::to_string(pool.size()) + ")";

  std::vector<std::uint64_t> weights;
  for (const auto& e : pool) weights.push_back(attribute_weight(psi, e));
  // count[k][w]: subsets of size k and weight w, saturating.
  std::vector<std::vector<std::uint64_t>> count(options.max_size + 1,
                                                std::vector<std::uint64_t>(options.budget + 1, 0));
  count[0][0] = 1;
  for (auto w : weights)
    for (std::size_t k = options.max_size; k >= 1; --k)
      for (std::uint64_t b = options.budget; b >= w && b <= options.budget; --b) {
        count[k][b] = std::min(kMaxFamilySubsets + 1, count[k][b] + count[k - 1][b - w]);
        if (b == 0) break;
      }
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= options.max_size; ++k)
    for (auto c : count[k]) total = std::min(kMaxFamilySubsets + 1, total + c);
  if (total > kMaxFamilySubsets)
    throw Error(ErrorKind::BudgetTooLargeForEnumeration,
                "more than " + std::to_string(kMaxFamilySubsets) + " subsets of a " + std::to_string(pool.size()) +
                    "-expression pool; lower the budget, the subset size or the truncation");
  std::vector<std::vector<std::size_t>> picks;
  std::vector<std::size_t> cur;
  subsets(pool, weights, options.max_size, options.budget, 0, cur, 0, picks);

  // Two problems per subset (distinct-singleton and constant nu), built on demand.
  auto problem_at = [&](std::size_t k) {
    std::vector<Expression> seq;
    for (auto g : picks[k / 2]) seq.push_back(pool[g]);
    auto nu = k % 2 == 0 ? AnswerTable::distinct_singletons(seq.size()) : AnswerTable::constant(seq.size(), {0});
    return Problem(inputs, std::move(nu), std::move(seq));
  };
  std::vector<Triple> values(2 * picks.size());
  if (!picks.empty()) {
    PoolContext ctx(u, inputs, pool, psi);
    parallel_for(values.size(), options.threads,
                 [&](std::size_t k) { values[k] = evaluate_triple(ctx, problem_at(k), psi); });
  }
  std::vector<Triple> extra_values(extra.size());
  parallel_for(extra.size(), options.threads, [&](std::size_t k) {
    const auto& z = extra[k].second;
    auto own = reduced_pool(u, inputs, psi, psi_i(psi, z));
    if (own.empty()) {
      extra_values[k] = {psi_i(psi, z), 0, 0};
      return;
    }
    PoolContext ctx(u, inputs, own, psi);
    extra_values[k] = evaluate_triple(ctx, z, psi);
  });

  for (std::size_t k = 0; k < values.size(); ++k) {
    std::vector<Expression> seq;
    for (auto g : picks[k / 2]) seq.push_back(pool[g]);
    f.members.push_back({values[k], (k % 2 == 0 ? "distinct:" : "const:") + seq_label(seq)});
  }
  for (std::size_t k = 0; k < extra.size(); ++k) f.members.push_back({extra_values[k], extra[k].first});
  if (options.padding)
    for (std::uint64_t k = 0; k * w_min <= options.budget; ++k)
      f.members.push_back({{k * w_min, 0, 0}, "pad" + std::to_string(k)});
  return f;
}

std::vector<NamedProblem> block_witnesses(const TauPair& tp, std::uint32_t n) {
  const auto& block = tp.blocks[tp.active_block(n)];
  auto k_max = block.trunc.max_index;
  std::vector<NamedProblem> out;
  auto add = [&](WitnessKind kind, std::int64_t param) {
    auto z = witness_problem(kind, param, n, block.level);
    try {
      require_predicates(tp.pair.u, z);
    } catch (const Error&) {
      return;
    }
    out.emplace_back(witness_kind_name(kind) + "(" + std::to_string(param) + ")", std::move(z));
  };
  switch (block.v) {
    case 3:
      for (std::int64_t t = 1; t <= std::min<std::int64_t>(k_max, 12); ++t) add(WitnessKind::Zbin3, t);
      break;
    case 5:
      for (std::int64_t i = 0; i <= std::min<std::int64_t>(k_max, 3); ++i) add(WitnessKind::Z5, i);
      break;
    case 6:
      for (std::int64_t m = 1; 2 * m + 1 <= k_max; ++m) add(WitnessKind::Z6, m);
      break;
    case 7:
      for (std::int64_t t = 1; t <= std::min<std::int64_t>(k_max, 12); ++t) add(WitnessKind::Zt7, t);
      for (std::int64_t i = 1; i <= k_max; ++i) add(WitnessKind::Eta7, i);
      break;
    default: break;
  }
  return out;
}

Family tau_family(const TauPair& tp, std::uint32_t n, const FamilyOptions& options) {
  std::vector<Var> inputs;
  for (Var v = 1; v <= n; ++v) inputs.push_back(v);
  const auto& block = tp.blocks[tp.active_block(n)];
  auto f = pool_family(tp.pair.u, tp.pair.psi, inputs, options, block_witnesses(tp, n));
  f.descriptor = "tau-block(v=" + std::to_string(block.v) + ", level=" + std::to_string(block.level) + ") " +
                 f.descriptor;
  // Padding: psi^i unbounded at psi^d = psi^a = 0.
  f.infinity_from[0][1] = 0;
  f.infinity_from[0][2] = 0;
  if (block.v == 3 || block.v == 4) {
    std::uint64_t top = 0;
    for (const auto& z : f.members) top = std::max(top, z.values.a);
    f.infinity_from[1][2] = top;
  } else if (block.v == 7) {
    f.infinity_from[1][2] = 2;
  }
  return f;
}

bool parameter_bounded(int v, int param) {
  switch (param) {
    case 0: return false;
    case 1: return v == 2;
    case 2: return v == 2 || v == 3 || v == 4;
  }
  throw Error(ErrorKind::Parse, "parameter index must be 0, 1 or 2");
}

Hints upper_hints(int v, const Family& family, int b, int c) {
  Hints h;
  h.domain_infinite = !family.infinity_from[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)].has_value();
  h.bounded = parameter_bounded(v, b);
  return h;
}

Hints lower_hints(int v, const Family& family, int b, int c) {
  Hints h;
  h.domain_infinite = !parameter_bounded(v, c);
  h.bounded = family.infinity_from[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)].has_value();
  return h;
}

TypelabCase observed_consistency(const TauSequence& tau, const TauPair& tp, std::uint32_t n, std::uint64_t big_m,
                                 const FamilyOptions& options) {
  auto predicted = predicted_table(tau, n);
  auto family = tau_family(tp, n, options);
  TypelabCase out;
  out.n = n;
  out.v = predicted.v;
  out.descriptor = family.descriptor;
  out.family_size = family.members.size();
  out.closed_budget = family.closed_budget;
  out.consistent = true;
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c) {
      auto bi = static_cast<std::size_t>(b), ci = static_cast<std::size_t>(c);
      auto& up = out.upper[bi][ci];
      up.profile = u_profile(family, b, c, big_m);
      up.hints = upper_hints(predicted.v, family, b, c);
      up.verdict = classify_profile(up.profile, up.hints);
      up.predicted = predicted.t[bi][ci];
      up.consistent = up.verdict.contains(up.predicted);
      auto& lo = out.lower[bi][ci];
      lo.profile = l_profile(family, b, c, big_m);
      lo.hints = lower_hints(predicted.v, family, b, c);
      lo.verdict = classify_profile(lo.profile, lo.hints);
      lo.predicted = predicted.l[bi][ci];
      lo.consistent = lo.verdict.contains(lo.predicted);
      out.consistent = out.consistent && up.consistent && lo.consistent;
    }
  out.duality_ok = true;
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t c = 0; c < 3; ++c) out.duality_ok = out.duality_ok && predicted.l[b][c] == rho(predicted.t[c][b]);
  return out;
}

}  // namespace ctree
