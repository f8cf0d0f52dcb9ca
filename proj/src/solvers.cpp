#include "ctree/solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>

#include "ctree/semantics.hpp"

namespace ctree {

std::vector<Expression> enumerate_pool(const StructureInstance& u, std::span<const Var> inputs, const Measure& psi,
                                       std::optional<std::uint64_t> max_weight) {
  std::vector<Expression> pool;
  for (const auto& p : u.predicates()) {
    auto e = Expression::predicate(p.name, {});
    if (max_weight && attribute_weight(psi, e) > *max_weight) continue;
    std::vector<std::size_t> pick(p.arity, 0);
    for (;;) {
      e.args.clear();
      for (auto k : pick) e.args.push_back(inputs[k]);
      pool.push_back(e);
      std::size_t k = p.arity;
      while (k > 0 && ++pick[k - 1] == inputs.size()) pick[--k] = 0;
      if (k == 0) break;
    }
  }
  return pool;
}

std::uint64_t attribute_weight(const Measure& psi, const Expression& e) {
  if (psi.kind() == Measure::Kind::WeightedDepth) return psi.weight(e.symbol);
  if (psi.is_zero()) return 0;
  throw Error(ErrorKind::InvalidMeasure, "exact solvers need a weighted depth or the zero measure");
}

namespace {

// Column of a predicate expression over carrier^|Y| with the x_w rule applied.
std::vector<std::uint8_t> column(const StructureInstance& u, std::span<const Var> inputs, const Expression& e) {
  TupleSpace space(u.size(), inputs.size());
  const auto& p = u.predicate(e.symbol);
  if (e.args.size() != p.arity) throw Error(ErrorKind::ArityMismatch, e.to_string());
  std::vector<std::size_t> pos;
  for (auto v : e.args) {
    auto it = std::find(inputs.begin(), inputs.end(), v);
    pos.push_back(it == inputs.end() ? 0 : static_cast<std::size_t>(it - inputs.begin()));
  }
  std::vector<std::uint8_t> col(space.count());
  std::vector<AtomIndex> tuple(inputs.size()), args(p.arity);
  for (std::uint64_t t = 0; t < space.count(); ++t) {
    space.decode(t, tuple);
    for (std::size_t k = 0; k < pos.size(); ++k) args[k] = tuple[pos[k]];
    col[t] = u.eval(p, args);
  }
  return col;
}

void require_attribute_structure(const StructureInstance& u) {
  if (u.has_functions()) throw Error(ErrorKind::NotAttributeStructure, "structure has function symbols");
}

// Per-class answer sets as bitsets over the sorted answer universe.
struct AnswerIndex {
  std::vector<Answer> universe;
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> bits;

  std::optional<Answer> common(const ClassSet& s) const {
    if (words == 1) {
      std::uint64_t acc = ~std::uint64_t{0};
      s.for_each([&](std::size_t c) { acc &= bits[c][0]; });
      if (!acc) return std::nullopt;
      return universe[static_cast<std::size_t>(std::countr_zero(acc))];
    }
    std::vector<std::uint64_t> acc(words, ~std::uint64_t{0});
    bool alive = true;
    s.for_each([&](std::size_t c) {
      if (!alive) return;
      bool any = false;
      for (std::size_t k = 0; k < words; ++k) {
        acc[k] &= bits[c][k];
        any |= acc[k] != 0;
      }
      alive = any;
    });
    if (!alive) return std::nullopt;
    for (std::size_t k = 0; k < words; ++k)
      if (acc[k]) {
        auto idx = k * 64 + static_cast<std::size_t>(std::countr_zero(acc[k]));
        if (idx < universe.size()) return universe[idx];
      }
    return std::nullopt;
  }
};

struct Prepared {
  Quotient q;
  AnswerIndex answers;
};

// Per-class answers: intersection over every tuple of the class, or the
// representative's answer when z is known to be constant on classes.
AnswerIndex class_answers(const StructureInstance& u, const Problem& z, const Quotient& q, bool constant_on_classes) {
  TupleSpace space(u.size(), z.input_count());
  std::vector<std::vector<Answer>> per_class(q.classes.size());
  std::vector<AtomIndex> tuple(space.dimension());
  if (constant_on_classes) {
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
      space.decode(q.classes[c].representative, tuple);
      per_class[c] = problem_value(u, z, tuple);
    }
  } else {
    std::vector<bool> started(q.classes.size(), false);
    for (std::uint64_t t = 0; t < space.count(); ++t) {
      space.decode(t, tuple);
      const auto& ans = problem_value(u, z, tuple);
      auto c = q.class_of[t];
      if (!started[c]) {
        per_class[c] = ans;
        started[c] = true;
      } else {
        std::vector<Answer> keep;
        std::set_intersection(per_class[c].begin(), per_class[c].end(), ans.begin(), ans.end(),
                              std::back_inserter(keep));
        per_class[c] = std::move(keep);
      }
    }
  }
  for (std::size_t c = 0; c < per_class.size(); ++c)
    if (per_class[c].empty())
      throw Error(ErrorKind::InsufficientPool,
                  "pool cannot separate inputs with disjoint answers (class " + std::to_string(c) + ")");
  AnswerIndex a;
  for (const auto& s : per_class) a.universe.insert(a.universe.end(), s.begin(), s.end());
  std::sort(a.universe.begin(), a.universe.end());
  a.universe.erase(std::unique(a.universe.begin(), a.universe.end()), a.universe.end());
  a.words = (a.universe.size() + 63) / 64;
  a.bits.assign(per_class.size(), std::vector<std::uint64_t>(a.words, 0));
  for (std::size_t c = 0; c < per_class.size(); ++c)
    for (auto v : per_class[c]) {
      auto idx = static_cast<std::size_t>(std::lower_bound(a.universe.begin(), a.universe.end(), v) - a.universe.begin());
      a.bits[c][idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
  return a;
}

Prepared prepare(const StructureInstance& u, const Problem& z, std::span<const Expression> pool, const Measure& psi) {
  require_attribute_structure(u);
  validate_problem(u, z);
  Prepared p{quotient_classes(u, z.inputs(), pool, psi), {}};
  p.answers = class_answers(u, z, p.q, false);
  return p;
}

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

// Min-max split search with a cost bound. solve(S, b) returns the exact cost
// when it is <= b and otherwise a lower bound exceeding b. The chosen split
// is the lowest attribute index attaining the minimum.
class DeterministicSolver {
 public:
  explicit DeterministicSolver(const Prepared& p) : p_(p) {}

  std::uint64_t cost(const ClassSet& s) {
    std::uint64_t bound = 0;
    for (;;) {
      auto r = solve(s, bound);
      if (r <= bound) return r;
      bound = r;
    }
  }

  void build(TreeBuilder& b, NodeId parent, std::optional<std::uint8_t> label, const ClassSet& s) {
    cost(s);
    const auto& e = memo_.at(s);
    if (e.attr < 0) {
      b.add(parent, TreeNode::terminal(*p_.answers.common(s)), label);
      return;
    }
    const auto& q = p_.q;
    auto g = static_cast<std::size_t>(e.attr);
    auto v = b.add(parent, TreeNode::working(q.attributes[g]), label);
    build(b, v, std::uint8_t{0}, s - q.ones[g]);
    build(b, v, std::uint8_t{1}, s & q.ones[g]);
  }

 private:
  struct Entry {
    bool exact = false;
    std::uint64_t value = 0;  // exact cost or lower bound
    int attr = -1;
  };

  std::uint64_t known_lower(const ClassSet& s) const {
    auto it = memo_.find(s);
    return it == memo_.end() ? 0 : it->second.value;
  }

  std::uint64_t solve(const ClassSet& s, std::uint64_t bound) {
    if (auto it = memo_.find(s); it != memo_.end()) {
      if (it->second.exact || it->second.value > bound) return it->second.value;
    }
    if (p_.answers.common(s)) {
      memo_[s] = {true, 0, -1};
      return 0;
    }
    const auto& q = p_.q;
    std::uint64_t best = kInf, lower = kInf;
    int best_attr = -1;
    bool any = false;
    for (std::size_t g = 0; g < q.attributes.size(); ++g) {
      auto s1 = s & q.ones[g];
      auto s0 = s - q.ones[g];
      if (s1.empty() || s0.empty()) continue;
      any = true;
      auto w = q.weights[g];
      auto limit = std::min(bound, best == kInf ? kInf : best - 1);
      if (w > limit || best == 0) {
        lower = std::min(lower, w + std::max(known_lower(s0), known_lower(s1)));
        continue;
      }
      auto r0 = solve(s0, limit - w);
      if (r0 > limit - w) {
        lower = std::min(lower, w + r0);
        continue;
      }
      auto r1 = solve(s1, limit - w);
      if (r1 > limit - w) {
        lower = std::min(lower, w + r1);
        continue;
      }
      best = w + std::max(r0, r1);
      best_attr = static_cast<int>(g);
    }
    if (!any) throw Error(ErrorKind::InsufficientPool, "no attribute separates a class set");
    auto& e = memo_[s];
    if (best <= bound) {
      e = {true, best, best_attr};
      return best;
    }
    e.value = std::max(e.value, lower);
    return e.value;
  }

  const Prepared& p_;
  std::unordered_map<ClassSet, Entry, ClassSetHash> memo_;
};

// Cheapest covering cube per class. A cube is a consistent literal set whose
// region (classes satisfying it) shares an answer. Cost bounds are deepened
// round by round; cubes are extended in (weight, id) order and never past a
// region that already shares an answer.
class CubeSearch {
 public:
  explicit CubeSearch(const Prepared& p) : p_(p), best_(p.q.classes.size()) {
    const auto& q = p_.q;
    for (std::size_t g = 0; g < q.attributes.size(); ++g) order_.push_back(g);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(q.weights[a], a) < std::pair(q.weights[b], b);
    });
  }

  void run() {
    std::uint64_t bound = 0;
    for (;;) {
      overshoot_ = kInf;
      std::vector<std::size_t> lits;
      extend(0, p_.q.all, 0, lits, bound);
      bool done = std::all_of(best_.begin(), best_.end(), [](const Cube& c) { return c.cost != kInf; });
      if (done) return;
      if (overshoot_ == kInf) throw Error(ErrorKind::InsufficientPool, "some class has no certificate");
      bound = overshoot_;
    }
  }

  struct Cube {
    std::uint64_t cost = kInf;
    std::vector<std::size_t> lits;
    ClassSet region;
  };

  const std::vector<Cube>& best() const { return best_; }

 private:
  void extend(std::size_t from, const ClassSet& region, std::uint64_t cost, std::vector<std::size_t>& lits,
              std::uint64_t bound) {
    const auto& q = p_.q;
    for (std::size_t k = from; k < order_.size(); ++k) {
      auto g = order_[k];
      auto w = q.weights[g];
      if (cost + w > bound) {
        overshoot_ = std::min(overshoot_, cost + w);
        break;
      }
      for (int v = 0; v < 2; ++v) {
        auto next = v ? (region & q.ones[g]) : (region - q.ones[g]);
        if (next.empty() || next == region) continue;
        lits.push_back(g);
        if (p_.answers.common(next)) {
          next.for_each([&](std::size_t c) {
            if (cost + w < best_[c].cost) best_[c] = {cost + w, lits, next};
          });
        } else {
          extend(k + 1, next, cost + w, lits, bound);
        }
        lits.pop_back();
      }
    }
  }

  const Prepared& p_;
  std::vector<std::size_t> order_;
  std::vector<Cube> best_;
  std::uint64_t overshoot_ = kInf;
};

}  // namespace

Quotient quotient_classes(const StructureInstance& u, std::span<const Var> inputs, std::span<const Expression> pool,
                          const Measure& psi) {
  require_attribute_structure(u);
  if (pool.empty()) throw Error(ErrorKind::EmptyPool, "attribute pool is empty");
  Quotient q;
  q.inputs.assign(inputs.begin(), inputs.end());
  TupleSpace space(u.size(), inputs.size());
  std::vector<std::vector<std::uint8_t>> cols;
  for (const auto& e : pool) {
    if (!e.is_predicate()) throw Error(ErrorKind::NotAttributeStructure, "pool holds a functional expression");
    auto col = column(u, inputs, e);
    auto w = attribute_weight(psi, e);
    auto it = std::find(cols.begin(), cols.end(), col);
    if (it != cols.end()) {
      auto k = static_cast<std::size_t>(it - cols.begin());
      if (w < q.weights[k]) {
        q.attributes[k] = e;
        q.weights[k] = w;
      }
      continue;
    }
    cols.push_back(std::move(col));
    q.attributes.push_back(e);
    q.weights.push_back(w);
  }
  std::map<std::vector<std::uint8_t>, std::uint32_t> by_sig;
  q.class_of.resize(space.count());
  for (std::uint64_t t = 0; t < space.count(); ++t) {
    std::vector<std::uint8_t> sig(cols.size());
    for (std::size_t g = 0; g < cols.size(); ++g) sig[g] = cols[g][t];
    auto [it, fresh] = by_sig.emplace(sig, static_cast<std::uint32_t>(q.classes.size()));
    if (fresh) {
      if (q.classes.size() == kMaxClasses)
        throw Error(ErrorKind::TooManyClasses, "more than " + std::to_string(kMaxClasses) + " quotient classes");
      q.classes.push_back({std::move(sig), t, 0});
    }
    q.class_of[t] = it->second;
    ++q.classes[it->second].size;
  }
  q.ones.assign(cols.size(), ClassSet{});
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    q.all.set(c);
    for (std::size_t g = 0; g < cols.size(); ++g)
      if (q.classes[c].signature[g]) q.ones[g].set(c);
  }
  return q;
}

namespace {

SolverResult solve_d(const Prepared& p) {
  DeterministicSolver solver(p);
  auto value = solver.cost(p.q.all);
  TreeBuilder b(p.q.inputs);
  solver.build(b, 0, std::nullopt, p.q.all);
  return {value, b.build()};
}

SolverResult solve_a(const Prepared& p) {
  const auto& q = p.q;
  TreeBuilder b(q.inputs);
  if (auto common = p.answers.common(q.all)) {
    b.add(0, TreeNode::terminal(*common));
    return {0, b.build()};
  }
  CubeSearch search(p);
  search.run();
  std::uint64_t value = 0;
  // A cube is its literal list: attributes together with their values.
  std::vector<std::vector<std::pair<std::size_t, std::uint8_t>>> seen;
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    const auto& cube = search.best()[c];
    value = std::max(value, cube.cost);
    std::vector<std::pair<std::size_t, std::uint8_t>> key;
    for (auto g : cube.lits) key.emplace_back(g, q.classes[c].signature[g]);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    NodeId at = 0;
    std::optional<std::uint8_t> label;
    for (auto g : cube.lits) {
      at = b.add(at, TreeNode::working(q.attributes[g]), label);
      label = q.classes[c].signature[g];
    }
    b.add(at, TreeNode::terminal(*p.answers.common(cube.region)), label);
  }
  return {value, b.build()};
}

}  // namespace

SolverResult psi_d_exact(const StructureInstance& u, const Problem& z, std::span<const Expression> pool,
                         const Measure& psi) {
  return solve_d(prepare(u, z, pool, psi));
}

SolverResult psi_a_exact(const StructureInstance& u, const Problem& z, std::span<const Expression> pool,
                         const Measure& psi) {
  return solve_a(prepare(u, z, pool, psi));
}

PoolContext::PoolContext(const StructureInstance& u, std::vector<Var> inputs, std::span<const Expression> pool,
                         const Measure& psi)
    : u_(&u), quotient_(quotient_classes(u, inputs, pool, psi)), members_(pool.begin(), pool.end()) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PoolContext::covers(const Problem& z) const {
  if (z.inputs() != quotient_.inputs) return false;
  return std::all_of(z.seq().begin(), z.seq().end(), [&](const Expression& e) {
    return std::binary_search(members_.begin(), members_.end(), e);
  });
}

SolverResult PoolContext::psi_d(const Problem& z) const {
  validate_problem(*u_, z);
  return solve_d(Prepared{quotient_, class_answers(*u_, z, quotient_, covers(z))});
}

SolverResult PoolContext::psi_a(const Problem& z) const {
  validate_problem(*u_, z);
  return solve_a(Prepared{quotient_, class_answers(*u_, z, quotient_, covers(z))});
}

namespace {

// Search-size guard for the oracle.
constexpr std::uint64_t kOracleStepLimit = 400'000'000;

class Oracle {
 public:
  Oracle(const StructureInstance& u, const Problem& z, std::span<const Expression> pool, const Measure& psi) {
    require_attribute_structure(u);
    validate_problem(u, z);
    TupleSpace space(u.size(), z.input_count());
    std::vector<AtomIndex> tuple(space.dimension());
    answers_.resize(space.count());
    for (std::uint64_t t = 0; t < space.count(); ++t) {
      space.decode(t, tuple);
      answers_[t] = problem_value(u, z, tuple);
      all_.push_back(t);
    }
    for (const auto& e : pool) {
      std::vector<std::uint8_t> col(space.count());
      for (std::uint64_t t = 0; t < space.count(); ++t) {
        space.decode(t, tuple);
        col[t] = evaluate_alphas(u, z.inputs(), std::span<const Expression>(&e, 1), tuple)[0];
      }
      cols_.push_back(std::move(col));
      weights_.push_back(attribute_weight(psi, e));
    }
  }

  std::optional<std::uint64_t> deterministic(std::uint64_t budget) {
    for (std::uint64_t b = 0; b <= budget; ++b) {
      std::vector<bool> used(cols_.size(), false);
      if (det_search(all_, b, used)) return b;
    }
    return std::nullopt;
  }

  std::optional<std::uint64_t> nondeterministic(std::uint64_t budget) {
    for (std::uint64_t b = 0; b <= budget; ++b) {
      std::vector<bool> covered(all_.size(), false);
      enumerate_literals(0, b, all_, covered);
      if (std::all_of(covered.begin(), covered.end(), [](bool x) { return x; })) return b;
    }
    return std::nullopt;
  }

 private:
  void tick() {
    if (++steps_ > kOracleStepLimit)
      throw Error(ErrorKind::BudgetTooLargeForEnumeration, "tree enumeration exceeds the step limit");
  }

  bool common(const std::vector<std::uint64_t>& tuples) const {
    if (tuples.empty()) return true;
    std::vector<Answer> acc = answers_[tuples[0]];
    for (std::size_t i = 1; i < tuples.size() && !acc.empty(); ++i) {
      const auto& a = answers_[tuples[i]];
      std::vector<Answer> keep;
      std::set_intersection(acc.begin(), acc.end(), a.begin(), a.end(), std::back_inserter(keep));
      acc = std::move(keep);
    }
    return !acc.empty();
  }

  bool det_search(const std::vector<std::uint64_t>& tuples, std::uint64_t budget, std::vector<bool>& used) {
    tick();
    if (common(tuples)) return true;
    for (std::size_t g = 0; g < cols_.size(); ++g) {
      if (used[g] || weights_[g] > budget) continue;
      std::vector<std::uint64_t> side[2];
      for (auto t : tuples) side[cols_[g][t]].push_back(t);
      used[g] = true;
      bool ok = det_search(side[0], budget - weights_[g], used) && det_search(side[1], budget - weights_[g], used);
      used[g] = false;
      if (ok) return true;
    }
    return false;
  }

  // Every consistent literal set over attributes >= g of cost <= budget,
  // restricted to `area`; marks tuples of nonempty areas with a common answer.
  void enumerate_literals(std::size_t g, std::uint64_t budget, const std::vector<std::uint64_t>& area,
                          std::vector<bool>& covered) {
    tick();
    if (area.empty()) return;
    if (g == cols_.size()) {
      if (common(area))
        for (auto t : area) covered[t] = true;
      return;
    }
    enumerate_literals(g + 1, budget, area, covered);
    if (weights_[g] > budget) return;
    for (std::uint8_t v = 0; v < 2; ++v) {
      std::vector<std::uint64_t> next;
      for (auto t : area)
        if (cols_[g][t] == v) next.push_back(t);
      enumerate_literals(g + 1, budget - weights_[g], next, covered);
    }
  }

  std::vector<AnswerSet> answers_;
  std::vector<std::uint64_t> all_;
  std::vector<std::vector<std::uint8_t>> cols_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t steps_ = 0;
};

}  // namespace

std::optional<std::uint64_t> brute_force_psi(const StructureInstance& u, const Problem& z,
                                             std::span<const Expression> pool, const Measure& psi,
                                             std::uint64_t budget, SolveMode mode) {
  Oracle oracle(u, z, pool, psi);
  return mode == SolveMode::Deterministic ? oracle.deterministic(budget) : oracle.nondeterministic(budget);
}

}  // namespace ctree
