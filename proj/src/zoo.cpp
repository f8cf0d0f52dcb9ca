#include "ctree/zoo.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace ctree {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::BadTruncation, message);
}

bool in_span(const TruncationParams& t, std::int64_t v) { return v >= t.span_lo && v <= t.span_hi; }

std::vector<Atom> base_carrier(const TruncationParams& t) {
  std::vector<Atom> out;
  for (auto v = t.span_lo; v <= t.span_hi; ++v) out.push_back(Atom::base(v));
  return out;
}

PredicateSym unary(const std::string& name, const TruncationParams& t, auto&& fn) {
  PredicateSym p{name, 1, {}};
  for (auto v = t.span_lo; v <= t.span_hi; ++v) p.table.push_back(fn(v) ? 1 : 0);
  return p;
}

}  // namespace

TruncationParams default_truncation(int r, std::int64_t k) {
  switch (r) {
    case 2: return {0, 0, 0, 0};
    case 3: return {0, k, 0, k + 1};
    case 4: return {0, k, 0, std::min(k, kMaxPi4Span - 1)};
    case 5: return {0, k, 0, k + 1};
    case 6: return {1, k, 0, 2 * k + 1};
    case 7: return {0, k, -k, k + 1};
    default: throw Error(ErrorKind::BadTruncation, "no witness structure pi_" + std::to_string(r));
  }
}

std::string pi_predicate_name(int r, std::int64_t index, bool p_variant) {
  switch (r) {
    case 2: return "q1";
    case 3: return "l" + std::to_string(index);
    case 5: return "q" + std::to_string(index);
    case 6: return (p_variant ? "p" : "q") + std::to_string(index);
    case 7: return index < 0 ? "qm" + std::to_string(-index) : "l" + std::to_string(index);
    default: throw Error(ErrorKind::BadTruncation, "no indexed predicates in pi_" + std::to_string(r));
  }
}

std::string lifted_name(const std::string& name, std::uint32_t n) { return name + "^" + std::to_string(n); }

std::vector<std::uint64_t> ci_schedule(std::size_t t) {
  std::vector<std::uint64_t> c{1};
  std::uint64_t sum = 1;
  for (std::size_t i = 1; i <= t; ++i) {
    c.push_back(i * sum + 2);
    sum += c.back();
  }
  return c;
}

SmPair build_pi(int r, const TruncationParams& t) {
  std::vector<PredicateSym> preds;
  std::map<std::string, std::uint64_t, std::less<>> weights;
  auto add = [&](PredicateSym p, std::uint64_t w) {
    weights[p.name] = w;
    preds.push_back(std::move(p));
  };
  if (r == 2) {
    add(PredicateSym{"q1", 1, {0}}, 1);
    return {StructureInstance({Atom::base(0)}, {}, std::move(preds)), Measure::weighted_depth(std::move(weights))};
  }
  require(t.span_lo <= t.span_hi, "empty carrier span");
  require(t.min_index <= t.max_index, "empty index range");
  if (r != 7) require(t.span_lo >= 0, "pi_" + std::to_string(r) + " lives on nonnegative integers");
  switch (r) {
    case 3:
      for (auto i = t.min_index; i <= t.max_index; ++i) {
        require(i >= 0 && in_span(t, i) && in_span(t, i + 1), "span misses a threshold of l" + std::to_string(i));
        add(unary(pi_predicate_name(3, i), t, [i](std::int64_t j) { return j > i; }), 1);
      }
      break;
    case 4: {
      auto width = t.span_hi - t.span_lo + 1;
      require(width <= kMaxPi4Span, "pi_4 span wider than " + std::to_string(kMaxPi4Span));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
        std::string bits;
        for (std::int64_t k = 0; k < width; ++k) bits += ((mask >> k) & 1U) ? '1' : '0';
        add(unary("f" + bits, t, [&](std::int64_t j) { return (mask >> (j - t.span_lo)) & 1U; }), 1);
      }
      break;
    }
    case 5: {
      require(t.min_index >= 0, "negative index");
      auto c = ci_schedule(static_cast<std::size_t>(t.max_index));
      for (auto i = t.min_index; i <= t.max_index; ++i) {
        require(in_span(t, i), "span misses the point of q" + std::to_string(i));
        add(unary(pi_predicate_name(5, i), t, [i](std::int64_t j) { return j == i; }), c[static_cast<std::size_t>(i)]);
      }
      break;
    }
    case 6:
      for (auto i = std::max<std::int64_t>(1, t.min_index); i <= t.max_index; ++i) {
        require(in_span(t, 2 * i) && in_span(t, 2 * i + 1), "span misses the points of p" + std::to_string(2 * i));
        auto w = static_cast<std::uint64_t>(i);
        add(unary(pi_predicate_name(6, 2 * i), t, [i](std::int64_t j) { return j == 2 * i; }), w);
        add(unary(pi_predicate_name(6, 2 * i + 1), t, [i](std::int64_t j) { return j == 2 * i + 1; }), w);
        add(unary(pi_predicate_name(6, 2 * i, true), t, [i](std::int64_t j) { return j == 2 * i || j == 2 * i + 1; }), w);
      }
      break;
    case 7:
      for (auto i = std::max<std::int64_t>(0, t.min_index); i <= t.max_index; ++i) {
        require(in_span(t, i) && in_span(t, i + 1), "span misses a threshold of l" + std::to_string(i));
        add(unary(pi_predicate_name(7, i), t, [i](std::int64_t j) { return j > i; }), 1);
      }
      for (auto k = std::max<std::int64_t>(1, t.min_index); k <= t.max_index; ++k) {
        require(in_span(t, -k), "span misses the point of qm" + std::to_string(k));
        add(unary(pi_predicate_name(7, -k), t, [k](std::int64_t j) { return j == -k; }), static_cast<std::uint64_t>(k));
      }
      break;
    default:
      throw Error(ErrorKind::BadTruncation, "no witness structure pi_" + std::to_string(r));
  }
  require(!preds.empty(), "truncation materializes no predicate");
  return {StructureInstance(base_carrier(t), {}, std::move(preds)), Measure::weighted_depth(std::move(weights))};
}

SmPair lift_structure(const SmPair& pi, std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidStructure, "lifting level must be positive");
  const auto& base = pi.u.carrier();
  std::vector<Atom> carrier;
  for (const auto& a : base) carrier.push_back(Atom::lifted(a.value, n));
  for (std::uint32_t i = 0; i < n; ++i) carrier.push_back(Atom::marker(i, n));
  std::size_t size = carrier.size();
  // Marker k_i sits at index base.size() + i.
  std::size_t prefix = 0;
  for (std::uint32_t i = 1; i < n; ++i) prefix = prefix * size + base.size() + i;
  std::vector<PredicateSym> preds;
  std::map<std::string, std::uint64_t, std::less<>> weights;
  for (const auto& p : pi.u.predicates()) {
    PredicateSym q{lifted_name(p.name, n), n, std::vector<std::uint8_t>(table_size(size, n), 0)};
    for (std::size_t a = 0; a < base.size(); ++a) q.table[prefix * size + a] = p.table[a];
    weights[q.name] = pi.psi.weight(p.name);
    preds.push_back(std::move(q));
  }
  return {StructureInstance(std::move(carrier), {}, std::move(preds)), Measure::weighted_depth(std::move(weights))};
}

SmPair direct_sum(const std::vector<std::pair<std::uint32_t, SmPair>>& levels) {
  if (levels.empty()) throw Error(ErrorKind::InvalidStructure, "direct sum of nothing");
  for (std::size_t j = 1; j < levels.size(); ++j)
    if (levels[j - 1].first >= levels[j].first)
      throw Error(ErrorKind::DuplicateLevels, "levels must be strictly increasing");
  if (levels.size() == 1) return levels.front().second;
  std::vector<Atom> carrier;
  for (const auto& [n, pair] : levels) carrier.insert(carrier.end(), pair.u.carrier().begin(), pair.u.carrier().end());
  std::sort(carrier.begin(), carrier.end());
  if (std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end())
    throw Error(ErrorKind::DuplicateLevels, "blocks share carrier atoms");
  std::map<Atom, AtomIndex> where;
  for (std::size_t i = 0; i < carrier.size(); ++i) where[carrier[i]] = static_cast<AtomIndex>(i);
  std::vector<PredicateSym> preds;
  std::map<std::string, std::uint64_t, std::less<>> weights;
  for (const auto& [n, pair] : levels) {
    const auto& block = pair.u;
    TupleSpace inner(block.size(), n);
    TupleSpace outer(carrier.size(), n);
    std::vector<AtomIndex> mapped(n);
    for (const auto& p : block.predicates()) {
      PredicateSym q{p.name, p.arity, std::vector<std::uint8_t>(table_size(carrier.size(), p.arity), 0)};
      for (std::uint64_t t = 0; t < p.table.size(); ++t) {
        if (!p.table[t]) continue;
        auto tuple = inner.decode(t);
        for (std::size_t k = 0; k < tuple.size(); ++k) mapped[k] = where.at(block.carrier()[tuple[k]]);
        q.table[outer.encode(mapped)] = 1;
      }
      weights[q.name] = pair.psi.weight(p.name);
      preds.push_back(std::move(q));
    }
  }
  return {StructureInstance(std::move(carrier), {}, std::move(preds)), Measure::weighted_depth(std::move(weights))};
}

std::string TauSequence::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(blocks[i].v) + ":" + (blocks[i].w ? std::to_string(*blocks[i].w) : "inf");
  }
  return s;
}

TauSequence parse_tau(std::string_view text) {
  TauSequence tau;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::InvalidTau, "block '" + std::string(item) + "' lacks ':'");
    TauBlock b;
    auto vpart = item.substr(0, colon);
    auto [p1, e1] = std::from_chars(vpart.data(), vpart.data() + vpart.size(), b.v);
    if (e1 != std::errc() || p1 != vpart.data() + vpart.size())
      throw Error(ErrorKind::InvalidTau, "bad table index in '" + std::string(item) + "'");
    auto wpart = item.substr(colon + 1);
    if (wpart == "inf") {
      b.w = std::nullopt;
    } else {
      std::uint64_t w = 0;
      auto [p2, e2] = std::from_chars(wpart.data(), wpart.data() + wpart.size(), w);
      if (e2 != std::errc() || p2 != wpart.data() + wpart.size())
        throw Error(ErrorKind::InvalidTau, "bad repetition count in '" + std::string(item) + "'");
      b.w = w;
    }
    tau.blocks.push_back(b);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  validate_tau(tau);
  return tau;
}

void validate_tau(const TauSequence& tau) {
  if (tau.blocks.empty()) throw Error(ErrorKind::InvalidTau, "empty sequence");
  for (std::size_t i = 0; i < tau.blocks.size(); ++i) {
    const auto& b = tau.blocks[i];
    if (b.v < 2 || b.v > 7) throw Error(ErrorKind::InvalidTau, "table index must lie in 2..7");
    bool last = i + 1 == tau.blocks.size();
    if (last && b.w) throw Error(ErrorKind::InvalidTau, "last block must repeat forever");
    if (!last && (!b.w || *b.w == 0)) throw Error(ErrorKind::InvalidTau, "inner blocks need a positive count");
  }
  static const std::vector<int> chains[2] = {{2, 3, 4, 7}, {2, 5, 6, 7}};
  for (const auto& chain : chains) {
    bool ok = true;
    std::size_t k2 = 0;
    for (const auto& b : tau.blocks) {
      while (k2 < chain.size() && chain[k2] != b.v) ++k2;
      if (k2 == chain.size()) {
        ok = false;
        break;
      }
      ++k2;
    }
    if (ok) return;
  }
  throw Error(ErrorKind::InvalidTau, "block pattern " + tau.to_string() + " is not a monotone family");
}

std::size_t TauPair::active_block(std::uint32_t n) const {
  if (n == 0) throw Error(ErrorKind::InvalidProblem, "n must be positive");
  std::size_t r = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j)
    if (blocks[j].level <= n) r = j;
  return r;
}

TauPair build_tau_pair(const TauSequence& tau, std::int64_t max_index) {
  validate_tau(tau);
  TauPair out{{StructureInstance({Atom::base(0)}, {}, {PredicateSym{"q1", 1, {0}}}), Measure()}, {}};
  std::vector<std::pair<std::uint32_t, SmPair>> parts;
  std::uint64_t level = 1;
  for (const auto& b : tau.blocks) {
    auto trunc = default_truncation(b.v, max_index);
    out.blocks.push_back({b.v, static_cast<std::uint32_t>(level), trunc});
    parts.emplace_back(static_cast<std::uint32_t>(level), lift_structure(build_pi(b.v, trunc), static_cast<std::uint32_t>(level)));
    if (b.w) level += *b.w;
  }
  out.pair = direct_sum(parts);
  return out;
}

WitnessKind parse_witness_kind(std::string_view text) {
  if (text == "z5") return WitnessKind::Z5;
  if (text == "z6") return WitnessKind::Z6;
  if (text == "eta7") return WitnessKind::Eta7;
  if (text == "zt7") return WitnessKind::Zt7;
  if (text == "zbin3") return WitnessKind::Zbin3;
  throw Error(ErrorKind::Parse, "unknown witness kind '" + std::string(text) + "'");
}

std::string witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Z5: return "z5";
    case WitnessKind::Z6: return "z6";
    case WitnessKind::Eta7: return "eta7";
    case WitnessKind::Zt7: return "zt7";
    case WitnessKind::Zbin3: return "zbin3";
  }
  return "?";
}

int witness_host(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Z5: return 5;
    case WitnessKind::Z6: return 6;
    case WitnessKind::Eta7:
    case WitnessKind::Zt7: return 7;
    case WitnessKind::Zbin3: return 3;
  }
  return 0;
}

Problem witness_problem(WitnessKind kind, std::int64_t param, std::uint32_t n, std::optional<std::uint32_t> level) {
  if (n == 0) throw Error(ErrorKind::InvalidProblem, "n must be positive");
  if (level && (*level == 0 || *level > n)) throw Error(ErrorKind::InvalidProblem, "level must lie in 1..n");
  std::vector<Var> inputs;
  for (Var v = 1; v <= n; ++v) inputs.push_back(v);
  std::vector<Var> args;
  for (Var v = 1; v <= (level ? *level : 1); ++v) args.push_back(v);
  auto name = [&](std::string base) { return level ? lifted_name(base, *level) : base; };
  auto expr = [&](std::string base) { return Expression::predicate(name(std::move(base)), args); };
  std::vector<Expression> seq;
  auto two_valued = AnswerTable(1, {{0}, {1}});
  switch (kind) {
    case WitnessKind::Z5:
      if (param < 0) throw Error(ErrorKind::InvalidProblem, "z5 index must be nonnegative");
      seq.push_back(expr(pi_predicate_name(5, param)));
      return Problem(inputs, two_valued, seq);
    case WitnessKind::Z6: {
      if (param < 1) throw Error(ErrorKind::InvalidProblem, "z6 index must be positive");
      seq.push_back(expr(pi_predicate_name(6, 2 * param)));
      seq.push_back(expr(pi_predicate_name(6, 2 * param + 1)));
      seq.push_back(expr(pi_predicate_name(6, 2 * param, true)));
      std::vector<AnswerSet> nu(8, AnswerSet{0});
      nu[0b101] = {1};  // (1,0,1)
      nu[0b110] = {2};  // (0,1,1)
      return Problem(inputs, AnswerTable(3, nu), seq);
    }
    case WitnessKind::Eta7:
      if (param < 1) throw Error(ErrorKind::InvalidProblem, "eta7 index must be positive");
      seq.push_back(expr(pi_predicate_name(7, -param)));
      return Problem(inputs, two_valued, seq);
    case WitnessKind::Zt7:
    case WitnessKind::Zbin3: {
      if (param < 1) throw Error(ErrorKind::InvalidProblem, "threshold count must be positive");
      int host = witness_host(kind);
      for (std::int64_t i = 1; i <= param; ++i) seq.push_back(expr(pi_predicate_name(host, i)));
      return Problem(inputs, AnswerTable::distinct_singletons(static_cast<std::size_t>(param)), seq);
    }
  }
  throw Error(ErrorKind::InvalidProblem, "unknown witness kind");
}

void require_predicates(const StructureInstance& u, const Problem& z) {
  for (const auto& e : z.seq())
    if (!u.find_predicate(e.symbol) && !u.find_function(e.symbol))
      throw Error(ErrorKind::MissingPredicate, "host lacks '" + e.symbol + "'");
  validate_expressions(u, z.seq());
}

}  // namespace ctree
