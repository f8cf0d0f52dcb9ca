#include "ctree/measure.hpp"

#include <algorithm>

#include "ctree/rng.hpp"

namespace ctree {

Measure Measure::weighted_depth(std::map<std::string, std::uint64_t, std::less<>> weights) {
  for (const auto& [name, w] : weights)
    if (w == 0) throw Error(ErrorKind::InvalidMeasure, "weight of '" + name + "' must be positive");
  Measure m;
  m.kind_ = Kind::WeightedDepth;
  m.weights_ = std::move(weights);
  return m;
}

Measure Measure::depth(const StructureInstance& u) {
  std::map<std::string, std::uint64_t, std::less<>> w;
  for (const auto& f : u.functions()) w[f.name] = 1;
  for (const auto& p : u.predicates()) w[p.name] = 1;
  return weighted_depth(std::move(w));
}

Measure Measure::zero() { return table({}, DefaultRule::Constant, 0, 0); }

Measure Measure::table(std::map<Word, std::uint64_t> entries, DefaultRule rule, std::uint64_t constant,
                       std::uint64_t lambda) {
  Measure m;
  m.kind_ = Kind::Table;
  auto it = entries.find(Word{});
  if (it != entries.end()) {
    if (it->second != lambda) throw Error(ErrorKind::InvalidMeasure, "empty-word entry disagrees with lambda value");
    entries.erase(it);
  }
  m.entries_ = std::move(entries);
  m.rule_ = rule;
  m.constant_ = constant;
  m.lambda_ = lambda;
  return m;
}

bool Measure::is_zero() const {
  if (kind_ != Kind::Table || rule_ != DefaultRule::Constant || constant_ != 0 || lambda_ != 0) return false;
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second == 0; });
}

std::uint64_t Measure::weight(std::string_view symbol) const {
  if (kind_ != Kind::WeightedDepth) throw Error(ErrorKind::InvalidMeasure, "weights exist only for weighted depths");
  auto it = weights_.find(symbol);
  if (it == weights_.end()) throw Error(ErrorKind::UnknownSymbol, "no weight for '" + std::string(symbol) + "'");
  return it->second;
}

std::uint64_t measure_word(const Measure& psi, std::span<const std::string> word) {
  if (psi.kind() == Measure::Kind::WeightedDepth) {
    std::uint64_t total = 0;
    for (const auto& s : word) total += psi.weight(s);
    return total;
  }
  if (word.empty()) return psi.lambda_value();
  auto it = psi.entries().find(Word(word.begin(), word.end()));
  if (it != psi.entries().end()) return it->second;
  switch (psi.default_rule()) {
    case Measure::DefaultRule::Constant: return psi.default_constant();
    case Measure::DefaultRule::Length: return word.size();
    case Measure::DefaultRule::LengthSquared: return word.size() * word.size();
  }
  return 0;
}

std::uint64_t measure_sequence(const Measure& psi, std::span<const Expression> seq) {
  Word word;
  word.reserve(seq.size());
  for (const auto& e : seq) word.push_back(e.symbol);
  return measure_word(psi, word);
}

std::uint64_t measure_tree(const Measure& psi, const ComputationTree& tree) {
  std::uint64_t best = 0;
  for (const auto& path : complete_paths(tree)) best = std::max(best, measure_sequence(psi, path.seq));
  return best;
}

std::uint64_t psi_i(const Measure& psi, const Problem& z) { return measure_sequence(psi, z.seq()); }

LimitedReport check_limited(const Measure& psi, std::span<const std::string> alphabet, std::size_t trials,
                            std::uint64_t seed, std::size_t max_len) {
  LimitedReport report;
  if (alphabet.empty()) return report;
  Rng rng(seed);
  auto sample = [&] {
    Word w(rng.below(max_len + 1));
    for (auto& s : w) s = alphabet[rng.below(alphabet.size())];
    return w;
  };
  auto cat = [](const Word& x, const Word& y) {
    Word out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    ++report.trials;
    Word a1 = sample(), a2 = sample(), a3 = sample();
    auto fail = [&](const char* axiom) {
      report.passed = false;
      report.failed_axiom = axiom;
      report.a1 = a1;
      report.a2 = a2;
      report.a3 = a3;
    };
    if (measure_word(psi, cat(a1, a2)) > measure_word(psi, a1) + measure_word(psi, a2)) {
      fail("subadditivity");
      break;
    }
    if (measure_word(psi, cat(cat(a1, a2), a3)) < measure_word(psi, cat(a1, a3))) {
      fail("monotonicity");
      break;
    }
    if (measure_word(psi, a1) < a1.size()) {
      fail("length");
      break;
    }
  }
  return report;
}

}  // namespace ctree
