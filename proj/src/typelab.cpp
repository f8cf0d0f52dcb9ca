#include "ctree/typelab.hpp"

#include <algorithm>

#include "ctree/error.hpp"

namespace ctree {

namespace {

constexpr Letter A = Letter::Alpha;
constexpr Letter B = Letter::Beta;
constexpr Letter G = Letter::Gamma;
constexpr Letter D = Letter::Delta;
constexpr Letter E = Letter::Epsilon;

constexpr std::array<LetterTable, 7> kUpper = {{
    {{{A, A, A}, {A, A, A}, {A, A, A}}},
    {{{G, E, E}, {A, A, A}, {A, A, A}}},
    {{{G, E, E}, {B, G, E}, {A, A, A}}},
    {{{G, E, E}, {G, G, E}, {A, A, A}}},
    {{{G, E, E}, {G, G, G}, {G, G, G}}},
    {{{G, E, E}, {G, G, D}, {G, G, G}}},
    {{{G, E, E}, {G, G, E}, {G, G, G}}},
}};

constexpr std::array<LetterTable, 7> kLower = {{
    {{{E, E, E}, {E, E, E}, {E, E, E}}},
    {{{G, E, E}, {A, E, E}, {A, E, E}}},
    {{{G, D, E}, {A, G, E}, {A, A, E}}},
    {{{G, G, E}, {A, G, E}, {A, A, E}}},
    {{{G, G, G}, {A, G, G}, {A, G, G}}},
    {{{G, G, G}, {A, G, G}, {A, B, G}}},
    {{{G, G, G}, {A, G, G}, {A, A, G}}},
}};

using P = std::pair<Letter, Letter>;

// Transcribed separately from the t and l tables above.
constexpr std::array<PairTable, 7> kPairs = {{
    {{{P{E, A}, P{E, A}, P{E, A}}, {P{E, A}, P{E, A}, P{E, A}}, {P{E, A}, P{E, A}, P{E, A}}}},
    {{{P{G, G}, P{E, E}, P{E, E}}, {P{A, A}, P{E, A}, P{E, A}}, {P{A, A}, P{E, A}, P{E, A}}}},
    {{{P{G, G}, P{D, E}, P{E, E}}, {P{A, B}, P{G, G}, P{E, E}}, {P{A, A}, P{A, A}, P{E, A}}}},
    {{{P{G, G}, P{G, E}, P{E, E}}, {P{A, G}, P{G, G}, P{E, E}}, {P{A, A}, P{A, A}, P{E, A}}}},
    {{{P{G, G}, P{G, E}, P{G, E}}, {P{A, G}, P{G, G}, P{G, G}}, {P{A, G}, P{G, G}, P{G, G}}}},
    {{{P{G, G}, P{G, E}, P{G, E}}, {P{A, G}, P{G, G}, P{G, D}}, {P{A, G}, P{B, G}, P{G, G}}}},
    {{{P{G, G}, P{G, E}, P{G, E}}, {P{A, G}, P{G, G}, P{G, E}}, {P{A, G}, P{A, G}, P{G, G}}}},
}};

void check_index(int k) {
  if (k < 1 || k > 7) throw Error(ErrorKind::Parse, "table index must lie in 1..7");
}

}  // namespace

std::string letter_name(Letter x) {
  switch (x) {
    case Letter::Alpha: return "alpha";
    case Letter::Beta: return "beta";
    case Letter::Gamma: return "gamma";
    case Letter::Delta: return "delta";
    case Letter::Epsilon: return "epsilon";
  }
  return "?";
}

std::string letter_symbol(Letter x) {
  switch (x) {
    case Letter::Alpha: return "α";
    case Letter::Beta: return "β";
    case Letter::Gamma: return "γ";
    case Letter::Delta: return "δ";
    case Letter::Epsilon: return "ε";
  }
  return "?";
}

Letter parse_letter(std::string_view text) {
  for (auto x : kLetters)
    if (text == letter_name(x) || text == letter_symbol(x)) return x;
  throw Error(ErrorKind::Parse, "unknown type letter '" + std::string(text) + "'");
}

const LetterTable& upper_table(int k) {
  check_index(k);
  return kUpper[static_cast<std::size_t>(k - 1)];
}

const LetterTable& lower_table(int k) {
  check_index(k);
  return kLower[static_cast<std::size_t>(k - 1)];
}

const PairTable& pair_table(int k) {
  check_index(k);
  return kPairs[static_cast<std::size_t>(k - 1)];
}

Letter rho(Letter x) { return static_cast<Letter>(4 - static_cast<int>(x)); }

bool table_leq(const LetterTable& lhs, const LetterTable& rhs) {
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t c = 0; c < 3; ++c)
      if (lhs[b][c] > rhs[b][c]) return false;
  return true;
}

std::vector<std::pair<int, int>> hasse_diagram() {
  auto leq = [](int i, int j) { return table_leq(upper_table(i), upper_table(j)); };
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      if (i == j || !leq(i, j) || leq(j, i)) continue;
      bool covered = true;
      for (int k = 1; k <= 7 && covered; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j) && !leq(k, i) && !leq(j, k)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

const std::vector<std::vector<int>>& delta_u_families() {
  static const std::vector<std::vector<int>> families = {{2}, {2, 3}, {2, 3, 4}, {2, 3, 4, 7},
                                                         {2, 5}, {2, 5, 6}, {2, 5, 6, 7}};
  return families;
}

DeltaVerdict delta_u_membership(std::span<const int> prefix) {
  DeltaVerdict v;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] < 1 || prefix[i] > 7) {
      v.reason = "position " + std::to_string(i) + " is not a table index";
      return v;
    }
    if (prefix[i] == 1) {
      v.reason = "position " + std::to_string(i) + " is t_1";
      return v;
    }
    if (i > 0 && !table_leq(upper_table(prefix[i - 1]), upper_table(prefix[i]))) {
      v.reason = "t_" + std::to_string(prefix[i - 1]) + " is not below t_" + std::to_string(prefix[i]);
      return v;
    }
  }
  std::vector<int> runs;
  for (auto x : prefix)
    if (runs.empty() || runs.back() != x) runs.push_back(x);
  const auto& fams = delta_u_families();
  for (std::size_t f = 0; f < fams.size(); ++f) {
    std::size_t k = 0;
    bool ok = true;
    for (auto x : runs) {
      while (k < fams[f].size() && fams[f][k] != x) ++k;
      if (k == fams[f].size()) {
        ok = false;
        break;
      }
      ++k;
    }
    if (ok) v.families.push_back(f);
  }
  v.accepted = !v.families.empty();
  if (!v.accepted) v.reason = "no family has this block pattern";
  return v;
}

std::size_t active_block(const TauSequence& tau, std::uint32_t n) {
  validate_tau(tau);
  if (n == 0) throw Error(ErrorKind::InvalidProblem, "n must be positive");
  std::uint64_t level = 1;
  std::size_t r = 0;
  for (std::size_t j = 0; j < tau.blocks.size(); ++j) {
    if (level <= n) r = j;
    if (tau.blocks[j].w) level += *tau.blocks[j].w;
  }
  return r;
}

PredictedTables predicted_table(const TauSequence& tau, std::uint32_t n) {
  int v = tau.blocks[active_block(tau, n)].v;
  return {v, upper_table(v), lower_table(v), pair_table(v)};
}

std::string FnProfile::name() const {
  return std::string(upper ? "U^" : "L^") + kParams[static_cast<std::size_t>(b)] + kParams[static_cast<std::size_t>(c)];
}

bool TypeVerdict::contains(Letter x) const {
  return std::find(consistent.begin(), consistent.end(), x) != consistent.end();
}

TypeVerdict classify_profile(const FnProfile& p, const Hints& hints) {
  TypeVerdict v;
  if (p.values.empty()) throw Error(ErrorKind::Parse, "empty profile");
  std::size_t big_m = p.values.size() - 1;
  std::size_t tail_from = (big_m + 1) / 2;
  for (std::size_t m = 0; m < p.values.size(); ++m) {
    const auto& x = p.values[m];
    if (x.kind == ProfileValue::Kind::Infinity) v.saw_infinity = true;
    if (x.kind != ProfileValue::Kind::Defined) continue;
    ++v.dom;
    v.max_value = std::max(v.max_value.value_or(0), x.value);
    bool plus = x.value >= m, minus = x.value <= m;
    v.dom_plus += plus;
    v.dom_minus += minus;
    if (m >= tail_from) {
      v.tail_plus += plus;
      v.tail_minus += minus;
    }
  }
  if (v.saw_infinity) {
    if (hints.bounded == true || hints.domain_infinite == true)
      throw Error(ErrorKind::ContradictoryHints, p.name() + " reaches infinity but hints claim otherwise");
    v.consistent = {Letter::Epsilon};
    return v;
  }
  if (hints.domain_infinite == false) {
    v.consistent = {Letter::Epsilon};
    return v;
  }
  std::vector<Letter> out;
  if (hints.bounded != false) out.push_back(Letter::Alpha);
  if (hints.bounded != true) {
    bool plus = v.tail_plus > 0, minus = v.tail_minus > 0;
    if (!plus && !minus) {
      out.insert(out.end(), {Letter::Beta, Letter::Gamma, Letter::Delta});
    } else if (!plus) {
      out.push_back(Letter::Beta);
    } else if (!minus) {
      out.push_back(Letter::Delta);
    } else {
      out.push_back(Letter::Gamma);
    }
  }
  if (hints.domain_infinite != true) out.push_back(Letter::Epsilon);
  v.consistent = std::move(out);
  return v;
}

}  // namespace ctree
