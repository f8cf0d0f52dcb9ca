#pragma once

// Complexity measures on words over F u P and their extension to
// expression sequences and computation trees.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ctree/structure.hpp"
#include "ctree/tree.hpp"

namespace ctree {

using Word = std::vector<std::string>;

class Measure {
 public:
  enum class Kind : std::uint8_t { WeightedDepth, Table };
  // Value of a word missing from a table measure's support.
  enum class DefaultRule : std::uint8_t { Constant, Length, LengthSquared };

  Measure() = default;

  static Measure weighted_depth(std::map<std::string, std::uint64_t, std::less<>> weights);
  // Weight 1 on every symbol of u.
  static Measure depth(const StructureInstance& u);
  static Measure zero();
  static Measure table(std::map<Word, std::uint64_t> entries, DefaultRule rule, std::uint64_t constant,
                       std::uint64_t lambda);

  Kind kind() const { return kind_; }
  bool is_zero() const;
  const std::map<std::string, std::uint64_t, std::less<>>& weights() const { return weights_; }
  const std::map<Word, std::uint64_t>& entries() const { return entries_; }
  DefaultRule default_rule() const { return rule_; }
  std::uint64_t default_constant() const { return constant_; }
  std::uint64_t lambda_value() const { return lambda_; }

  // Weighted depth only; throws UnknownSymbol.
  std::uint64_t weight(std::string_view symbol) const;

  bool operator==(const Measure&) const = default;

 private:
  Kind kind_ = Kind::WeightedDepth;
  std::map<std::string, std::uint64_t, std::less<>> weights_;
  std::map<Word, std::uint64_t> entries_;
  DefaultRule rule_ = DefaultRule::Constant;
  std::uint64_t constant_ = 0;
  std::uint64_t lambda_ = 0;
};

std::uint64_t measure_word(const Measure& psi, std::span<const std::string> word);
std::uint64_t measure_sequence(const Measure& psi, std::span<const Expression> seq);
// Max over all complete paths, empty-area paths included.
std::uint64_t measure_tree(const Measure& psi, const ComputationTree& tree);
std::uint64_t psi_i(const Measure& psi, const Problem& z);

struct LimitedReport {
  bool passed = true;
  std::string failed_axiom;  // "subadditivity", "monotonicity", "length"
  Word a1, a2, a3;           // counterexample
  std::size_t trials = 0;
};

// Samples triples of words (length 0..max_len) over `alphabet` and tests the
// three limited-measure axioms.
LimitedReport check_limited(const Measure& psi, std::span<const std::string> alphabet, std::size_t trials,
                            std::uint64_t seed, std::size_t max_len = 4);

}  // namespace ctree
