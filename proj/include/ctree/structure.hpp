#pragma once

// Finite presentations of structures U = (A, F, P), expressions over them,
// answer tables and problems.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctree/error.hpp"

namespace ctree {

using Var = std::uint32_t;
using AtomIndex = std::uint32_t;
using Answer = std::uint64_t;
// Sorted, duplicate-free, nonempty.
using AnswerSet = std::vector<Answer>;

// Carrier element. Base atoms stand for plain values, Lifted atoms for the
// pairs (a, n) of a lifted structure and Marker atoms for the k_i^(n).
// Ordering is kind first (Base < Lifted < Marker), then value, then level.
struct Atom {
  enum class Kind : std::uint8_t { Base, Lifted, Marker };

  Kind kind = Kind::Base;
  std::int64_t value = 0;  // marker index for Marker atoms
  std::uint32_t level = 0;

  static Atom base(std::int64_t v) { return {Kind::Base, v, 0}; }
  static Atom lifted(std::int64_t v, std::uint32_t level) { return {Kind::Lifted, v, level}; }
  static Atom marker(std::int64_t index, std::uint32_t level) { return {Kind::Marker, index, level}; }

  auto operator<=>(const Atom&) const = default;

  std::string to_string() const;
};

// Parses the textual forms produced by Atom::to_string: "3", "(3,2)", "k1^2".
Atom parse_atom(std::string_view text);

struct PredicateSym {
  std::string name;
  std::size_t arity = 1;
  // Dense over carrier^arity, first argument most significant.
  std::vector<std::uint8_t> table;
};

struct FunctionSym {
  std::string name;
  std::size_t arity = 0;
  std::vector<AtomIndex> table;
};

class StructureInstance {
 public:
  StructureInstance(std::vector<Atom> carrier, std::vector<FunctionSym> functions,
                    std::vector<PredicateSym> predicates);

  const std::vector<Atom>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<FunctionSym>& functions() const { return functions_; }
  const std::vector<PredicateSym>& predicates() const { return predicates_; }
  bool has_functions() const { return !functions_.empty(); }

  AtomIndex index_of(const Atom& atom) const;
  std::optional<AtomIndex> find_atom(const Atom& atom) const;

  const PredicateSym* find_predicate(std::string_view name) const;
  const FunctionSym* find_function(std::string_view name) const;
  const PredicateSym& predicate(std::string_view name) const;
  const FunctionSym& function(std::string_view name) const;

  std::uint8_t eval(const PredicateSym& p, std::span<const AtomIndex> args) const;
  AtomIndex eval(const FunctionSym& f, std::span<const AtomIndex> args) const;

  // Offset of an argument tuple in a dense table.
  std::size_t table_offset(std::span<const AtomIndex> args) const;

 private:
  std::vector<Atom> carrier_;
  std::map<Atom, AtomIndex> index_;
  std::vector<FunctionSym> functions_;
  std::vector<PredicateSym> predicates_;
  std::map<std::string, std::size_t, std::less<>> function_by_name_;
  std::map<std::string, std::size_t, std::less<>> predicate_by_name_;
};

// Number of entries of a dense table over a carrier of the given size.
std::size_t table_size(std::size_t carrier_size, std::size_t arity);

struct Expression {
  enum class Kind : std::uint8_t { Functional, Predicate };

  Kind kind = Kind::Predicate;
  Var target = 0;  // functional expressions only
  std::string symbol;
  std::vector<Var> args;

  static Expression functional(Var target, std::string symbol, std::vector<Var> args) {
    return {Kind::Functional, target, std::move(symbol), std::move(args)};
  }
  static Expression predicate(std::string symbol, std::vector<Var> args) {
    return {Kind::Predicate, 0, std::move(symbol), std::move(args)};
  }

  bool is_predicate() const { return kind == Kind::Predicate; }
  auto operator<=>(const Expression&) const = default;

  std::string to_string() const;
};

// Checks that every symbol exists in U with matching arity.
void validate_expressions(const StructureInstance& u, std::span<const Expression> seq);

// Smallest s such that Y and every variable of seq lie in {x_0..x_s}.
Var covering_index(std::span<const Var> inputs, std::span<const Expression> seq);

std::size_t count_predicates(std::span<const Expression> seq);

// Signatures (delta_1..delta_r) are encoded with delta_1 as bit 0.
using SignatureCode = std::uint64_t;

SignatureCode encode_signature(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> decode_signature(SignatureCode code, std::size_t r);
// "delta_1 delta_2 ... delta_r" as a string of '0'/'1'.
std::string signature_string(SignatureCode code, std::size_t r);

// The map nu : E_2^r -> S(omega), stored for every signature.
class AnswerTable {
 public:
  AnswerTable() = default;
  AnswerTable(std::size_t r, std::vector<AnswerSet> values);

  static AnswerTable constant(std::size_t r, AnswerSet value);
  // nu(delta) = {offset + code(delta)}; pairwise disjoint values.
  static AnswerTable distinct_singletons(std::size_t r, Answer offset = 0);

  std::size_t arity() const { return r_; }
  const AnswerSet& operator()(SignatureCode code) const { return values_.at(code); }
  const std::vector<AnswerSet>& values() const { return values_; }

  bool operator==(const AnswerTable&) const = default;

 private:
  std::size_t r_ = 0;
  std::vector<AnswerSet> values_;
};

class Problem {
 public:
  Problem(std::vector<Var> inputs, AnswerTable nu, std::vector<Expression> seq);

  const std::vector<Var>& inputs() const { return inputs_; }
  const AnswerTable& nu() const { return nu_; }
  const std::vector<Expression>& seq() const { return seq_; }
  std::size_t predicate_count() const { return nu_.arity(); }
  std::size_t input_count() const { return inputs_.size(); }

  bool operator==(const Problem&) const = default;

 private:
  std::vector<Var> inputs_;
  AnswerTable nu_;
  std::vector<Expression> seq_;
};

// Enumerates carrier^n in lexicographic order (first coordinate most significant).
class TupleSpace {
 public:
  TupleSpace(std::size_t carrier_size, std::size_t n);

  std::size_t carrier_size() const { return base_; }
  std::size_t dimension() const { return n_; }
  std::uint64_t count() const { return count_; }

  void decode(std::uint64_t index, std::span<AtomIndex> out) const;
  std::vector<AtomIndex> decode(std::uint64_t index) const;
  std::uint64_t encode(std::span<const AtomIndex> tuple) const;

 private:
  std::size_t base_;
  std::size_t n_;
  std::uint64_t count_;
};

// Upper limit on |carrier|^n for anything that enumerates tuples.
inline constexpr std::uint64_t kMaxTuples = std::uint64_t{1} << 24;

}  // namespace ctree
