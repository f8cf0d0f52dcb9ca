#pragma once

// Exact psi^d / psi^a over a finite pool of predicate expressions (F empty),
// and an exhaustive tree-enumeration oracle.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ctree/measure.hpp"
#include "ctree/structure.hpp"
#include "ctree/tree.hpp"

namespace ctree {

// All predicate expressions p(y_1..y_k) with y_i in Y, in predicate order then
// lexicographic argument order; expressions heavier than max_weight dropped.
std::vector<Expression> enumerate_pool(const StructureInstance& u, std::span<const Var> inputs, const Measure& psi,
                                       std::optional<std::uint64_t> max_weight = std::nullopt);

// Weight charged for testing `e`: weighted depth weight, 0 under the zero measure.
std::uint64_t attribute_weight(const Measure& psi, const Expression& e);

inline constexpr std::size_t kMaxClasses = 256;

class ClassSet {
 public:
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  bool empty() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  ClassSet operator&(const ClassSet& o) const {
    ClassSet r;
    for (int i = 0; i < 4; ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  ClassSet operator-(const ClassSet& o) const {
    ClassSet r;
    for (int i = 0; i < 4; ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < 4; ++k) {
      auto w = w_[k];
      while (w) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  bool operator==(const ClassSet&) const = default;
  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) h = (h ^ w) * 0xff51afd7ed558ccdULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, 4> w_{};
};

struct ClassSetHash {
  std::size_t operator()(const ClassSet& s) const { return s.hash(); }
};

struct QuotientClass {
  std::vector<std::uint8_t> signature;  // over Quotient::attributes
  std::uint64_t representative = 0;     // smallest tuple index
  std::uint64_t size = 0;
};

struct Quotient {
  std::vector<Var> inputs;
  // Pool after merging equal columns (lightest kept, earliest on ties).
  std::vector<Expression> attributes;
  std::vector<std::uint64_t> weights;
  std::vector<QuotientClass> classes;      // ordered by representative
  std::vector<std::uint32_t> class_of;     // per tuple
  std::vector<ClassSet> ones;              // per attribute
  ClassSet all;
};

// Throws NotAttributeStructure (F nonempty), EmptyPool, TooManyClasses.
Quotient quotient_classes(const StructureInstance& u, std::span<const Var> inputs, std::span<const Expression> pool,
                          const Measure& psi);

struct SolverResult {
  std::uint64_t value = 0;
  ComputationTree tree;
};

// Throws NotAttributeStructure, EmptyPool, InsufficientPool, TooManyClasses,
// InvalidMeasure (table measures other than zero).
SolverResult psi_d_exact(const StructureInstance& u, const Problem& z, std::span<const Expression> pool,
                         const Measure& psi);
SolverResult psi_a_exact(const StructureInstance& u, const Problem& z, std::span<const Expression> pool,
                         const Measure& psi);

// Quotient computed once and reused across problems over the same inputs.
// Problems whose seq draws only from the pool are answered per class
// representative; others fall back to a full tuple scan.
class PoolContext {
 public:
  PoolContext(const StructureInstance& u, std::vector<Var> inputs, std::span<const Expression> pool,
              const Measure& psi);

  const Quotient& quotient() const { return quotient_; }
  bool covers(const Problem& z) const;
  SolverResult psi_d(const Problem& z) const;
  SolverResult psi_a(const Problem& z) const;

 private:
  const StructureInstance* u_;
  Quotient quotient_;
  std::vector<Expression> members_;
};

// Minimum measure of a tree over `pool` that solves z in the given mode, or
// nullopt when no tree of measure <= budget exists. Works on raw tuples.
// Throws BudgetTooLargeForEnumeration when the search space is too large.
std::optional<std::uint64_t> brute_force_psi(const StructureInstance& u, const Problem& z,
                                             std::span<const Expression> pool, const Measure& psi,
                                             std::uint64_t budget, SolveMode mode);

}  // namespace ctree
