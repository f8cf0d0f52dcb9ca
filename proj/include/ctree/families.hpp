#pragma once

// Problem families over weight-pruned pools and the observed-type
// experiment for tau pairs.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ctree/measure.hpp"
#include "ctree/profiles.hpp"
#include "ctree/solvers.hpp"
#include "ctree/typelab.hpp"
#include "ctree/zoo.hpp"

namespace ctree {

// Upper limit on enumerated subsets per family.
inline constexpr std::uint64_t kMaxFamilySubsets = 250'000;

struct FamilyOptions {
  std::uint64_t budget = 3;    // psi^i budget of enumerated subsets
  std::size_t max_size = 3;    // largest subset
  std::size_t threads = 1;
  bool padding = true;         // empty sequence and constant-nu repeats of the lightest predicate
};

// Predicate expressions over `inputs` of weight <= budget with equal columns
// merged (lightest kept) and constant columns dropped, in pool order.
std::vector<Expression> reduced_pool(const StructureInstance& u, std::span<const Var> inputs, const Measure& psi,
                                     std::uint64_t budget);

Triple evaluate_triple(const PoolContext& ctx, const Problem& z, const Measure& psi);

using NamedProblem = std::pair<std::string, Problem>;

// Every subset of the reduced pool with at most max_size members and weight
// <= budget, each with distinct-singleton and with constant nu, plus padding
// and the extra problems (solved over pools of weight <= their psi^i).
// Throws BudgetTooLargeForEnumeration above kMaxFamilySubsets subsets.
Family pool_family(const StructureInstance& u, const Measure& psi, const std::vector<Var>& inputs,
                   const FamilyOptions& options, const std::vector<NamedProblem>& extra = {});

// Named witness problems of the block active at n.
std::vector<NamedProblem> block_witnesses(const TauPair& tp, std::uint32_t n);

// pool_family over (U_tau, psi_tau) at n with the block's witnesses and the
// infinity flags of its kind.
Family tau_family(const TauPair& tp, std::uint32_t n, const FamilyOptions& options);

// Whether psi^param is bounded on the universe for a block of kind v.
bool parameter_bounded(int v, int param);

Hints upper_hints(int v, const Family& family, int b, int c);
Hints lower_hints(int v, const Family& family, int b, int c);

struct CellCheck {
  FnProfile profile;
  Hints hints;
  TypeVerdict verdict;
  Letter predicted = Letter::Alpha;
  bool consistent = false;
};

struct TypelabCase {
  std::uint32_t n = 1;
  int v = 2;
  std::string descriptor;
  std::size_t family_size = 0;
  std::uint64_t closed_budget = 0;
  std::array<std::array<CellCheck, 3>, 3> upper;
  std::array<std::array<CellCheck, 3>, 3> lower;
  bool duality_ok = false;
  bool consistent = false;
};

TypelabCase observed_consistency(const TauSequence& tau, const TauPair& tp, std::uint32_t n, std::uint64_t big_m,
                                 const FamilyOptions& options);

}  // namespace ctree
