#pragma once

// Seeded random instances and the chain-inequality sweep.

#include <cstdint>
#include <vector>

#include "ctree/json_io.hpp"
#include "ctree/measure.hpp"
#include "ctree/rng.hpp"
#include "ctree/structure.hpp"

namespace ctree {

struct RandomParams {
  std::size_t max_carrier = 6;
  std::size_t max_predicates = 4;
  std::size_t max_arity = 2;
  std::size_t max_inputs = 2;
  std::size_t max_pool = 5;
  std::size_t max_r = 3;
  std::uint64_t max_weight = 3;
  std::size_t max_answer = 3;  // answers drawn from 0..max_answer-1
  bool with_functions = false;
};

struct RandomInstance {
  StructureInstance u;
  Measure psi;
  Problem z;
  std::vector<Expression> pool;  // contains every predicate expression of z
};

RandomInstance random_instance(Rng& rng, const RandomParams& params);

// Seed of the k-th instance of a sweep; instances are independent of order.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t k);

// psi^a <= psi^d <= psi^i on `trials` random F-free instances.
Json chaincheck_report(std::size_t trials, std::uint64_t seed, std::size_t threads);

}  // namespace ctree
