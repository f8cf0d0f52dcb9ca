#pragma once

#include "ctree/measure.hpp"
#include "ctree/structure.hpp"
#include "oracles.hpp"

namespace fx {

// Carrier {0,1,2,3}, l_i(j) = [j > i] for i = 0..2.
inline ctree::StructureInstance s1() { return oracle::thresholds(3); }

inline ctree::Measure depth(const ctree::StructureInstance& u) { return ctree::Measure::depth(u); }

// Y = {x1}, seq l0(x1), l1(x1); nu(00)={10}, nu(10)={11}, nu(11)={12}, nu(01)={13}.
inline ctree::Problem z1() {
  using ctree::Expression;
  // Codes: bit 0 = delta_1. 00 -> 0, 10 -> 1, 01 -> 2, 11 -> 3.
  ctree::AnswerTable nu(2, {{10}, {11}, {13}, {12}});
  return ctree::Problem({1}, nu, {Expression::predicate("l0", {1}), Expression::predicate("l1", {1})});
}

}  // namespace fx
