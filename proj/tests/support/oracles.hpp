#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's semantics or solvers; only the structure tables are read.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctree/measure.hpp"
#include "ctree/structure.hpp"

namespace oracle {

using ctree::AnswerSet;
using ctree::AtomIndex;

// Predicate values alpha_1..alpha_r by building one term tree per register
// and evaluating it on the input. Inputs are carrier indices aligned with
// z.inputs().
std::vector<std::uint8_t> term_alphas(const ctree::StructureInstance& u, const ctree::Problem& z,
                                      const std::vector<AtomIndex>& input);

// z(input) via term_alphas.
AnswerSet term_value(const ctree::StructureInstance& u, const ctree::Problem& z, const std::vector<AtomIndex>& input);

// Enumerates carrier^n, first coordinate most significant.
std::vector<std::vector<AtomIndex>> all_tuples(std::size_t carrier, std::size_t n);

// Column of a pool expression whose arguments are input variables.
std::vector<std::uint8_t> column(const ctree::StructureInstance& u, const std::vector<ctree::Var>& inputs,
                                 const ctree::Expression& e);

// Weighted-depth weight, 0 for the zero measure.
std::uint64_t weight(const ctree::Measure& psi, const ctree::Expression& e);

// Minimax over raw tuple sets: 0 when the set shares an answer, otherwise
// the cheapest pool attribute that splits it plus the worse side.
// nullopt when some set cannot be separated.
std::optional<std::uint64_t> psi_d(const ctree::StructureInstance& u, const ctree::Problem& z,
                                   const std::vector<ctree::Expression>& pool, const ctree::Measure& psi);

// Max over tuples of the cheapest literal set (over every pool subset)
// whose region has a common answer.
std::optional<std::uint64_t> psi_a(const ctree::StructureInstance& u, const ctree::Problem& z,
                                   const std::vector<ctree::Expression>& pool, const ctree::Measure& psi);

// Sum of weights over seq.
std::uint64_t psi_i(const ctree::Measure& psi, const ctree::Problem& z);

// Published type tables typed in as strings: rows i, d, a; letters a b g d e for
// alpha beta gamma delta epsilon.
extern const std::array<const char*, 7> kUpperText;
extern const std::array<const char*, 7> kLowerText;
// Pair tables: cell "xy" = lower letter x, upper letter y; rows joined by '|'.
extern const std::array<const char*, 7> kPairText;

char letter_char(int letter_index);  // Letter enum order -> 'a','b','g','d','e'

// Base structure with carrier {0..k} and threshold predicates l_i(j) = [j > i]
// for i = 0..k-1, depth measure.
ctree::StructureInstance thresholds(int k);

}  // namespace oracle
