#pragma once

// Register semantics Pi(Y, beta) and problem evaluation.

#include <span>
#include <vector>

#include "ctree/structure.hpp"

namespace ctree {

struct RegisterTrace {
  Var s = 0;
  // snapshots[i] holds t_{i0..is}; snapshots.size() == seq.size() + 1.
  std::vector<std::vector<AtomIndex>> snapshots;
  // alpha_i for the i-th predicate expression of seq.
  std::vector<std::uint8_t> alphas;
};

// `input` assigns a carrier index to each variable of `inputs` (same order).
RegisterTrace run_registers(const StructureInstance& u, std::span<const Var> inputs,
                            std::span<const Expression> seq, std::span<const AtomIndex> input);

// Alpha values only; skips snapshot storage.
std::vector<std::uint8_t> evaluate_alphas(const StructureInstance& u, std::span<const Var> inputs,
                                          std::span<const Expression> seq, std::span<const AtomIndex> input);

std::vector<std::uint8_t> alpha_values(const StructureInstance& u, const Problem& z,
                                       std::span<const AtomIndex> input);
SignatureCode signature_of(const StructureInstance& u, const Problem& z, std::span<const AtomIndex> input);
const AnswerSet& problem_value(const StructureInstance& u, const Problem& z, std::span<const AtomIndex> input);

std::vector<AtomIndex> resolve_atoms(const StructureInstance& u, std::span<const Atom> atoms);

// z~ = (Y + {x_{s+1}}, nu, seq).
Problem lift_problem(const Problem& z);

// Checks symbols of z against u and that the signature arity matches.
void validate_problem(const StructureInstance& u, const Problem& z);

}  // namespace ctree
