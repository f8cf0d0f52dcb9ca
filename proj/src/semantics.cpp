#include "ctree/semantics.hpp"

#include <algorithm>

namespace ctree {

namespace {

std::vector<AtomIndex> initial_registers(const StructureInstance& u, std::span<const Var> inputs,
                                         std::span<const Expression> seq, std::span<const AtomIndex> input,
                                         Var& s_out) {
  if (inputs.empty()) throw Error(ErrorKind::InvalidProblem, "input variable set is empty");
  if (input.size() != inputs.size())
    throw Error(ErrorKind::ArityMismatch, "input tuple has " + std::to_string(input.size()) + " atoms, expected " +
                                              std::to_string(inputs.size()));
  for (auto a : input)
    if (a >= u.size()) throw Error(ErrorKind::AtomNotInCarrier, "carrier index " + std::to_string(a));
  Var s = covering_index(inputs, seq);
  s_out = s;
  auto w = std::min_element(inputs.begin(), inputs.end()) - inputs.begin();
  std::vector<AtomIndex> regs(static_cast<std::size_t>(s) + 1, input[w]);
  for (std::size_t k = 0; k < inputs.size(); ++k) regs[inputs[k]] = input[k];
  return regs;
}

template <typename OnStep>
void step_all(const StructureInstance& u, std::span<const Expression> seq, std::vector<AtomIndex>& regs,
              std::vector<std::uint8_t>& alphas, OnStep on_step) {
  std::vector<AtomIndex> args;
  for (const auto& e : seq) {
    args.clear();
    for (auto v : e.args) args.push_back(regs[v]);
    if (e.is_predicate()) {
      const auto& p = u.predicate(e.symbol);
      if (args.size() != p.arity) throw Error(ErrorKind::ArityMismatch, e.to_string());
      alphas.push_back(u.eval(p, args));
    } else {
      const auto& f = u.function(e.symbol);
      if (args.size() != f.arity) throw Error(ErrorKind::ArityMismatch, e.to_string());
      regs[e.target] = u.eval(f, args);
    }
    on_step(regs);
  }
}

}  // namespace

RegisterTrace run_registers(const StructureInstance& u, std::span<const Var> inputs, std::span<const Expression> seq,
                            std::span<const AtomIndex> input) {
  RegisterTrace trace;
  auto regs = initial_registers(u, inputs, seq, input, trace.s);
  trace.snapshots.push_back(regs);
  step_all(u, seq, regs, trace.alphas, [&](const std::vector<AtomIndex>& r) { trace.snapshots.push_back(r); });
  return trace;
}

std::vector<std::uint8_t> evaluate_alphas(const StructureInstance& u, std::span<const Var> inputs,
                                          std::span<const Expression> seq, std::span<const AtomIndex> input) {
  Var s = 0;
  auto regs = initial_registers(u, inputs, seq, input, s);
  std::vector<std::uint8_t> alphas;
  step_all(u, seq, regs, alphas, [](const std::vector<AtomIndex>&) {});
  return alphas;
}

std::vector<std::uint8_t> alpha_values(const StructureInstance& u, const Problem& z, std::span<const AtomIndex> input) {
  return evaluate_alphas(u, z.inputs(), z.seq(), input);
}

SignatureCode signature_of(const StructureInstance& u, const Problem& z, std::span<const AtomIndex> input) {
  return encode_signature(alpha_values(u, z, input));
}

const AnswerSet& problem_value(const StructureInstance& u, const Problem& z, std::span<const AtomIndex> input) {
  return z.nu()(signature_of(u, z, input));
}

std::vector<AtomIndex> resolve_atoms(const StructureInstance& u, std::span<const Atom> atoms) {
  std::vector<AtomIndex> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back(u.index_of(a));
  return out;
}

Problem lift_problem(const Problem& z) {
  auto inputs = z.inputs();
  inputs.push_back(covering_index(z.inputs(), z.seq()) + 1);
  return Problem(std::move(inputs), z.nu(), z.seq());
}

void validate_problem(const StructureInstance& u, const Problem& z) {
  validate_expressions(u, z.seq());
  if (count_predicates(z.seq()) != z.nu().arity())
    throw Error(ErrorKind::InvalidProblem, "answer table arity differs from predicate count");
}

}  // namespace ctree
