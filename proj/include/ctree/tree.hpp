#pragma once

// Computation trees, complete paths, areas and the solving relation.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ctree/structure.hpp"

namespace ctree {

using NodeId = std::size_t;

struct TreeNode {
  enum class Kind : std::uint8_t { Root, Functional, Predicate, Terminal };

  Kind kind = Kind::Terminal;
  Expression expr;   // Functional and Predicate nodes
  Answer label = 0;  // Terminal nodes

  static TreeNode root() { return {Kind::Root, {}, 0}; }
  static TreeNode working(Expression e) {
    auto k = e.is_predicate() ? Kind::Predicate : Kind::Functional;
    return {k, std::move(e), 0};
  }
  static TreeNode terminal(Answer a) { return {Kind::Terminal, {}, a}; }

  bool operator==(const TreeNode&) const = default;
};

struct TreeEdge {
  NodeId from = 0;
  NodeId to = 0;
  std::optional<std::uint8_t> label;  // nullopt = unlabeled

  bool operator==(const TreeEdge&) const = default;
};

class ComputationTree {
 public:
  // Validates the structural conditions; throws MalformedTree.
  ComputationTree(std::vector<Var> inputs, std::vector<TreeNode> nodes, std::vector<TreeEdge> edges);

  const std::vector<Var>& inputs() const { return inputs_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  NodeId root() const { return root_; }
  // Indices into edges(), in insertion order.
  const std::vector<std::size_t>& out_edges(NodeId id) const { return out_[id]; }

  bool operator==(const ComputationTree& o) const {
    return inputs_ == o.inputs_ && nodes_ == o.nodes_ && edges_ == o.edges_;
  }

 private:
  std::vector<Var> inputs_;
  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  NodeId root_ = 0;
};

// Incremental construction; node 0 is the root.
class TreeBuilder {
 public:
  explicit TreeBuilder(std::vector<Var> inputs);

  NodeId add(NodeId parent, TreeNode node, std::optional<std::uint8_t> label = std::nullopt);
  ComputationTree build() const;

 private:
  std::vector<Var> inputs_;
  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
};

struct CompletePath {
  std::vector<NodeId> nodes;        // v_0 .. v_{m+1}
  std::vector<std::size_t> edges;   // d_0 .. d_m
  std::vector<Expression> seq;      // beta(xi)
  std::vector<std::uint8_t> delta;  // labels of edges leaving predicate nodes
  Answer answer = 0;                // kappa(xi)
};

// One path per terminal, preorder with children in edge order.
std::vector<CompletePath> complete_paths(const ComputationTree& tree);

// Tuple indices (TupleSpace order over carrier^|Y|) of the area A(xi), sorted.
std::vector<std::uint64_t> path_area(const StructureInstance& u, const ComputationTree& tree, const CompletePath& path);

bool is_deterministic(const ComputationTree& tree);

enum class SolveMode { Nondeterministic, Deterministic };

struct SolveResult {
  bool ok = false;
  std::string diagnostic;
};

SolveResult solves(const StructureInstance& u, const ComputationTree& tree, const Problem& z, SolveMode mode);

// Deterministic tree whose every complete path carries beta(z); the terminal
// for signature delta is labeled min nu(delta).
ComputationTree canonical_tree(const StructureInstance& u, const Problem& z);

// Indented text rendering.
std::string render_tree(const ComputationTree& tree);

}  // namespace ctree
