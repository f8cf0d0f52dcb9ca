#include "ctree/tree.hpp"

#include <functional>
#include <sstream>

#include "ctree/semantics.hpp"

namespace ctree {

ComputationTree::ComputationTree(std::vector<Var> inputs, std::vector<TreeNode> nodes, std::vector<TreeEdge> edges)
    : inputs_(std::move(inputs)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (inputs_.empty()) throw Error(ErrorKind::MalformedTree, "input variable set is empty");
  for (std::size_t i = 1; i < inputs_.size(); ++i)
    if (!(inputs_[i - 1] < inputs_[i])) throw Error(ErrorKind::MalformedTree, "input variables must be sorted");
  if (nodes_.size() < 2) throw Error(ErrorKind::MalformedTree, "tree needs at least two nodes");
  out_.assign(nodes_.size(), {});
  std::vector<std::size_t> in_degree(nodes_.size(), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.from >= nodes_.size() || edge.to >= nodes_.size())
      throw Error(ErrorKind::MalformedTree, "edge refers to a missing node");
    out_[edge.from].push_back(e);
    ++in_degree[edge.to];
  }
  std::size_t roots = 0;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const auto& node = nodes_[v];
    if (in_degree[v] == 0) {
      ++roots;
      root_ = v;
      if (node.kind != TreeNode::Kind::Root) throw Error(ErrorKind::MalformedTree, "node without parent is not the root");
    } else if (in_degree[v] > 1) {
      throw Error(ErrorKind::MalformedTree, "node " + std::to_string(v) + " has several parents");
    } else if (node.kind == TreeNode::Kind::Root) {
      throw Error(ErrorKind::MalformedTree, "root has an entering edge");
    }
    bool leaf = out_[v].empty();
    if (node.kind == TreeNode::Kind::Terminal && !leaf)
      throw Error(ErrorKind::MalformedTree, "terminal node " + std::to_string(v) + " has leaving edges");
    if (node.kind != TreeNode::Kind::Terminal && leaf)
      throw Error(ErrorKind::MalformedTree, "node " + std::to_string(v) + " has no leaving edges but is not terminal");
    if (node.kind == TreeNode::Kind::Functional && node.expr.is_predicate())
      throw Error(ErrorKind::MalformedTree, "functional node carries a predicate expression");
    if (node.kind == TreeNode::Kind::Predicate && !node.expr.is_predicate())
      throw Error(ErrorKind::MalformedTree, "predicate node carries a functional expression");
    for (auto e : out_[v]) {
      const auto& label = edges_[e].label;
      if (node.kind == TreeNode::Kind::Predicate) {
        if (!label || *label > 1) throw Error(ErrorKind::MalformedTree, "predicate edge must be labeled 0 or 1");
      } else if (label) {
        throw Error(ErrorKind::MalformedTree, "edge leaving node " + std::to_string(v) + " must be unlabeled");
      }
    }
  }
  if (roots != 1) throw Error(ErrorKind::MalformedTree, "tree must have exactly one root");
  // Reachability: every node must hang below the root (rules out cycles).
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack{root_};
  std::size_t visited = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    if (seen[v]) throw Error(ErrorKind::MalformedTree, "cycle");
    seen[v] = true;
    ++visited;
    for (auto e : out_[v]) stack.push_back(edges_[e].to);
  }
  if (visited != nodes_.size()) throw Error(ErrorKind::MalformedTree, "tree is not connected");
}

TreeBuilder::TreeBuilder(std::vector<Var> inputs) : inputs_(std::move(inputs)) { nodes_.push_back(TreeNode::root()); }

NodeId TreeBuilder::add(NodeId parent, TreeNode node, std::optional<std::uint8_t> label) {
  nodes_.push_back(std::move(node));
  NodeId id = nodes_.size() - 1;
  edges_.push_back({parent, id, label});
  return id;
}

ComputationTree TreeBuilder::build() const { return ComputationTree(inputs_, nodes_, edges_); }

std::vector<CompletePath> complete_paths(const ComputationTree& tree) {
  std::vector<CompletePath> paths;
  CompletePath current;
  std::function<void(NodeId)> walk = [&](NodeId v) {
    const auto& node = tree.nodes()[v];
    current.nodes.push_back(v);
    if (node.kind == TreeNode::Kind::Functional || node.kind == TreeNode::Kind::Predicate)
      current.seq.push_back(node.expr);
    if (node.kind == TreeNode::Kind::Terminal) {
      current.answer = node.label;
      paths.push_back(current);
    }
    for (auto e : tree.out_edges(v)) {
      current.edges.push_back(e);
      bool pred = node.kind == TreeNode::Kind::Predicate;
      if (pred) current.delta.push_back(*tree.edges()[e].label);
      walk(tree.edges()[e].to);
      if (pred) current.delta.pop_back();
      current.edges.pop_back();
    }
    if (node.kind == TreeNode::Kind::Functional || node.kind == TreeNode::Kind::Predicate) current.seq.pop_back();
    current.nodes.pop_back();
  };
  walk(tree.root());
  return paths;
}

std::vector<std::uint64_t> path_area(const StructureInstance& u, const ComputationTree& tree, const CompletePath& path) {
  TupleSpace space(u.size(), tree.inputs().size());
  std::vector<std::uint64_t> area;
  std::vector<AtomIndex> tuple(space.dimension());
  bool has_predicates = !path.delta.empty();
  for (std::uint64_t t = 0; t < space.count(); ++t) {
    if (!has_predicates) {
      area.push_back(t);
      continue;
    }
    space.decode(t, tuple);
    if (evaluate_alphas(u, tree.inputs(), path.seq, tuple) == path.delta) area.push_back(t);
  }
  return area;
}

bool is_deterministic(const ComputationTree& tree) {
  for (NodeId v = 0; v < tree.nodes().size(); ++v) {
    const auto& out = tree.out_edges(v);
    switch (tree.nodes()[v].kind) {
      case TreeNode::Kind::Root:
      case TreeNode::Kind::Functional:
        if (out.size() != 1) return false;
        break;
      case TreeNode::Kind::Predicate: {
        bool seen[2] = {false, false};
        for (auto e : out) {
          auto l = *tree.edges()[e].label;
          if (seen[l]) return false;
          seen[l] = true;
        }
        break;
      }
      case TreeNode::Kind::Terminal:
        break;
    }
  }
  return true;
}

namespace {

std::string tuple_text(const StructureInstance& u, std::span<const AtomIndex> tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += u.carrier()[tuple[i]].to_string();
  }
  return s + ")";
}

}  // namespace

SolveResult solves(const StructureInstance& u, const ComputationTree& tree, const Problem& z, SolveMode mode) {
  if (tree.inputs() != z.inputs()) return {false, "input variable sets differ"};
  if (mode == SolveMode::Deterministic && !is_deterministic(tree)) return {false, "tree is not deterministic"};
  TupleSpace space(u.size(), z.input_count());
  auto paths = complete_paths(tree);
  std::vector<bool> covered(space.count(), false);
  std::vector<AtomIndex> tuple(space.dimension());
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    for (auto t : path_area(u, tree, paths[pi])) {
      covered[t] = true;
      space.decode(t, tuple);
      const auto& answers = problem_value(u, z, tuple);
      if (!std::binary_search(answers.begin(), answers.end(), paths[pi].answer))
        return {false, "path " + std::to_string(pi) + " answers " + std::to_string(paths[pi].answer) +
                           " outside z" + tuple_text(u, tuple)};
    }
  }
  for (std::uint64_t t = 0; t < space.count(); ++t) {
    if (!covered[t]) {
      space.decode(t, tuple);
      return {false, "input " + tuple_text(u, tuple) + " is not covered by any path"};
    }
  }
  return {true, "ok"};
}

ComputationTree canonical_tree(const StructureInstance& u, const Problem& z) {
  validate_problem(u, z);
  TreeBuilder b(z.inputs());
  const auto& seq = z.seq();
  std::function<void(NodeId, std::optional<std::uint8_t>, std::size_t, SignatureCode, std::size_t)> grow =
      [&](NodeId parent, std::optional<std::uint8_t> label, std::size_t step, SignatureCode code, std::size_t bit) {
        if (step == seq.size()) {
          b.add(parent, TreeNode::terminal(z.nu()(code).front()), label);
          return;
        }
        NodeId v = b.add(parent, TreeNode::working(seq[step]), label);
        if (seq[step].is_predicate()) {
          grow(v, std::uint8_t{0}, step + 1, code, bit + 1);
          grow(v, std::uint8_t{1}, step + 1, code | (SignatureCode{1} << bit), bit + 1);
        } else {
          grow(v, std::nullopt, step + 1, code, bit);
        }
      };
  grow(0, std::nullopt, 0, 0, 0);
  return b.build();
}

std::string render_tree(const ComputationTree& tree) {
  std::ostringstream out;
  out << "inputs:";
  for (auto v : tree.inputs()) out << " x" << v;
  out << "\n";
  std::function<void(NodeId, int, std::string)> walk = [&](NodeId v, int depth, std::string prefix) {
    const auto& node = tree.nodes()[v];
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << prefix;
    switch (node.kind) {
      case TreeNode::Kind::Root: out << "root"; break;
      case TreeNode::Kind::Functional:
      case TreeNode::Kind::Predicate: out << node.expr.to_string(); break;
      case TreeNode::Kind::Terminal: out << "=> " << node.label; break;
    }
    out << "\n";
    for (auto e : tree.out_edges(v)) {
      const auto& edge = tree.edges()[e];
      std::string p = edge.label ? "[" + std::to_string(*edge.label) + "] " : "";
      walk(edge.to, depth + 1, p);
    }
  };
  walk(tree.root(), 0, "");
  return out.str();
}

}  // namespace ctree
