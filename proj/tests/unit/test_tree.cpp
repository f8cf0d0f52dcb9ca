#include "doctest.h"

#include "ctree/measure.hpp"
#include "ctree/semantics.hpp"
#include "ctree/tree.hpp"
#include "fixtures.hpp"

using namespace ctree;

namespace {

Expression l(int i) { return Expression::predicate("l" + std::to_string(i), {1}); }

// l1? then l0 on the left, l2 on the right.
ComputationTree z1_tree() {
  TreeBuilder b({1});
  auto top = b.add(0, TreeNode::working(l(1)));
  auto left = b.add(top, TreeNode::working(l(0)), 0);
  b.add(left, TreeNode::terminal(10), 0);
  b.add(left, TreeNode::terminal(11), 1);
  b.add(top, TreeNode::terminal(12), 1);
  return b.build();
}

}  // namespace

TEST_SUITE("tree") {
  TEST_CASE("complete paths and areas") {
    auto u = fx::s1();
    auto t = z1_tree();
    auto paths = complete_paths(t);
    REQUIRE(paths.size() == 3);
    CHECK(paths[0].answer == 10);
    CHECK(paths[0].delta == std::vector<std::uint8_t>{0, 0});
    CHECK(path_area(u, t, paths[0]) == std::vector<std::uint64_t>{0});
    CHECK(path_area(u, t, paths[1]) == std::vector<std::uint64_t>{1});
    CHECK(path_area(u, t, paths[2]) == std::vector<std::uint64_t>{2, 3});
    CHECK(is_deterministic(t));
  }

  TEST_CASE("area of a single literal and of contradictory literals") {
    auto u = fx::s1();
    TreeBuilder b({1});
    auto n = b.add(0, TreeNode::working(l(1)));
    b.add(n, TreeNode::terminal(0), 0);
    b.add(n, TreeNode::terminal(1), 1);
    auto t = b.build();
    auto paths = complete_paths(t);
    CHECK(path_area(u, t, paths[0]) == std::vector<std::uint64_t>{0, 1});

    TreeBuilder c({1});
    auto m = c.add(0, TreeNode::working(l(0)));
    auto k = c.add(m, TreeNode::working(l(2)), 0);
    c.add(k, TreeNode::terminal(0), 1);
    auto tc = c.build();
    CHECK(path_area(u, tc, complete_paths(tc)[0]).empty());
  }

  TEST_CASE("solving relation") {
    auto u = fx::s1();
    auto z = fx::z1();
    auto t = z1_tree();
    // Value at 3 is {12} and the tree answers 12; at 2 l0=1,l1=1 too.
    // Signature 01 (l0=0, l1=1) never occurs, so 13 is unreachable.
    auto r = solves(u, t, z, SolveMode::Deterministic);
    CHECK(r.ok);
    auto wrong = [] {
      TreeBuilder b({1});
      auto top = b.add(0, TreeNode::working(l(1)));
      b.add(top, TreeNode::terminal(10), 0);
      b.add(top, TreeNode::terminal(12), 1);
      return b.build();
    }();
    auto bad = solves(u, wrong, z, SolveMode::Deterministic);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.diagnostic.empty());
  }

  TEST_CASE("nondeterministic trees") {
    auto u = fx::s1();
    Problem z({1}, AnswerTable(1, {{0}, {1}}), {l(1)});
    TreeBuilder b({1});
    auto a = b.add(0, TreeNode::working(l(1)));
    b.add(a, TreeNode::terminal(1), 1);
    auto c = b.add(0, TreeNode::working(l(0)));
    b.add(c, TreeNode::terminal(0), 0);
    auto t = b.build();
    CHECK_FALSE(is_deterministic(t));
    // Input 1 is not covered: l1(1)=0 and l0(1)=1.
    CHECK_FALSE(solves(u, t, z, SolveMode::Nondeterministic).ok);

    TreeBuilder b2({1});
    auto a2 = b2.add(0, TreeNode::working(l(1)));
    b2.add(a2, TreeNode::terminal(1), 1);
    b2.add(a2, TreeNode::terminal(0), 0);
    auto c2 = b2.add(0, TreeNode::working(l(0)));
    b2.add(c2, TreeNode::terminal(0), 0);
    auto t2 = b2.build();
    CHECK(solves(u, t2, z, SolveMode::Nondeterministic).ok);
    CHECK_FALSE(solves(u, t2, z, SolveMode::Deterministic).ok);
  }

  TEST_CASE("malformed trees") {
    std::vector<TreeNode> nodes{TreeNode::root(), TreeNode::working(l(0)), TreeNode::terminal(0)};
    CHECK_THROWS_AS(ComputationTree({1}, nodes, {{0, 1, {}}, {1, 2, std::nullopt}}), Error);
    CHECK_THROWS_AS(ComputationTree({1}, nodes, {{0, 1, {}}, {1, 2, 2}}), Error);
    CHECK_THROWS_AS(ComputationTree({1}, nodes, {{0, 1, {}}}), Error);
    CHECK_THROWS_AS(ComputationTree({}, nodes, {{0, 1, {}}, {1, 2, 0}}), Error);
    CHECK_NOTHROW(ComputationTree({1}, nodes, {{0, 1, {}}, {1, 2, 0}}));
  }

  TEST_CASE("canonical tree of Z1") {
    auto u = fx::s1();
    auto z = fx::z1();
    auto t = canonical_tree(u, z);
    CHECK(is_deterministic(t));
    CHECK(solves(u, t, z, SolveMode::Deterministic).ok);
    // Terminals listed by signature code.
    std::vector<Answer> terminals(4, 0);
    auto paths = complete_paths(t);
    REQUIRE(paths.size() == 4);
    for (const auto& p : paths) terminals[encode_signature(p.delta)] = p.answer;
    CHECK(terminals == std::vector<Answer>{10, 11, 13, 12});
    CHECK(measure_tree(fx::depth(u), t) == 2);
  }

  TEST_CASE("canonical tree with functional steps") {
    std::vector<Atom> carrier{Atom::base(0), Atom::base(1), Atom::base(2)};
    StructureInstance u(carrier, {FunctionSym{"s", 1, {1, 2, 0}}}, {PredicateSym{"z", 1, {1, 0, 0}}});
    Problem z({1}, AnswerTable(1, {{0, 1}, {1}}),
              {Expression::functional(1, "s", {1}), Expression::predicate("z", {1})});
    auto t = canonical_tree(u, z);
    CHECK(solves(u, t, z, SolveMode::Deterministic).ok);
    CHECK(measure_tree(Measure::depth(u), t) == 2);
    CHECK_FALSE(render_tree(t).empty());
  }

  TEST_CASE("canonical tree with constant answers") {
    auto u = fx::s1();
    Problem z({1}, AnswerTable::constant(1, {7}), {l(2)});
    auto paths = complete_paths(canonical_tree(u, z));
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].answer == 7);
    CHECK(paths[1].answer == 7);
  }
}
