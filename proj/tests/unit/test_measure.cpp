#include "doctest.h"

#include "ctree/measure.hpp"
#include "ctree/zoo.hpp"
#include "fixtures.hpp"

using namespace ctree;

TEST_SUITE("measure") {
  TEST_CASE("weighted depth on pi_6 words") {
    auto pi6 = build_pi(6, default_truncation(6, 7));
    std::vector<std::string> w{"q4", "p4"};
    CHECK(measure_word(pi6.psi, w) == 4);
    CHECK(measure_word(pi6.psi, std::vector<std::string>{}) == 0);
    CHECK_THROWS_AS(measure_word(pi6.psi, std::vector<std::string>{"zz"}), Error);
  }

  TEST_CASE("description complexity of z6(3)") {
    auto pi6 = build_pi(6, default_truncation(6, 9));
    CHECK(psi_i(pi6.psi, witness_problem(WitnessKind::Z6, 3, 1)) == 9);
  }

  TEST_CASE("table measures and default rules") {
    std::map<Word, std::uint64_t> entries{{{"a", "b"}, 7}};
    auto m = Measure::table(entries, Measure::DefaultRule::Length, 0, 0);
    CHECK(measure_word(m, std::vector<std::string>{"a", "b"}) == 7);
    CHECK(measure_word(m, std::vector<std::string>{"a", "b", "a"}) == 3);
    auto sq = Measure::table({}, Measure::DefaultRule::LengthSquared, 0, 0);
    CHECK(measure_word(sq, std::vector<std::string>{"a", "b", "a"}) == 9);
  }

  TEST_CASE("limited measure axioms") {
    std::vector<std::string> alphabet{"a", "b", "c"};
    auto depth = Measure::weighted_depth({{"a", 1}, {"b", 2}, {"c", 1}});
    auto ok = check_limited(depth, alphabet, 500, 1);
    CHECK(ok.passed);
    CHECK(ok.trials == 500);

    auto sq = Measure::table({}, Measure::DefaultRule::LengthSquared, 0, 0);
    auto r = check_limited(sq, alphabet, 500, 1);
    CHECK_FALSE(r.passed);
    CHECK(r.failed_axiom == "subadditivity");

    auto r0 = check_limited(Measure::zero(), alphabet, 500, 1);
    CHECK_FALSE(r0.passed);
    CHECK(r0.failed_axiom == "length");
  }

  TEST_CASE("tree measure is the max over paths") {
    auto u = fx::s1();
    auto psi = Measure::weighted_depth({{"l0", 1}, {"l1", 5}, {"l2", 2}});
    TreeBuilder b({1});
    auto a = b.add(0, TreeNode::working(Expression::predicate("l0", {1})));
    b.add(a, TreeNode::terminal(0), 0);
    auto c = b.add(a, TreeNode::working(Expression::predicate("l1", {1})), 1);
    b.add(c, TreeNode::terminal(0), 0);
    b.add(c, TreeNode::terminal(1), 1);
    CHECK(measure_tree(psi, b.build()) == 6);
  }
}
