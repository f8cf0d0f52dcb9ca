#include "doctest.h"

#include "ctree/measure.hpp"
#include "ctree/zoo.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ctree;

namespace {

std::uint8_t eval_at(const StructureInstance& u, const std::string& name, const std::vector<Atom>& atoms) {
  std::vector<AtomIndex> idx;
  for (const auto& a : atoms) idx.push_back(u.index_of(a));
  return u.eval(u.predicate(name), idx);
}

}  // namespace

TEST_SUITE("zoo") {
  TEST_CASE("pi_3 truncation is the threshold fixture") {
    auto pi3 = build_pi(3, {0, 2, 0, 3});
    auto s1 = fx::s1();
    CHECK(pi3.u.carrier() == s1.carrier());
    REQUIRE(pi3.u.predicates().size() == s1.predicates().size());
    for (std::size_t i = 0; i < s1.predicates().size(); ++i) {
      CHECK(pi3.u.predicates()[i].name == s1.predicates()[i].name);
      CHECK(pi3.u.predicates()[i].table == s1.predicates()[i].table);
      CHECK(pi3.psi.weight(s1.predicates()[i].name) == 1);
    }
  }

  TEST_CASE("pi_2 has one identically zero predicate") {
    auto pi2 = build_pi(2, default_truncation(2, 0));
    CHECK(pi2.u.size() == 1);
    REQUIRE(pi2.u.predicates().size() == 1);
    CHECK(pi2.u.predicates()[0].table == std::vector<std::uint8_t>{0});
  }

  TEST_CASE("pi_6 predicates and weights") {
    auto pi6 = build_pi(6, {2, 3, 2, 7});
    std::vector<std::pair<std::string, std::uint64_t>> expect{{"q4", 2}, {"q5", 2}, {"q6", 3},
                                                              {"q7", 3}, {"p4", 2}, {"p6", 3}};
    CHECK(pi6.u.predicates().size() == expect.size());
    for (const auto& [name, w] : expect) CHECK(pi6.psi.weight(name) == w);
    CHECK(eval_at(pi6.u, "q5", {Atom::base(5)}) == 1);
    CHECK(eval_at(pi6.u, "q5", {Atom::base(4)}) == 0);
    CHECK(eval_at(pi6.u, "p4", {Atom::base(4)}) == 1);
    CHECK(eval_at(pi6.u, "p4", {Atom::base(5)}) == 1);
    CHECK(eval_at(pi6.u, "p4", {Atom::base(6)}) == 0);
  }

  TEST_CASE("pi_5 and pi_7 closed forms") {
    auto pi5 = build_pi(5, default_truncation(5, 3));
    auto c = ci_schedule(3);
    for (int i = 0; i <= 3; ++i) {
      auto name = "q" + std::to_string(i);
      CHECK(pi5.psi.weight(name) == c[static_cast<std::size_t>(i)]);
      for (int j = 0; j <= 4; ++j) CHECK(eval_at(pi5.u, name, {Atom::base(j)}) == (i == j ? 1 : 0));
    }
    auto pi7 = build_pi(7, default_truncation(7, 4));
    CHECK(pi7.psi.weight("qm3") == 3);
    CHECK(pi7.psi.weight("l2") == 1);
    CHECK(eval_at(pi7.u, "qm3", {Atom::base(-3)}) == 1);
    CHECK(eval_at(pi7.u, "qm3", {Atom::base(3)}) == 0);
    CHECK(eval_at(pi7.u, "l2", {Atom::base(3)}) == 1);
    CHECK(eval_at(pi7.u, "l2", {Atom::base(-4)}) == 0);
    CHECK_THROWS_AS(build_pi(8, {}), Error);
    CHECK_THROWS_AS(build_pi(3, {0, 5, 0, 2}), Error);
  }

  TEST_CASE("ci schedule") {
    CHECK(ci_schedule(3) == std::vector<std::uint64_t>{1, 3, 10, 44});
    auto c = ci_schedule(6);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) CHECK(c[i] - 2 == i * sum);
      sum += c[i];
    }
  }

  TEST_CASE("lifting") {
    auto pi3 = build_pi(3, default_truncation(3, 2));
    auto l1 = lift_structure(pi3, 1);
    CHECK(eval_at(l1.u, "l0^1", {Atom::lifted(1, 1)}) == 1);
    CHECK(eval_at(l1.u, "l0^1", {Atom::lifted(0, 1)}) == 0);
    CHECK(eval_at(l1.u, "l0^1", {Atom::marker(0, 1)}) == 0);
    CHECK(l1.psi.weight("l0^1") == 1);

    auto pi5 = build_pi(5, default_truncation(5, 2));
    auto l2 = lift_structure(pi5, 2);
    CHECK(l2.u.size() == pi5.u.size() + 2);
    for (int i = 0; i <= 2; ++i) {
      auto name = "q" + std::to_string(i) + "^2";
      CHECK(eval_at(l2.u, name, {Atom::marker(1, 2), Atom::lifted(i, 2)}) == 1);
      CHECK(eval_at(l2.u, name, {Atom::lifted(i, 2), Atom::marker(1, 2)}) == 0);
      CHECK(eval_at(l2.u, name, {Atom::marker(0, 2), Atom::lifted(i, 2)}) == 0);
      CHECK(eval_at(l2.u, name, {Atom::marker(1, 2), Atom::marker(1, 2)}) == 0);
    }
  }

  TEST_CASE("direct sums") {
    auto pi2 = lift_structure(build_pi(2, default_truncation(2, 0)), 1);
    auto pi3 = lift_structure(build_pi(3, default_truncation(3, 2)), 2);
    auto sum = direct_sum({{1, pi2}, {2, pi3}});
    CHECK(sum.u.size() == pi2.u.size() + pi3.u.size());
    for (const auto& p : sum.u.predicates()) {
      if (p.arity != 1) continue;
      for (std::size_t a = 0; a < sum.u.size(); ++a) CHECK(p.table[a] == 0);
    }
    auto single = direct_sum({{2, pi3}});
    CHECK(single.u.size() == pi3.u.size());
    CHECK_THROWS_AS(direct_sum({{2, pi3}, {2, pi3}}), Error);
  }

  TEST_CASE("tau parsing and levels") {
    auto tau = parse_tau("2:2,5:1,6:inf");
    REQUIRE(tau.blocks.size() == 3);
    CHECK(tau.blocks[0].w == 2u);
    CHECK_FALSE(tau.blocks[2].w.has_value());
    auto tp = build_tau_pair(tau, 3);
    REQUIRE(tp.blocks.size() == 3);
    CHECK(tp.blocks[0].level == 1);
    CHECK(tp.blocks[1].level == 3);
    CHECK(tp.blocks[2].level == 4);
    CHECK(tp.active_block(1) == 0);
    CHECK(tp.active_block(2) == 0);
    CHECK(tp.active_block(3) == 1);
    CHECK(tp.active_block(9) == 2);

    auto t23 = build_tau_pair(parse_tau("2:1,3:inf"), 3);
    CHECK(t23.active_block(1) == 0);
    CHECK(t23.active_block(2) == 1);
    auto t5 = build_tau_pair(parse_tau("5:inf"), 3);
    CHECK(t5.blocks.size() == 1);
    CHECK(t5.pair.u.size() == lift_structure(build_pi(5, default_truncation(5, 3)), 1).u.size());

    for (const char* bad : {"", "2:inf,3:inf", "3:1,2:inf", "2:1,5:1,4:inf", "2:0,3:inf", "2:1", "9:inf"}) {
      CHECK_THROWS_AS(parse_tau(bad), Error);
    }
  }

  TEST_CASE("witness problems") {
    auto pi6 = build_pi(6, default_truncation(6, 6));
    auto z6 = witness_problem(WitnessKind::Z6, 2, 1);
    CHECK(psi_i(pi6.psi, z6) == 6);
    CHECK(z6.nu()(encode_signature(std::vector<std::uint8_t>{1, 0, 1})) == AnswerSet{1});
    CHECK(z6.nu()(encode_signature(std::vector<std::uint8_t>{0, 1, 1})) == AnswerSet{2});
    CHECK(z6.nu()(0) == AnswerSet{0});

    auto pi5 = build_pi(5, default_truncation(5, 3));
    CHECK(psi_i(pi5.psi, witness_problem(WitnessKind::Z5, 2, 1)) == 10);
    auto pi7 = build_pi(7, default_truncation(7, 3));
    CHECK(psi_i(pi7.psi, witness_problem(WitnessKind::Eta7, 1, 1)) == 1);

    auto zb = witness_problem(WitnessKind::Zbin3, 3, 1);
    CHECK(zb.seq().size() == 3);
    CHECK(zb.nu() == AnswerTable::distinct_singletons(3));

    auto lifted = witness_problem(WitnessKind::Z5, 1, 3, 2);
    CHECK(lifted.inputs() == std::vector<Var>{1, 2, 3});
    CHECK(lifted.seq()[0].args == std::vector<Var>{1, 2});
    CHECK(lifted.seq()[0].symbol == "q1^2");

    CHECK_THROWS_AS(require_predicates(pi5.u, witness_problem(WitnessKind::Z5, 7, 1)), Error);
    CHECK_NOTHROW(require_predicates(pi5.u, witness_problem(WitnessKind::Z5, 3, 1)));
  }
}
