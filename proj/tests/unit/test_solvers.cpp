#include "doctest.h"

#include "ctree/random_instances.hpp"
#include "ctree/rng.hpp"
#include "ctree/solvers.hpp"
#include "ctree/zoo.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ctree;

TEST_SUITE("solvers") {
  TEST_CASE("pool enumeration") {
    auto u = fx::s1();
    auto psi = fx::depth(u);
    std::vector<Var> ys{1};
    auto pool = enumerate_pool(u, ys, psi);
    CHECK(pool.size() == 3);
    CHECK(pool[0] == Expression::predicate("l0", {1}));
    CHECK(enumerate_pool(u, ys, Measure::weighted_depth({{"l0", 1}, {"l1", 2}, {"l2", 3}}), 2).size() == 2);
  }

  TEST_CASE("quotient classes") {
    auto u = fx::s1();
    auto psi = fx::depth(u);
    std::vector<Var> ys{1};
    auto q = quotient_classes(u, ys, enumerate_pool(u, ys, psi), psi);
    CHECK(q.classes.size() == 4);

    std::vector<Atom> carrier{Atom::base(0), Atom::base(1), Atom::base(2)};
    StructureInstance c(carrier, {}, {PredicateSym{"k", 1, {1, 1, 1}}});
    auto qc = quotient_classes(c, ys, enumerate_pool(c, ys, Measure::depth(c)), Measure::depth(c));
    CHECK(qc.classes.size() == 1);

    auto pi6 = build_pi(6, default_truncation(6, 7));
    std::vector<Expression> pool{Expression::predicate("q4", {1}), Expression::predicate("q5", {1}),
                                 Expression::predicate("p4", {1})};
    auto q6 = quotient_classes(pi6.u, ys, pool, pi6.psi);
    REQUIRE(q6.classes.size() == 3);
    std::size_t singles = 0;
    for (const auto& cl : q6.classes) singles += cl.size == 1 ? 1 : 0;
    CHECK(singles == 2);
  }

  TEST_CASE("solver errors") {
    auto u = fx::s1();
    auto psi = fx::depth(u);
    auto z = fx::z1();
    CHECK_THROWS_AS(psi_d_exact(u, z, {}, psi), Error);
    std::vector<Expression> weak{Expression::predicate("l2", {1})};
    try {
      psi_d_exact(u, z, weak, psi);
      FAIL("expected InsufficientPool");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InsufficientPool);
    }
    std::vector<Atom> carrier{Atom::base(0), Atom::base(1)};
    StructureInstance f(carrier, {FunctionSym{"s", 1, {1, 0}}}, {PredicateSym{"p", 1, {0, 1}}});
    Problem zf({1}, AnswerTable::distinct_singletons(1), {Expression::predicate("p", {1})});
    try {
      psi_d_exact(f, zf, std::vector<Expression>{Expression::predicate("p", {1})}, Measure::depth(f));
      FAIL("expected NotAttributeStructure");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAttributeStructure);
    }
  }

  TEST_CASE("Z1 values and witness trees") {
    auto u = fx::s1();
    auto psi = fx::depth(u);
    auto z = fx::z1();
    auto pool = enumerate_pool(u, z.inputs(), psi);
    auto d = psi_d_exact(u, z, pool, psi);
    CHECK(d.value == 2);
    CHECK(is_deterministic(d.tree));
    CHECK(solves(u, d.tree, z, SolveMode::Deterministic).ok);
    CHECK(measure_tree(psi, d.tree) == 2);
    auto a = psi_a_exact(u, z, pool, psi);
    CHECK(a.value == 2);
    CHECK(solves(u, a.tree, z, SolveMode::Nondeterministic).ok);
  }

  TEST_CASE("pi_6 witness z6(2)") {
    auto pi6 = build_pi(6, default_truncation(6, 6));
    auto z = witness_problem(WitnessKind::Z6, 2, 1);
    auto pool = enumerate_pool(pi6.u, z.inputs(), pi6.psi);
    auto d = psi_d_exact(pi6.u, z, pool, pi6.psi);
    auto a = psi_a_exact(pi6.u, z, pool, pi6.psi);
    CHECK(d.value == 4);
    CHECK(a.value == 2);
    CHECK(measure_tree(pi6.psi, a.tree) == 2);
    CHECK(solves(pi6.u, a.tree, z, SolveMode::Nondeterministic).ok);
  }

  TEST_CASE("pi_7 witnesses") {
    auto pi7 = build_pi(7, default_truncation(7, 4));
    auto zt = witness_problem(WitnessKind::Zt7, 4, 1);
    auto pool = enumerate_pool(pi7.u, zt.inputs(), pi7.psi);
    CHECK(psi_a_exact(pi7.u, zt, pool, pi7.psi).value <= 2);
    auto eta = witness_problem(WitnessKind::Eta7, 3, 1);
    CHECK(psi_a_exact(pi7.u, eta, pool, pi7.psi).value == 3);
    auto small = enumerate_pool(pi7.u, eta.inputs(), pi7.psi, 3);
    CHECK_FALSE(brute_force_psi(pi7.u, eta, small, pi7.psi, 2, SolveMode::Nondeterministic).has_value());
    CHECK(brute_force_psi(pi7.u, eta, small, pi7.psi, 3, SolveMode::Nondeterministic) == 3u);
  }

  TEST_CASE("pool context matches the standalone solvers") {
    auto pi6 = build_pi(6, default_truncation(6, 6));
    std::vector<Var> ys{1};
    auto pool = enumerate_pool(pi6.u, ys, pi6.psi);
    PoolContext ctx(pi6.u, ys, pool, pi6.psi);
    for (std::int64_t m = 1; m <= 2; ++m) {
      auto z = witness_problem(WitnessKind::Z6, m, 1);
      CHECK(ctx.covers(z));
      CHECK(ctx.psi_d(z).value == psi_d_exact(pi6.u, z, pool, pi6.psi).value);
      CHECK(ctx.psi_a(z).value == psi_a_exact(pi6.u, z, pool, pi6.psi).value);
    }
  }

  TEST_CASE("zero measure") {
    auto u = fx::s1();
    auto z = fx::z1();
    auto pool = enumerate_pool(u, z.inputs(), Measure::zero());
    CHECK(psi_d_exact(u, z, pool, Measure::zero()).value == 0);
    CHECK(psi_a_exact(u, z, pool, Measure::zero()).value == 0);
  }

  TEST_CASE("random instances agree with the raw-tuple oracles") {
    RandomParams params;
    for (std::uint64_t k = 0; k < 150; ++k) {
      Rng rng(instance_seed(77, k));
      auto inst = random_instance(rng, params);
      auto od = oracle::psi_d(inst.u, inst.z, inst.pool, inst.psi);
      auto oa = oracle::psi_a(inst.u, inst.z, inst.pool, inst.psi);
      REQUIRE(od.has_value());
      REQUIRE(oa.has_value());
      auto d = psi_d_exact(inst.u, inst.z, inst.pool, inst.psi);
      auto a = psi_a_exact(inst.u, inst.z, inst.pool, inst.psi);
      CHECK(d.value == *od);
      CHECK(a.value == *oa);
      CHECK(solves(inst.u, d.tree, inst.z, SolveMode::Deterministic).ok);
      CHECK(solves(inst.u, a.tree, inst.z, SolveMode::Nondeterministic).ok);
      CHECK(measure_tree(inst.psi, d.tree) == d.value);
      CHECK(measure_tree(inst.psi, a.tree) == a.value);
    }
  }
}

TEST_SUITE("solvers") {
  TEST_CASE("witness problems with a nondeterministic gap agree with the oracles") {
    std::vector<Var> ys{1};
    auto pi6 = build_pi(6, default_truncation(6, 4));
    auto pool6 = enumerate_pool(pi6.u, ys, pi6.psi);
    for (std::int64_t m = 1; m <= 2; ++m) {
      auto z = witness_problem(WitnessKind::Z6, m, 1);
      CHECK(psi_d_exact(pi6.u, z, pool6, pi6.psi).value == oracle::psi_d(pi6.u, z, pool6, pi6.psi));
      CHECK(psi_a_exact(pi6.u, z, pool6, pi6.psi).value == oracle::psi_a(pi6.u, z, pool6, pi6.psi));
    }
    auto pi7 = build_pi(7, default_truncation(7, 3));
    auto pool7 = enumerate_pool(pi7.u, ys, pi7.psi);
    for (std::int64_t t = 1; t <= 3; ++t) {
      auto z = witness_problem(WitnessKind::Zt7, t, 1);
      CHECK(psi_d_exact(pi7.u, z, pool7, pi7.psi).value == oracle::psi_d(pi7.u, z, pool7, pi7.psi));
      CHECK(psi_a_exact(pi7.u, z, pool7, pi7.psi).value == oracle::psi_a(pi7.u, z, pool7, pi7.psi));
    }
  }
}
