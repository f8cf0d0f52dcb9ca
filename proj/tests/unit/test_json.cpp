#include "doctest.h"

#include "ctree/json_io.hpp"
#include "ctree/solvers.hpp"
#include "ctree/zoo.hpp"
#include "fixtures.hpp"

using namespace ctree;

TEST_SUITE("json") {
  TEST_CASE("atoms accept shorthand and tagged forms") {
    CHECK(atom_from_json(Json(3)) == Atom::base(3));
    CHECK(atom_from_json(Json("(5,1)")) == Atom::lifted(5, 1));
    CHECK(atom_from_json(Json("k1^2")) == Atom::marker(1, 2));
    for (auto a : {Atom::base(-2), Atom::lifted(4, 3), Atom::marker(0, 1)})
      CHECK(atom_from_json(atom_to_json(a)) == a);
  }

  TEST_CASE("structure round trip is byte-identical") {
    auto pi = lift_structure(build_pi(5, default_truncation(5, 2)), 2);
    auto text = dump_canonical(structure_to_json(pi.u));
    auto back = structure_from_json(parse_json(text));
    CHECK(back.carrier() == pi.u.carrier());
    CHECK(dump_canonical(structure_to_json(back)) == text);
    CHECK(text.back() == '\n');
  }

  TEST_CASE("sparse structure forms") {
    auto j = parse_json(R"({
      "carrier": [0, 1, 2],
      "functions": [{"name": "s", "arity": 1, "map": [[[0], 1], [[1], 2], [[2], 0]]}],
      "predicates": [{"name": "p", "arity": 2, "ones": [[0, 1], [2, 2]]}]
    })");
    auto u = structure_from_json(j);
    std::vector<AtomIndex> a{0, 1}, b{1, 0}, c{2};
    CHECK(u.eval(u.predicate("p"), a) == 1);
    CHECK(u.eval(u.predicate("p"), b) == 0);
    CHECK(u.eval(u.function("s"), c) == 0);
  }

  TEST_CASE("problem, measure and tree round trips") {
    auto u = fx::s1();
    auto z = fx::z1();
    auto zj = problem_to_json(z);
    CHECK(problem_from_json(zj) == z);
    CHECK(zj["nu"][1][0] == "10");
    CHECK(zj["nu"][1][1] == Json::array({11}));

    auto psi = fx::depth(u);
    CHECK(measure_from_json(measure_to_json(psi)) == psi);
    CHECK(measure_from_json(measure_to_json(Measure::zero())).is_zero());
    auto tm = Measure::table({{{"a"}, 4}}, Measure::DefaultRule::Length, 0, 1);
    CHECK(measure_from_json(measure_to_json(tm)) == tm);

    auto t = psi_d_exact(u, z, enumerate_pool(u, z.inputs(), psi), psi).tree;
    auto tj = tree_to_json(t);
    CHECK(tree_from_json(tj) == t);
    CHECK(dump_canonical(tree_to_json(tree_from_json(tj))) == dump_canonical(tj));
  }

  TEST_CASE("nu default fills missing signatures") {
    auto z = problem_from_json(parse_json(R"({
      "input_vars": [1],
      "seq": [{"kind": "predicate", "symbol": "l0", "args": [1]}],
      "nu": [["1", [4]]],
      "nu_default": [0]
    })"));
    CHECK(z.nu()(0) == AnswerSet{0});
    CHECK(z.nu()(1) == AnswerSet{4});
  }

  TEST_CASE("errors carry positions and kinds") {
    try {
      parse_json("{\n  \"a\": [1,\n}", "bad.json");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      CHECK(std::string(e.what()).find("bad.json:3:") != std::string::npos);
    }
    auto missing = parse_json(R"({"input_vars": [1], "seq": [{"kind": "predicate", "symbol": "l0", "args": [1]}],
                                  "nu": [["1", [4]]]})");
    CHECK_THROWS_AS(problem_from_json(missing), Error);
    auto empty_set = parse_json(R"({"input_vars": [1], "seq": [], "nu": [["", []]]})");
    CHECK_THROWS_AS(problem_from_json(empty_set), Error);
  }

  TEST_CASE("profile values") {
    CHECK(profile_value_text(ProfileValue::defined(3)) == "3");
    CHECK(profile_value_text(ProfileValue::infinity()) == "INF");
    CHECK(profile_value_text(ProfileValue::undefined()) == "UNDEF");
  }
}
