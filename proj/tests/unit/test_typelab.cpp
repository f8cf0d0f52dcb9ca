#include "doctest.h"

#include <set>

#include "ctree/typelab.hpp"
#include "oracles.hpp"

using namespace ctree;

namespace {

std::string row_text(const LetterTable& t) {
  std::string out;
  for (int b = 0; b < 3; ++b) {
    if (b) out += '|';
    for (int c = 0; c < 3; ++c) out += oracle::letter_char(static_cast<int>(t[b][c]));
  }
  return out;
}

std::string pair_text(const PairTable& t) {
  std::string out;
  for (int b = 0; b < 3; ++b) {
    if (b) out += '|';
    for (int c = 0; c < 3; ++c) {
      if (c) out += ' ';
      out += oracle::letter_char(static_cast<int>(t[b][c].first));
      out += oracle::letter_char(static_cast<int>(t[b][c].second));
    }
  }
  return out;
}

FnProfile profile(std::vector<ProfileValue> values) {
  FnProfile p;
  p.upper = true;
  p.b = 1;
  p.c = 0;
  p.values = std::move(values);
  return p;
}

}  // namespace

TEST_SUITE("typelab") {
  TEST_CASE("letters") {
    for (auto x : kLetters) CHECK(parse_letter(letter_name(x)) == x);
    CHECK(letter_name(Letter::Gamma) == "gamma");
    CHECK(rho(Letter::Alpha) == Letter::Epsilon);
    CHECK(rho(Letter::Beta) == Letter::Delta);
    CHECK(rho(Letter::Gamma) == Letter::Gamma);
    for (auto x : kLetters) CHECK(rho(rho(x)) == x);
    CHECK_THROWS_AS(parse_letter("omega"), Error);
  }

  TEST_CASE("stored tables match the typed-in listings") {
    for (int k = 1; k <= 7; ++k) {
      CAPTURE(k);
      CHECK(row_text(upper_table(k)) == oracle::kUpperText[static_cast<std::size_t>(k - 1)]);
      CHECK(row_text(lower_table(k)) == oracle::kLowerText[static_cast<std::size_t>(k - 1)]);
      CHECK(pair_text(pair_table(k)) == oracle::kPairText[static_cast<std::size_t>(k - 1)]);
    }
    CHECK_THROWS_AS(upper_table(0), Error);
    CHECK_THROWS_AS(upper_table(8), Error);
  }

  TEST_CASE("duality and pairing") {
    for (int k = 1; k <= 7; ++k)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          CHECK(lower_table(k)[b][c] == rho(upper_table(k)[c][b]));
          CHECK(pair_table(k)[b][c].first == lower_table(k)[b][c]);
          CHECK(pair_table(k)[b][c].second == upper_table(k)[b][c]);
        }
  }

  TEST_CASE("order") {
    for (int k = 1; k <= 7; ++k) CHECK(table_leq(upper_table(1), upper_table(k)));
    CHECK(table_leq(upper_table(3), upper_table(4)));
    CHECK_FALSE(table_leq(upper_table(4), upper_table(5)));
    CHECK_FALSE(table_leq(upper_table(3), upper_table(5)));
    CHECK_FALSE(table_leq(upper_table(5), upper_table(3)));
    std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 7}, {5, 6}, {6, 7}};
    CHECK(hasse_diagram() == edges);
  }

  TEST_CASE("delta_u membership") {
    std::vector<int> ok{2, 2, 3};
    auto v = delta_u_membership(ok);
    CHECK(v.accepted);
    CHECK(std::set<std::size_t>(v.families.begin(), v.families.end()) == std::set<std::size_t>{1, 2, 3});
    std::vector<int> back{3, 2};
    CHECK_FALSE(delta_u_membership(back).accepted);
    std::vector<int> mixed{2, 5, 4};
    auto m = delta_u_membership(mixed);
    CHECK_FALSE(m.accepted);
    CHECK_FALSE(m.reason.empty());
    std::vector<int> one{1, 2};
    CHECK_FALSE(delta_u_membership(one).accepted);
    CHECK(delta_u_families().size() == 7);
  }

  TEST_CASE("predicted tables") {
    auto tau = parse_tau("2:1,3:inf");
    CHECK(predicted_table(tau, 1).v == 2);
    CHECK(predicted_table(tau, 5).v == 3);
    CHECK(predicted_table(tau, 5).t == upper_table(3));
    auto p = predicted_table(parse_tau("5:inf"), 1);
    CHECK(p.v == 5);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) CHECK(p.pairs[b][c] == std::make_pair(p.l[b][c], p.t[b][c]));
    CHECK(active_block(parse_tau("2:2,5:1,6:inf"), 3) == 1);
  }

  TEST_CASE("classification") {
    auto inf = profile({ProfileValue::defined(0), ProfileValue::infinity(), ProfileValue::infinity()});
    CHECK(classify_profile(inf, {false, std::nullopt}).consistent == std::vector<Letter>{Letter::Epsilon});
    CHECK_THROWS_AS(classify_profile(inf, {std::nullopt, true}), Error);

    std::vector<ProfileValue> diag, zero;
    for (std::uint64_t m = 0; m <= 8; ++m) {
      diag.push_back(ProfileValue::defined(m));
      zero.push_back(ProfileValue::defined(0));
    }
    auto g = classify_profile(profile(diag), {true, false});
    CHECK(g.consistent == std::vector<Letter>{Letter::Gamma});
    CHECK(g.dom == 9);
    CHECK(g.dom_plus == 9);
    CHECK(g.dom_minus == 9);
    CHECK(classify_profile(profile(zero), {true, true}).consistent == std::vector<Letter>{Letter::Alpha});

    std::vector<ProfileValue> doubled;
    for (std::uint64_t m = 0; m <= 8; ++m) doubled.push_back(ProfileValue::defined(2 * m + 1));
    CHECK(classify_profile(profile(doubled), {true, false}).consistent == std::vector<Letter>{Letter::Delta});

    auto open = classify_profile(profile(zero), {});
    CHECK(open.contains(Letter::Alpha));
    CHECK(open.contains(Letter::Epsilon));
    CHECK_FALSE(open.consistent.empty());
  }
}
