#pragma once

// Type letters, the stored t/l/T tables, rho, the table order, Delta_u and
// classification of finite bound profiles.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctree/zoo.hpp"

namespace ctree {

enum class Letter : std::uint8_t { Alpha, Beta, Gamma, Delta, Epsilon };

inline constexpr std::array<Letter, 5> kLetters = {Letter::Alpha, Letter::Beta, Letter::Gamma, Letter::Delta,
                                                   Letter::Epsilon};

std::string letter_name(Letter x);    // "alpha"
std::string letter_symbol(Letter x);  // UTF-8 Greek letter
Letter parse_letter(std::string_view text);

// Rows and columns indexed i=0, d=1, a=2.
using LetterTable = std::array<std::array<Letter, 3>, 3>;
// (lower letter, upper letter) per cell.
using PairTable = std::array<std::array<std::pair<Letter, Letter>, 3>, 3>;

inline constexpr std::array<char, 3> kParams = {'i', 'd', 'a'};

// k in 1..7.
const LetterTable& upper_table(int k);
const LetterTable& lower_table(int k);
const PairTable& pair_table(int k);

Letter rho(Letter x);
bool table_leq(const LetterTable& lhs, const LetterTable& rhs);

// Covering relation of (t_1..t_7, <=) as (i, j) pairs, sorted.
std::vector<std::pair<int, int>> hasse_diagram();

// v-sequences of the seven families: [2], [2,3], [2,3,4], [2,3,4,7],
// [2,5], [2,5,6], [2,5,6,7].
const std::vector<std::vector<int>>& delta_u_families();

struct DeltaVerdict {
  bool accepted = false;
  std::vector<std::size_t> families;  // indices into delta_u_families()
  std::string reason;
};

DeltaVerdict delta_u_membership(std::span<const int> prefix);

// Block active for n inputs: n_r <= n < n_{r+1} with n_1 = 1.
std::size_t active_block(const TauSequence& tau, std::uint32_t n);

struct PredictedTables {
  int v = 2;
  LetterTable t;
  LetterTable l;
  PairTable pairs;
};

PredictedTables predicted_table(const TauSequence& tau, std::uint32_t n);

struct ProfileValue {
  enum class Kind : std::uint8_t { Defined, Infinity, Undefined };
  Kind kind = Kind::Undefined;
  std::uint64_t value = 0;

  static ProfileValue defined(std::uint64_t v) { return {Kind::Defined, v}; }
  static ProfileValue infinity() { return {Kind::Infinity, 0}; }
  static ProfileValue undefined() { return {Kind::Undefined, 0}; }
  bool operator==(const ProfileValue&) const = default;
};

struct FnProfile {
  bool upper = true;  // U^{bc} or L^{bc}
  int b = 0;
  int c = 0;
  std::vector<ProfileValue> values;  // m = 0..M
  std::string provenance;

  std::string name() const;  // "U^da"
};

struct Hints {
  std::optional<bool> domain_infinite;
  std::optional<bool> bounded;
};

struct TypeVerdict {
  std::vector<Letter> consistent;  // ascending
  std::size_t dom = 0;
  std::size_t dom_plus = 0;
  std::size_t dom_minus = 0;
  std::size_t tail_plus = 0;
  std::size_t tail_minus = 0;
  bool saw_infinity = false;
  std::optional<std::uint64_t> max_value;

  bool contains(Letter x) const;
};

// Letters not refuted by the profile and the hints. The unbounded letters
// are judged on the upper half [ceil(M/2), M] of the window.
TypeVerdict classify_profile(const FnProfile& p, const Hints& hints);

}  // namespace ctree
