#pragma once

// Bound profiles U^{bc} / L^{bc} over a finite family of evaluated problems.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctree/typelab.hpp"

namespace ctree {

// Parameter indices: 0 = psi^i, 1 = psi^d, 2 = psi^a.
struct Triple {
  std::uint64_t i = 0;
  std::uint64_t d = 0;
  std::uint64_t a = 0;

  std::uint64_t get(int param) const;
  bool operator==(const Triple&) const = default;
};

struct FamilyMember {
  Triple values;
  std::string label;
};

struct Family {
  std::string descriptor;
  std::vector<FamilyMember> members;
  // U^{bc}(m) is infinite for m >= infinity_from[b][c].
  std::array<std::array<std::optional<std::uint64_t>, 3>, 3> infinity_from{};
  // Largest M for which the family is complete.
  std::uint64_t closed_budget = 0;
};

// Throws FamilyNotCostClosed when M exceeds the family's closed budget.
FnProfile u_profile(const Family& family, int b, int c, std::uint64_t big_m);
FnProfile l_profile(const Family& family, int b, int c, std::uint64_t big_m);

int parse_param(char c);

}  // namespace ctree
