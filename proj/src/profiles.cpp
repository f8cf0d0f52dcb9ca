#include "ctree/profiles.hpp"

#include "ctree/error.hpp"

namespace ctree {

std::uint64_t Triple::get(int param) const {
  switch (param) {
    case 0: return i;
    case 1: return d;
    case 2: return a;
  }
  throw Error(ErrorKind::Parse, "parameter index must be 0, 1 or 2");
}

int parse_param(char c) {
  for (int k = 0; k < 3; ++k)
    if (kParams[static_cast<std::size_t>(k)] == c) return k;
  throw Error(ErrorKind::Parse, std::string("unknown parameter '") + c + "'");
}

namespace {

void check(const Family& family, int b, int c, std::uint64_t big_m) {
  if (b < 0 || b > 2 || c < 0 || c > 2) throw Error(ErrorKind::Parse, "parameter index must be 0, 1 or 2");
  if (big_m > family.closed_budget)
    throw Error(ErrorKind::FamilyNotCostClosed, "M=" + std::to_string(big_m) + " exceeds the family budget " +
                                                    std::to_string(family.closed_budget) + " of " +
                                                    family.descriptor);
}

}  // namespace

FnProfile u_profile(const Family& family, int b, int c, std::uint64_t big_m) {
  check(family, b, c, big_m);
  FnProfile p{true, b, c, {}, family.descriptor};
  const auto& flag = family.infinity_from[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
  for (std::uint64_t m = 0; m <= big_m; ++m) {
    if (flag && m >= *flag) {
      p.values.push_back(ProfileValue::infinity());
      continue;
    }
    std::optional<std::uint64_t> best;
    for (const auto& z : family.members)
      if (z.values.get(c) <= m) best = std::max(best.value_or(0), z.values.get(b));
    p.values.push_back(best ? ProfileValue::defined(*best) : ProfileValue::undefined());
  }
  return p;
}

FnProfile l_profile(const Family& family, int b, int c, std::uint64_t big_m) {
  check(family, b, c, big_m);
  FnProfile p{false, b, c, {}, family.descriptor};
  for (std::uint64_t m = 0; m <= big_m; ++m) {
    std::optional<std::uint64_t> best;
    for (const auto& z : family.members)
      if (z.values.get(c) >= m) best = std::min(best.value_or(z.values.get(b)), z.values.get(b));
    p.values.push_back(best ? ProfileValue::defined(*best) : ProfileValue::undefined());
  }
  return p;
}

}  // namespace ctree
