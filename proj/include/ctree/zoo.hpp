#pragma once

// Witness structures pi_2..pi_7, their lifted copies, direct sums, the
// tau-indexed pairs and the named witness problems.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctree/measure.hpp"
#include "ctree/structure.hpp"

namespace ctree {

// Finite stand-in for an infinite pi_r. Predicate indices run over
// [min_index, max_index]; base values over [span_lo, span_hi].
struct TruncationParams {
  std::int64_t min_index = 0;
  std::int64_t max_index = 0;
  std::int64_t span_lo = 0;
  std::int64_t span_hi = 0;

  bool operator==(const TruncationParams&) const = default;
};

// Largest span materialized for pi_4 (2^span columns).
inline constexpr std::int64_t kMaxPi4Span = 10;

// Span/index choice used by the CLI and the type lab for a given K.
TruncationParams default_truncation(int r, std::int64_t max_index);

struct SmPair {
  StructureInstance u;
  Measure psi;
};

SmPair build_pi(int r, const TruncationParams& trunc);
// c_0..c_T with c_0 = 1, c_i = i * (c_0 + ... + c_{i-1}) + 2.
std::vector<std::uint64_t> ci_schedule(std::size_t t);

SmPair lift_structure(const SmPair& pi, std::uint32_t n);
// Levels must be strictly increasing; throws DuplicateLevels.
SmPair direct_sum(const std::vector<std::pair<std::uint32_t, SmPair>>& levels);

// Unlifted predicate names.
std::string pi_predicate_name(int r, std::int64_t index, bool p_variant = false);
std::string lifted_name(const std::string& name, std::uint32_t n);

struct TauBlock {
  int v = 2;            // table index 2..7
  std::optional<std::uint64_t> w;  // nullopt = infinity
  bool operator==(const TauBlock&) const = default;
};

struct TauSequence {
  std::vector<TauBlock> blocks;
  bool operator==(const TauSequence&) const = default;
  std::string to_string() const;
};

// "2:1,3:inf". Throws InvalidTau on syntax or block-shape errors.
TauSequence parse_tau(std::string_view text);
// Distinct v, finite positive w except the last, v sequence a subsequence
// of 2,3,4,7 or 2,5,6,7.
void validate_tau(const TauSequence& tau);

struct TauBlockInfo {
  int v = 2;
  std::uint32_t level = 1;
  TruncationParams trunc;
};

struct TauPair {
  SmPair pair;
  std::vector<TauBlockInfo> blocks;

  // Index of the block active for n inputs (n_r <= n < n_{r+1}).
  std::size_t active_block(std::uint32_t n) const;
};

TauPair build_tau_pair(const TauSequence& tau, std::int64_t max_index);

enum class WitnessKind { Z5, Z6, Eta7, Zt7, Zbin3 };

WitnessKind parse_witness_kind(std::string_view text);
std::string witness_kind_name(WitnessKind kind);
int witness_host(WitnessKind kind);

// Problem with Y = {x_1..x_n}. With `level`, predicates are the lifted
// copies g^(level) applied to x_1..x_level; otherwise unary g(x_1).
Problem witness_problem(WitnessKind kind, std::int64_t param, std::uint32_t n,
                        std::optional<std::uint32_t> level = std::nullopt);

// Throws MissingPredicate if some symbol of z is absent from u.
void require_predicates(const StructureInstance& u, const Problem& z);

}  // namespace ctree
