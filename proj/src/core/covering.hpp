#pragma once

#include "code_core.hpp"

#include <optional>

namespace rankmetric {

// Minimum number of rows and columns of the a x b grid covering S, via
// maximum bipartite matching (Koenig). Positions are 1-based.
std::size_t lambda_cover(const EntrySet& s, std::size_t a, std::size_t b);

// n - d(C^perp) + 1, with d(C^perp) read off transform(W(C)). Undefined for
// the ambient code.
std::size_t dual_distance_bound(const RankMetricCode& c, const EnumOptions& opt = {});
std::size_t dual_distance_bound(const RankMetricCode& c, const RankDistribution& w);

// s(C) = #{1 <= i <= n : W_i(C^perp) > 0}.
std::size_t external_distance_bound(const RankMetricCode& c, const EnumOptions& opt = {});
std::size_t external_distance_bound(const RankMetricCode& c, const RankDistribution& w);

// d - 1 + lambda(([n-d+1] x [m]) \ in(C)). Undefined for the zero code.
std::size_t initial_set_bound(const RankMetricCode& c, const EnumOptions& opt = {});
std::size_t initial_set_bound(const RankMetricCode& c, const RankDistribution& w);

struct CoveringReport {
  std::size_t min_distance = 0;
  std::size_t dual_min_distance = 0;
  std::optional<std::size_t> exact;  // absent when q^{nm} exceeds the budget
  std::optional<std::size_t> dual_distance_bound;      // absent for the ambient code
  std::size_t external_distance_bound = 0;
  std::optional<std::size_t> initial_set_bound;        // absent for the zero code
  std::size_t lower_bound = 0;                          // ceil((d-1)/2), d capped at n
};

// Fails with ErrorKind::internal if any ordering invariant breaks.
CoveringReport covering_report(const RankMetricCode& c, const EnumOptions& opt = {});

}  // namespace rankmetric
