#pragma once

#include "code_core.hpp"
#include "numeric.hpp"

#include <cstddef>

namespace rankmetric {

// W(C) -> W(C^perp) for n x m codes over F_q. The sum of W must be a power
// of q ("not a code size" otherwise); every division must be exact.
RankDistribution transform(const RankDistribution& w, std::size_t n, std::size_t m, const BigInt& q);

// sum_{j<=n-s} W_j [n-j s] == |C|/q^{ms} * sum_{i<=s} Wd_i [n-i s-i].
bool binomial_moment_check(const RankDistribution& w, const RankDistribution& wdual, std::size_t n, std::size_t m, const BigInt& q,
                           std::size_t s);

// W(C^perp) from the triangular system of binomial moments, s = 0..n.
RankDistribution solve_dual_distribution_by_moments(const RankDistribution& w, std::size_t n, std::size_t m, const BigInt& q);

// Rank distribution of any n x m MRD code with minimum distance d.
RankDistribution mrd_distribution(std::size_t n, std::size_t m, std::size_t d, const BigInt& q);

// W_i(C+M) for n - d_dual + 1 <= i <= n, from the prefix
// W_0(C+M), ..., W_{n-d_dual}(C+M) (`lower` may be longer; extra entries are
// ignored). `code_size` is |C|; d_dual = n + 1 when C is the ambient space.
BigNat translate_tail(const RankDistribution& lower, std::size_t n, std::size_t m, const BigInt& q, const BigNat& code_size,
                      std::size_t d_dual, std::size_t i);

// Prefix plus every tail entry.
RankDistribution translate_distribution(const RankDistribution& lower, std::size_t n, std::size_t m, const BigInt& q,
                                        const BigNat& code_size, std::size_t d_dual);

namespace testing {
// Flips the sign of the inner alternating sum in transform(). Only the
// verification suite's mutation check turns this on.
void set_transform_mutation(bool on);
}  // namespace testing

}  // namespace rankmetric
