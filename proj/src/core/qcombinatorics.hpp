#pragma once

#include "numeric.hpp"

#include <cstdint>

namespace rankmetric {

// Gaussian binomial [a b]_q: the number of b-dimensional subspaces of F_q^a.
// Zero whenever a < 0, b < 0 or b > a. Requires q >= 2.
BigNat q_binomial(std::int64_t a, std::int64_t b, const BigInt& q);

// [a b]_q [b c]_q == [a c]_q [a-c a-b]_q, for 0 <= c <= b <= a.
bool q_binomial_identity_check(std::int64_t a, std::int64_t b, std::int64_t c, const BigInt& q);

// Moebius function of the subspace lattice between nested spaces of
// dimensions a <= b: (-1)^(b-a) q^C(b-a,2).
BigInt moebius_coefficient(std::int64_t a, std::int64_t b, const BigInt& q);

// Number of n x m matrices over F_q of rank at most r.
BigNat ball_size(std::int64_t n, std::int64_t m, std::int64_t r, const BigInt& q);

// Number of k-spaces of F_q^N meeting two (N-k)-spaces whose intersection
// has dimension ell, both nontrivially. Closed form valid for
// N-2k <= ell <= N-k only.
BigNat nu(std::int64_t ambient, std::int64_t k, std::int64_t ell, const BigInt& q);

// Number of ordered pairs of u-spaces of F_q^n meeting in dimension i.
BigNat theta(std::int64_t n, std::int64_t u, std::int64_t i, const BigInt& q);

}  // namespace rankmetric
