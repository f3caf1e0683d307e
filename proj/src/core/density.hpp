#pragma once

#include "code_core.hpp"
#include "numeric.hpp"

#include <optional>
#include <string>

namespace rankmetric {

// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

struct CensusOptions {
  std::uint64_t budget = 1000000;  // maximum number of k-subspaces
  unsigned threads = 1;
};

// Exhaustive census over all k-dimensional codes, k = m(n-d+1).
struct Census {
  BigNat total;              // [mn k]_q
  BigNat exact_distance;     // d(C) = d
  BigNat ball_avoiding;      // no nonzero X in C with rk(X) <= d-1
  BigNat common_complement;  // C meets every F(U), dim U = d-1, trivially
  Rational density;          // exact_distance / total
};

// Fails with ErrorKind::budget ("use bounds") beyond the census budget and
// with ErrorKind::internal if the three counts disagree.
Census density_census(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t d, const CensusOptions& opt = {});
Rational density_exact(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t d, const CensusOptions& opt = {});

// Upper bounds on the density; both are 1 when d = 1.
Rational density_bound_cc(const BigInt& q, std::size_t n, std::size_t m, std::size_t d);
Rational density_bound_ball(const BigInt& q, std::size_t n, std::size_t m, std::size_t d);

struct QLimit {
  Rational value;           // lim_{q -> inf} of the density
  std::int64_t exponent;    // density is O(q^exponent)
  std::string description;  // "O(q^-1)"
};
QLimit asymptotic_q_limit(std::size_t n, std::size_t m, std::size_t d);

// sum_{i=0}^{m} (-1)^i / i!
Rational alternating_factorial_sum(std::size_t m);

// prod_{i>=1} (1 - x^i), 0 < x < 1: the partial product over `terms`
// factors and the certified tail P_T (1 - x^{T+1}/(1-x)).
Interval euler_phi_truncated(const Rational& x, std::size_t terms);
// Consecutive partial sums over k <= groups and k <= groups + 1 of the
// pentagonal-number series; they bracket phi(x).
Interval euler_phi_pentagonal(const Rational& x, std::size_t groups);

struct MBounds {
  std::size_t truncation = 0;
  std::size_t precision_bits = 0;
  Interval phi;           // phi(1/q)
  Interval inverse_phi;   // prod q^i/(q^i - 1)
  Interval antrobus;      // phi(1/q)^{q(d-1)(n-d+1)+1}
  Interval common_complement;  // 1 / ([n d-1]_q (1/phi - 1) + 1)
  Rational half_bound;    // ((q-1)(q-2)+1) / (2(q-1)^2)
};
// Limsup bounds as m -> infinity; requires d >= 2 and truncation >= 1.
MBounds asymptotic_m_bounds(const BigInt& q, std::size_t n, std::size_t d, std::size_t truncation);

struct DensityReport {
  BigInt q;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  std::optional<Census> exact;
  Rational bound_cc;
  Rational bound_ball;
  QLimit asymptotic_q;
  // (sum_{i<=m} (-1)^i/i!)^{(d-1)(n-d+1)}, limsup over q; absent for d = 1.
  std::optional<Rational> asymptotic_q_bound;
  std::optional<MBounds> asymptotic_m;  // absent for d = 1
};

// `census` requests the exhaustive count; q must then be a prime power
// below 2^31. Fails with ErrorKind::internal if the census exceeds a bound.
DensityReport density_report(const BigInt& q, std::size_t n, std::size_t m, std::size_t d, bool census, std::size_t truncation = 20,
                             const CensusOptions& opt = {});

}  // namespace rankmetric
