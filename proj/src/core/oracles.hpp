#pragma once

// Brute-force reference computations. Deliberately naive: they share no
// code paths with the closed forms or the optimized scans they check.

#include "code_core.hpp"

#include <cstdint>
#include <random>

namespace rankmetric::oracle {

// Every matrix of F_q^{n x m}, in lexicographic order of entries.
std::vector<Matrix> ambient_matrices(const FieldPtr& field, std::size_t n, std::size_t m);

// Codewords as span of the canonical basis, without the scan kernel.
std::vector<Matrix> codewords_naive(const RankMetricCode& c);

RankDistribution distribution_naive(const RankMetricCode& c);

// Histogram of ranks over {Y : <X,Y> = 0 for all X in C}.
RankDistribution dual_distribution(const RankMetricCode& c);

// max_Y min_{X in C} rk(Y - X).
std::size_t covering_radius(const RankMetricCode& c);

RankDistribution translate_distribution(const RankMetricCode& c, const Matrix& offset);

// Number of k-spaces of F_q^N meeting both A = <e_1..e_{N-k}> and a second
// (N-k)-space B with dim(A cap B) = ell nontrivially.
std::uint64_t nu_count(std::size_t ambient, std::size_t k, std::size_t ell, const FieldPtr& field);

// Ordered pairs of u-spaces of F_q^n meeting in dimension i.
std::uint64_t theta_count(std::size_t n, std::size_t u, std::size_t i, const FieldPtr& field);

// Minimum line cover by trying every set of rows and columns.
std::size_t line_cover(const EntrySet& s, std::size_t a, std::size_t b);

// Random code of exactly the given dimension, grown from random generators.
RankMetricCode random_code(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t dim, std::mt19937_64& rng);
Matrix random_matrix(const FieldPtr& field, std::size_t n, std::size_t m, std::mt19937_64& rng);

// Maximum set of positions in S, no two sharing a row or a column.
std::size_t rook_placement(const EntrySet& s, std::size_t a, std::size_t b);

}  // namespace rankmetric::oracle
