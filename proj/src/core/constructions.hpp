#pragma once

#include "code_core.hpp"

#include <string>
#include <vector>

namespace rankmetric {

struct MrdConstruction {
  RankMetricCode code;
  std::string top_field;                // describe() of F_{q^m}
  std::vector<std::string> basis;       // beta_1..beta_m, formatted in the top field
  std::vector<std::string> dual_basis;  // beta_1*..beta_m*
};

// {X(u) : u in F_{q^m}^k}, k = n - d + 1, with
// X(u)_ij = trace(beta_j * sum_l u_l beta_i^{q^l}) over the tower's
// polynomial basis. Generators are emitted for u = beta_t e_l, ordered by
// (l, t).
MrdConstruction build_mrd(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t d);

// F_q^{n x m}(U) = {X : colsp(X) <= U}, U <= F_q^n.
RankMetricCode build_column_anticode(const Subspace& u, std::size_t m);
// {X : rowsp(X) <= U}, U <= F_q^m; square shapes only.
RankMetricCode build_row_anticode(const Subspace& u, std::size_t n);

}  // namespace rankmetric
