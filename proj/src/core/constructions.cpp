#include "constructions.hpp"

#include "error.hpp"
#include "tower.hpp"

namespace rankmetric {

MrdConstruction build_mrd(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t d) {
  if (!field) fail(ErrorKind::input, "null field");
  if (!(1 <= d && d <= n && n <= m)) fail(ErrorKind::input, "need 1 <= d <= n <= m");
  const ExtensionTower tower = ExtensionTower::make(field, static_cast<unsigned>(m));
  const Field& top = *tower.top();
  const auto& beta = tower.basis();
  const std::size_t k = n - d + 1;

  // conj[l][i] = beta_i^{q^l}
  std::vector<std::vector<Elem>> conj(k, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = beta[i];
    for (std::size_t l = 0; l < k; ++l) {
      conj[l][i] = x;
      x = tower.frobenius(x);
    }
  }

  std::vector<Matrix> gens;
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t t = 0; t < m; ++t) {
      Matrix x(field, n, m);
      for (std::size_t i = 0; i < n; ++i) {
        const Elem image = top.mul(beta[t], conj[l][i]);  // L_u(beta_i), u = beta_t e_l
        for (std::size_t j = 0; j < m; ++j) x.set(i, j, tower.trace(top.mul(beta[j], image)));
      }
      gens.push_back(std::move(x));
    }
  }

  MrdConstruction out{RankMetricCode::from_generators(field, n, m, gens), top.describe(), {}, {}};
  for (auto b : beta) out.basis.push_back(top.format(b));
  for (auto b : tower.dual_basis()) out.dual_basis.push_back(top.format(b));
  if (out.code.dim() != m * k) fail(ErrorKind::internal, "MRD construction lost dimension");
  return out;
}

RankMetricCode build_column_anticode(const Subspace& u, std::size_t m) { return column_support_code(u, m); }

RankMetricCode build_row_anticode(const Subspace& u, std::size_t n) {
  if (u.ambient_dim() != n) fail(ErrorKind::domain, "classification requires square shape (n = m)");
  return row_support_code(u, n);
}

}  // namespace rankmetric
