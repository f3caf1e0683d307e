#include "tower.hpp"

#include "error.hpp"
#include "matrix_space.hpp"

namespace rankmetric {

ExtensionTower ExtensionTower::make(FieldPtr base, unsigned degree) {
  if (!base) fail(ErrorKind::input, "null field");
  if (degree < 1) fail(ErrorKind::input, "bad extension degree");
  ExtensionTower t;
  t.base_ = base;
  t.degree_ = degree;
  t.top_ = Field::make(base->p(), base->e() * degree);
  const Field& top = *t.top_;

  t.embed_.resize(base->q());
  if (base->e() == 1) {
    for (Elem c = 0; c < base->q(); ++c) t.embed_[c] = c;
  } else {
    // Root of the base modulus inside the top field; the first one in
    // encoding order fixes the embedding.
    const auto& g = base->modulus();
    Elem root = 0;
    bool found = false;
    for (Elem a = 0; a < top.q() && !found; ++a) {
      Elem acc = 0;
      for (std::size_t i = g.size(); i-- > 0;) acc = top.add(top.mul(acc, a), top.from_integer(g[i]));
      if (acc == 0) {
        root = a;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::internal, "base modulus has no root in the extension");
    for (Elem b = 0; b < base->q(); ++b) {
      const auto coeffs = base->coefficients(b);
      Elem acc = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = top.add(top.mul(acc, root), top.from_integer(coeffs[i]));
      t.embed_[b] = acc;
    }
  }
  for (Elem b = 0; b < base->q(); ++b) t.pullback_.emplace(t.embed_[b], b);

  const Elem generator = top.e() > 1 ? static_cast<Elem>(top.p()) : 1;
  Elem power = 1;
  for (unsigned i = 0; i < degree; ++i) {
    t.basis_.push_back(power);
    power = top.mul(power, generator);
  }
  t.dual_basis_ = t.dual_of(t.basis_);
  return t;
}

Elem ExtensionTower::trace(Elem x) const {
  Elem acc = x;
  Elem conj = x;
  for (unsigned i = 1; i < degree_; ++i) {
    conj = frobenius(conj);
    acc = top_->add(acc, conj);
  }
  const auto it = pullback_.find(acc);
  if (it == pullback_.end()) fail(ErrorKind::internal, "trace left the base field");
  return it->second;
}

std::vector<Elem> ExtensionTower::coordinates(Elem x) const {
  std::vector<Elem> out(degree_);
  for (unsigned j = 0; j < degree_; ++j) out[j] = trace(top_->mul(x, dual_basis_[j]));
  return out;
}

std::vector<Elem> ExtensionTower::dual_of(const std::vector<Elem>& basis) const {
  const std::size_t m = degree_;
  if (basis.size() != m) fail(ErrorKind::input, "not a basis: expected " + std::to_string(m) + " elements");
  // [Gram | I] -> [I | Gram^{-1}]; the Gram matrix of the trace form is
  // invertible exactly when the input is a basis.
  std::vector<Elem> aug(m * 2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) aug[i * 2 * m + k] = trace(top_->mul(basis[i], basis[k]));
    aug[i * 2 * m + m + i] = 1;
  }
  const auto pivots = rref_in_place(*base_, aug, m, 2 * m);
  if (pivots.size() < m || pivots[m - 1] != m - 1) fail(ErrorKind::input, "not a basis");
  std::vector<Elem> dual(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const Elem c = aug[k * 2 * m + m + j];
      dual[j] = top_->add(dual[j], top_->mul(embed(c), basis[k]));
    }
  }
  return dual;
}

FieldElement trace_to_base(const ExtensionTower& tower, const FieldElement& x) {
  if (!same_field(x.field(), tower.top())) fail(ErrorKind::mismatch, "field mismatch");
  return {tower.base(), tower.trace(x.value())};
}

std::vector<FieldElement> dual_basis(const ExtensionTower& tower) {
  std::vector<FieldElement> out;
  for (auto v : tower.dual_basis()) out.emplace_back(tower.top(), v);
  return out;
}

}  // namespace rankmetric
