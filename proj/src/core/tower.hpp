#pragma once

#include "finite_field.hpp"

#include <unordered_map>
#include <vector>

namespace rankmetric {

// F_{q^m} over F_q, realized as a single extension of F_p of degree e*m
// with a cached embedding of F_q. The default basis is the polynomial basis
// 1, g, ..., g^{m-1} of the generator g = x of the top field.
class ExtensionTower {
 public:
  static ExtensionTower make(FieldPtr base, unsigned degree);

  const FieldPtr& base() const noexcept { return base_; }
  const FieldPtr& top() const noexcept { return top_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<Elem>& basis() const noexcept { return basis_; }
  const std::vector<Elem>& dual_basis() const noexcept { return dual_basis_; }

  Elem embed(Elem base_value) const { return embed_[base_value]; }
  // x -> x^q.
  Elem frobenius(Elem x) const { return top_->pow(x, base_->q()); }
  // Sum of the m conjugates of x, returned as an element of the base field.
  Elem trace(Elem x) const;
  // F_q-coordinates of x with respect to basis(), via the dual basis.
  std::vector<Elem> coordinates(Elem x) const;

  // Dual of an arbitrary ordered basis under the trace form.
  std::vector<Elem> dual_of(const std::vector<Elem>& basis) const;

 private:
  ExtensionTower() = default;

  FieldPtr base_;
  FieldPtr top_;
  unsigned degree_ = 0;
  std::vector<Elem> embed_;                   // base value -> top value
  std::unordered_map<Elem, Elem> pullback_;   // top value in F_q -> base value
  std::vector<Elem> basis_;
  std::vector<Elem> dual_basis_;
};

// Checked variant of ExtensionTower::trace; fails with "field mismatch" for
// elements that do not live in the tower's top field.
FieldElement trace_to_base(const ExtensionTower& tower, const FieldElement& x);
std::vector<FieldElement> dual_basis(const ExtensionTower& tower);

}  // namespace rankmetric
