#include "finite_field.hpp"

#include "error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rankmetric {

namespace {

using Poly = std::vector<unsigned>;  // low-to-high coefficients over F_p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const unsigned lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
    }
    trim(f);
  }
  return f;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index`.
Poly monic_from_index(unsigned p, unsigned deg, std::uint64_t index) {
  Poly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = static_cast<unsigned>(index % p);
    index /= p;
  }
  f[deg] = 1;
  return f;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool Field::is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

bool Field::is_irreducible(unsigned p, std::span<const unsigned> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 1) return true;
  // Make monic so that trial division by monic factors suffices.
  unsigned lead_inv = 1;
  while ((lead_inv * f.back()) % p != 1) ++lead_inv;
  for (auto& c : f) c = (c * lead_inv) % p;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(p, d, idx), p).empty()) return false;
    }
  }
  return true;
}

FieldPtr Field::make(unsigned p, unsigned e) {
  if (!is_prime(p)) fail(ErrorKind::input, "not prime: " + std::to_string(p));
  if (e < 1) fail(ErrorKind::input, "bad exponent: " + std::to_string(e));
  if (e == 1) return FieldPtr(new Field(p, 1, {}));
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(p, e, idx);
    if (is_irreducible(p, f)) return FieldPtr(new Field(p, e, std::move(f)));
  }
  fail(ErrorKind::internal, "no irreducible polynomial found");
}

FieldPtr Field::make(unsigned p, unsigned e, std::vector<unsigned> modulus) {
  if (!is_prime(p)) fail(ErrorKind::input, "not prime: " + std::to_string(p));
  if (e < 1) fail(ErrorKind::input, "bad exponent: " + std::to_string(e));
  if (e == 1 && (modulus.empty() || modulus.size() == 2)) {
    // A linear modulus defines F_p itself; store the canonical empty form.
    if (modulus.size() == 2 && modulus[1] % p != 1) fail(ErrorKind::input, "modulus must be monic");
    return FieldPtr(new Field(p, 1, {}));
  }
  if (modulus.size() != e + 1) fail(ErrorKind::input, "modulus must have e+1 coefficients");
  for (auto c : modulus) {
    if (c >= p) fail(ErrorKind::input, "modulus coefficient out of range");
  }
  if (modulus.back() != 1) fail(ErrorKind::input, "modulus must be monic");
  if (!is_irreducible(p, modulus)) fail(ErrorKind::input, "modulus is not irreducible");
  return FieldPtr(new Field(p, e, std::move(modulus)));
}

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus) : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q >= (1ULL << 31)) fail(ErrorKind::input, "field too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (e_ > 1 && q_ <= (1U << 16)) build_tables();
}

void Field::build_tables() {
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k > 0) {
      if (k & 1U) r = poly_mul(r, a);
      a = poly_mul(a, a);
      k >>= 1U;
    }
    return r;
  };
  Elem gen = 0;
  for (Elem g = 2; g < q_; ++g) {
    bool primitive = true;
    for (auto f : factors) {
      if (slow_pow(g, order / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  if (gen == 0) fail(ErrorKind::internal, "no primitive element");
  exp_.resize(order);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = poly_mul(x, gen);
  }
}

Elem Field::poly_mul(Elem a, Elem b) const {
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
  }
  for (std::size_t k = prod.size(); k-- > e_;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    const std::size_t shift = k - e_;
    for (unsigned i = 0; i <= e_; ++i) prod[shift + i] = (prod[shift + i] + (p_ - lead) * modulus_[i]) % p_;
  }
  Elem out = 0;
  for (unsigned i = e_; i-- > 0;) out = out * p_ + static_cast<Elem>(prod[i]);
  return out;
}

Elem Field::add(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p_);
  if (p_ == 2) return a ^ b;
  Elem out = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem out = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::mul(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    return exp_[s % (q_ - 1)];
  }
  return poly_mul(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::domain, "inverse of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem r = 1;
  while (k > 0) {
    if (k & 1U) r = mul(r, a);
    a = mul(a, a);
    k >>= 1U;
  }
  return r;
}

Elem Field::from_integer(long long v) const {
  const long long p = p_;
  return static_cast<Elem>(((v % p) + p) % p);
}

std::vector<unsigned> Field::coefficients(Elem a) const {
  std::vector<unsigned> out(e_);
  for (unsigned i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem Field::from_coefficients(std::span<const unsigned> coeffs) const {
  if (coeffs.size() > e_) fail(ErrorKind::input, "too many coefficients");
  Elem out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) fail(ErrorKind::input, "coefficient out of range");
    out = out * p_ + coeffs[i];
  }
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_ << "^" << e_ << "; modulus=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << ")";
  return os.str();
}

std::string Field::format(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  std::string out;
  for (unsigned i = 0; i < e_; ++i) {
    if (i) out += '.';
    out += std::to_string(a % p_);
    a /= p_;
  }
  return out;
}

Elem Field::parse_element(std::string_view text) const {
  std::vector<unsigned> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = text.find('.', start);
    const std::string_view part = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      fail(ErrorKind::input, "bad field element '" + std::string(text) + "'");
    }
    if (v >= p_) fail(ErrorKind::input, "field element '" + std::string(text) + "' out of range");
    coeffs.push_back(v);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (coeffs.size() > e_) fail(ErrorKind::input, "field element '" + std::string(text) + "' has too many coefficients");
  return from_coefficients(coeffs);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) fail(ErrorKind::input, "null field");
  if (value_ >= field_->q()) fail(ErrorKind::input, "element out of range");
}

const Field& FieldElement::check(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) fail(ErrorKind::mismatch, "field mismatch");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, check(o).add(value_, o.value_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, check(o).sub(value_, o.value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, check(o).mul(value_, o.value_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, check(o).div(value_, o.value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }

}  // namespace rankmetric
