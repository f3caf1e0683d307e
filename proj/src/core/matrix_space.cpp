#include "matrix_space.hpp"

#include "error.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace rankmetric {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) fail(ErrorKind::input, "null field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (!field_) fail(ErrorKind::input, "null field");
  if (data_.size() != rows * cols) fail(ErrorKind::input, "entry count does not match shape");
  for (auto v : data_) {
    if (v >= field_->q()) fail(ErrorKind::input, "entry out of range");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t rows, std::size_t cols) {
  Matrix out(std::move(field), rows, cols);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) out.set(i, i, 1);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem v) { return v == 0; });
}

void Matrix::check_compatible(const Matrix& o) const {
  if (!same_field(field_, o.field_)) fail(ErrorKind::mismatch, "field mismatch");
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::mismatch, "shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_compatible(o);
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_compatible(o);
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out(*this);
  for (auto& v : out.data_) v = field_->mul(v, s);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << field_->format(at(i, j));
    os << "\n";
  }
  return os.str();
}

std::vector<std::size_t> rref_in_place(const Field& field, std::vector<Elem>& data, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && data[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) std::swap_ranges(data.begin() + sel * cols, data.begin() + (sel + 1) * cols, data.begin() + r * cols);
    Elem* pivot_row = data.data() + r * cols;
    const Elem inv = field.inv(pivot_row[c]);
    for (std::size_t j = c; j < cols; ++j) pivot_row[j] = field.mul(pivot_row[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* row = data.data() + i * cols;
      const Elem factor = row[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) row[j] = field.sub(row[j], field.mul(factor, pivot_row[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_gf2(std::span<const std::uint64_t> rows) {
  std::vector<std::uint64_t> work(rows.begin(), rows.end());
  std::size_t r = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::uint64_t v = work[i];
    if (v == 0) continue;
    const std::uint64_t low = v & (~v + 1);
    ++r;
    for (std::size_t j = i + 1; j < work.size(); ++j) {
      if (work[j] & low) work[j] ^= v;
    }
  }
  return r;
}

std::size_t rank_generic(const Matrix& x) {
  std::vector<Elem> data(x.entries().begin(), x.entries().end());
  const Field& f = *x.field();
  const std::size_t rows = x.rows();
  const std::size_t cols = x.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && data[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) std::swap_ranges(data.begin() + sel * cols, data.begin() + (sel + 1) * cols, data.begin() + r * cols);
    const Elem inv = f.inv(data[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Elem factor = f.mul(data[i * cols + c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) data[i * cols + j] = f.sub(data[i * cols + j], f.mul(factor, data[r * cols + j]));
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Matrix& x) {
  if (x.field()->q() == 2 && x.cols() <= 64) {
    std::vector<std::uint64_t> rows(x.rows(), 0);
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) {
        if (x.at(i, j)) rows[i] |= std::uint64_t{1} << j;
      }
    }
    return rank_gf2(rows);
  }
  return rank_generic(x);
}

std::size_t rank_distance(const Matrix& x, const Matrix& y) { return rank(x - y); }

FieldElement trace_product(const Matrix& x, const Matrix& y) {
  if (!same_field(x.field(), y.field())) fail(ErrorKind::mismatch, "field mismatch");
  if (x.rows() != y.rows() || x.cols() != y.cols()) fail(ErrorKind::mismatch, "shape mismatch");
  const Field& f = *x.field();
  Elem acc = 0;
  const auto a = x.entries();
  const auto b = y.entries();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return {x.field(), acc};
}

// ---------------------------------------------------------------------------

Subspace::Subspace(FieldPtr field, std::size_t ambient, std::vector<Elem> rows, std::vector<std::size_t> pivots)
    : field_(std::move(field)), ambient_(ambient), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(FieldPtr field, std::size_t ambient_dim, std::span<const std::vector<Elem>> vectors) {
  if (!field) fail(ErrorKind::input, "null field");
  std::vector<Elem> data;
  data.reserve(vectors.size() * ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) fail(ErrorKind::mismatch, "vector length does not match ambient dimension");
    for (auto x : v) {
      if (x >= field->q()) fail(ErrorKind::input, "entry out of range");
    }
    data.insert(data.end(), v.begin(), v.end());
  }
  auto pivots = rref_in_place(*field, data, vectors.size(), ambient_dim);
  data.resize(pivots.size() * ambient_dim);
  return Subspace(std::move(field), ambient_dim, std::move(data), std::move(pivots));
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient_dim) { return Subspace(std::move(field), ambient_dim, {}, {}); }

Subspace Subspace::full(FieldPtr field, std::size_t ambient_dim) {
  std::vector<Elem> rows(ambient_dim * ambient_dim, 0);
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    rows[i * ambient_dim + i] = 1;
    pivots[i] = i;
  }
  return Subspace(std::move(field), ambient_dim, std::move(rows), std::move(pivots));
}

std::vector<std::vector<Elem>> Subspace::basis() const {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

void Subspace::check_compatible(const Subspace& o) const {
  if (!same_field(field_, o.field_)) fail(ErrorKind::mismatch, "field mismatch");
  if (ambient_ != o.ambient_) fail(ErrorKind::mismatch, "ambient dimension mismatch");
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_) fail(ErrorKind::mismatch, "vector length does not match ambient dimension");
  std::vector<Elem> w(v.begin(), v.end());
  const Field& f = *field_;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem factor = w[pivots_[i]];
    if (factor == 0) continue;
    const auto r = row(i);
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(factor, r[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.row(i))) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  check_compatible(other);
  auto vecs = basis();
  auto more = other.basis();
  vecs.insert(vecs.end(), more.begin(), more.end());
  return span(field_, ambient_, vecs);
}

Subspace Subspace::intersection(const Subspace& other) const {
  check_compatible(other);
  return orthogonal_subspace(orthogonal_subspace(*this) + orthogonal_subspace(other));
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < dim(); ++i) {
    os << (i ? "; " : "");
    const auto r = row(i);
    for (std::size_t j = 0; j < ambient_; ++j) os << (j ? " " : "") << field_->format(r[j]);
  }
  os << ">";
  return os.str();
}

Subspace column_space(const Matrix& x) { return row_space(x.transposed()); }

Subspace row_space(const Matrix& x) {
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto all = x.entries();
    rows.emplace_back(all.begin() + i * x.cols(), all.begin() + (i + 1) * x.cols());
  }
  return Subspace::span(x.field(), x.cols(), rows);
}

Subspace orthogonal_subspace(const Subspace& u) {
  const std::size_t a = u.ambient_dim();
  const Field& f = *u.field();
  std::vector<bool> is_pivot(a, false);
  for (auto p : u.pivots()) is_pivot[p] = true;
  std::vector<std::vector<Elem>> vecs;
  for (std::size_t free = 0; free < a; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(a, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < u.dim(); ++i) v[u.pivots()[i]] = f.neg(u.row(i)[free]);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(u.field(), a, vecs);
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t a, std::size_t u) {
  std::vector<std::vector<std::size_t>> out;
  if (u > a) return out;
  std::vector<std::size_t> cur(u);
  for (std::size_t i = 0; i < u; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = u;
    while (i > 0 && cur[i - 1] == a - u + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < u; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> free_positions(std::size_t a, std::span<const std::size_t> pivots) {
  std::vector<bool> is_pivot(a, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t c = pivots[i] + 1; c < a; ++c) {
      if (!is_pivot[c]) out.emplace_back(i, c);
    }
  }
  return out;
}

// Advances the lexicographic odometer; returns false on wrap-around.
bool advance(std::vector<Elem>& digits, Elem q) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

void for_each_subspace_with_pivots(const FieldPtr& field, std::size_t a, std::span<const std::size_t> pivots,
                                   const std::function<void(const Subspace&)>& fn) {
  const auto free = free_positions(a, pivots);
  std::vector<Elem> digits(free.size(), 0);
  std::vector<std::vector<Elem>> rows(pivots.size(), std::vector<Elem>(a, 0));
  do {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      std::fill(rows[i].begin(), rows[i].end(), 0);
      rows[i][pivots[i]] = 1;
    }
    for (std::size_t k = 0; k < free.size(); ++k) rows[free[k].first][free[k].second] = digits[k];
    fn(Subspace::span(field, a, rows));
  } while (advance(digits, field->q()));
}

void for_each_subspace(const FieldPtr& field, std::size_t a, std::size_t u, const std::function<void(const Subspace&)>& fn) {
  for (const auto& pattern : pivot_patterns(a, u)) for_each_subspace_with_pivots(field, a, pattern, fn);
}

SubspaceStream::SubspaceStream(FieldPtr field, std::size_t a, std::size_t u)
    : field_(std::move(field)), a_(a), u_(u), patterns_(pivot_patterns(a, u)) {
  done_ = patterns_.empty();
}

bool SubspaceStream::load_pattern() {
  if (pattern_ >= patterns_.size()) return false;
  free_ = free_positions(a_, patterns_[pattern_]);
  digits_.assign(free_.size(), 0);
  return true;
}

std::optional<Subspace> SubspaceStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    load_pattern();
  } else if (!advance(digits_, field_->q())) {
    ++pattern_;
    if (!load_pattern()) {
      done_ = true;
      return std::nullopt;
    }
  }
  const auto& pivots = patterns_[pattern_];
  std::vector<std::vector<Elem>> rows(pivots.size(), std::vector<Elem>(a_, 0));
  for (std::size_t i = 0; i < pivots.size(); ++i) rows[i][pivots[i]] = 1;
  for (std::size_t k = 0; k < free_.size(); ++k) rows[free_[k].first][free_[k].second] = digits_[k];
  return Subspace::span(field_, a_, rows);
}

}  // namespace rankmetric
