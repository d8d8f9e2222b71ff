#include "osbc/linalg.hpp"

#include <stdexcept>

#include "osbc/error.hpp"

namespace osbc {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad number");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad number");
    std::string t(s[0] == '+' ? s.substr(1) : s);
    return Integer(t, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("signed denominator");
  return make_rational(parse_int(text.substr(0, slash)), parse_int(den_text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged initializer");
    for (long x : r) entries_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) += b(r, c);
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("apply: length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) out[r] += a * v[c];
    }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("product: inner dimensions differ");
  Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (sgn(o(k, c)) != 0) p(r, c) += a * o(k, c);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("sum: shapes differ");
  Matrix s = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] += o.entries_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix s = *this;
  for (auto& x : s.entries_) x = -x;
  return s;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DimensionError("hstack: row counts differ");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw DimensionError("vstack: column counts differ");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          m(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    }
  return m;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(lead, k)) != 0) m(r, k) -= f * m(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  auto e = rref(rows);
  s.basis_ = e.reduced.block(0, 0, e.pivots.size(), rows.cols());
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span(Matrix::identity(ambient_dim));
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionError("contains: length mismatch");
  Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Rational f = r[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) r[c] -= f * basis_(k, c);
  }
  for (const auto& x : r)
    if (sgn(x) != 0) return false;
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(free.size(), m.cols());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(f, free[f]) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(f, e.pivots[r]) = -e.reduced(r, free[f]);
  }
  return Subspace::span(k);
}

Subspace image_of(const Matrix& m) { return Subspace::span(m.transposed()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: ambient differs");
  Matrix stacked = Matrix::hstack(a.basis().transposed(), -b.basis().transposed());
  auto k = kernel_basis(stacked);
  Matrix coeffs = k.basis().block(0, 0, k.dim(), a.dim());
  return Subspace::span(coeffs * a.basis());
}

Vector coordinates_in_span(const Subspace& s, std::span<const Rational> v) {
  if (v.size() != s.ambient_dim()) throw DimensionError("coordinates: length mismatch");
  Vector c(s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) c[k] = v[s.pivots()[k]];
  for (std::size_t col = 0; col < s.ambient_dim(); ++col) {
    Rational x;
    for (std::size_t k = 0; k < s.dim(); ++k)
      if (sgn(c[k]) != 0) x += c[k] * s.basis()(k, col);
    if (x != v[col]) throw NotInSpan("vector is not in the span");
  }
  return c;
}

QuotientMap quotient_structure(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim) throw DimensionError("quotient: ambient differs");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) rest.push_back(c);
  QuotientMap q{Matrix(rest.size(), ambient_dim), Matrix(ambient_dim, rest.size())};
  for (std::size_t i = 0; i < rest.size(); ++i) {
    q.projection(i, rest[i]) = 1;
    for (std::size_t k = 0; k < sub.dim(); ++k)
      q.projection(i, sub.pivots()[k]) = -sub.basis()(k, rest[i]);
    q.section(rest[i], i) = 1;
  }
  return q;
}

std::vector<std::size_t> complex_homology(std::span<const Matrix> differentials) {
  if (differentials.empty()) throw DimensionError("empty differential list needs explicit dims");
  std::vector<std::size_t> dims;
  dims.push_back(differentials[0].rows());
  for (const auto& d : differentials) dims.push_back(d.cols());
  return complex_homology(dims, differentials);
}

std::vector<std::size_t> complex_homology(std::span<const std::size_t> dims,
                                          std::span<const Matrix> differentials) {
  if (dims.size() != differentials.size() + 1) throw DimensionError("homology: dims count");
  std::vector<std::size_t> ranks(differentials.size());
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const auto& d = differentials[k];
    if (d.rows() != dims[k] || d.cols() != dims[k + 1])
      throw DimensionError("homology: map " + std::to_string(k) + " has wrong shape");
    if (k + 1 < differentials.size() && !(d * differentials[k + 1]).is_zero())
      throw NotAComplex("composite at position " + std::to_string(k + 1) + " is nonzero");
    ranks[k] = rank(d);
  }
  std::vector<std::size_t> h(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    std::size_t out_rank = k > 0 ? ranks[k - 1] : 0;
    std::size_t in_rank = k < ranks.size() ? ranks[k] : 0;
    h[k] = dims[k] - out_rank - in_rank;
  }
  return h;
}

}  // namespace osbc
