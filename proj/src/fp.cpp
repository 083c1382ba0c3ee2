#include "pgrp/fp.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "pgrp/error.hpp"
#include "pgrp/kernels.hpp"

namespace pgrp::fp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    fail(Errc::argument, "p must be an odd prime, got " + std::to_string(p));
  }
  if (p > kernels::max_modulus) {
    fail(Errc::argument, "p = " + std::to_string(p) + " exceeds the supported maximum " +
                             std::to_string(kernels::max_modulus));
  }
}

Residue inverse(Residue a, Residue p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<Residue>(result);
}

Residue reduce(std::int64_t value, Residue p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

// --- Matrix ---------------------------------------------------------------

Matrix::Matrix(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Residue p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : p_(p), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  check_prime(p);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(Errc::dimension_mismatch, "ragged matrix literal");
    for (auto v : r) data_.push_back(reduce(v, p));
  }
}

Matrix Matrix::identity(Residue p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Residue p, std::size_t cols,
                         const std::vector<std::vector<Residue>>& rows) {
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(Errc::dimension_mismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % p;
  }
  return m;
}

bool Matrix::is_zero() const { return kernels::all_zero(data_); }

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::pow(std::uint64_t k) const {
  if (rows_ != cols_) fail(Errc::dimension_mismatch, "pow of a non-square matrix");
  Matrix result = identity(p_, rows_);
  Matrix base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

Matrix Matrix::minus_identity() const {
  if (rows_ != cols_) fail(Errc::dimension_mismatch, "minus_identity of a non-square matrix");
  Matrix m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m(i, i) = (m(i, i) + p_ - 1) % p_;
  return m;
}

Matrix Matrix::stack(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_ || p_ != below.p_) {
    fail(Errc::dimension_mismatch, "stack: column count or prime differs");
  }
  Matrix m(p_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + data_.size());
  return m;
}

Matrix Matrix::concat(const Matrix& right) const {
  if (rows_ != right.rows_ || p_ != right.p_) {
    fail(Errc::dimension_mismatch, "concat: row count or prime differs");
  }
  Matrix m(p_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(row(r).begin(), row(r).end(), m.row(r).begin());
    std::copy(right.row(r).begin(), right.row(r).end(), m.row(r).begin() + cols_);
  }
  return m;
}

std::vector<Residue> Matrix::apply(std::span<const Residue> v) const {
  if (v.size() != rows_) fail(Errc::dimension_mismatch, "vector length differs from rows");
  std::vector<Residue> out(cols_, 0);
  for (std::size_t k = 0; k < rows_; ++k) kernels::axpy_mod(out, row(k), v[k], p_);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) {
    fail(Errc::dimension_mismatch, "matrix product shape or prime mismatch");
  }
  Matrix c(a.p_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      kernels::axpy_mod(out, b.row(k), a(i, k), a.p_);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_) {
    fail(Errc::dimension_mismatch, "matrix sum shape mismatch");
  }
  Matrix c = a;
  kernels::axpy_mod(c.data_, b.data_, 1, a.p_);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_) {
    fail(Errc::dimension_mismatch, "matrix difference shape mismatch");
  }
  Matrix c = a;
  kernels::axpy_mod(c.data_, b.data_, a.p_ - 1, a.p_);
  return c;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os;
}

// --- elimination ------------------------------------------------------------

Echelon rref(Matrix m) {
  const Residue p = m.prime();
  Echelon out;
  std::size_t lead = 0;
  std::vector<Residue> scratch(m.cols());
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(lead).begin());
    }
    const Residue scale = inverse(m(lead, col), p);
    for (auto& x : m.row(lead)) x = static_cast<Residue>(std::uint64_t{x} * scale % p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      kernels::axpy_mod(m.row(r), m.row(lead), p - m(r, col), p);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.form = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

namespace {

// {x : A x = 0} as row vectors, read off the reduced echelon form of A.
Subspace column_kernel(const Matrix& a) {
  const Residue p = a.prime();
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> rows;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) {
      v[e.pivots[i]] = (p - e.form(i, free)) % p;
    }
    rows.push_back(std::move(v));
  }
  return Subspace::row_space(Matrix::from_rows(p, a.cols(), rows));
}

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.prime() != b.prime() || a.ambient_dim() != b.ambient_dim()) {
    fail(Errc::dimension_mismatch, "subspaces live in different ambient spaces");
  }
}

}  // namespace

// --- Subspace ----------------------------------------------------------------

Subspace Subspace::zero(Residue p, std::size_t ambient_dim) {
  Subspace s;
  s.p_ = p;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(p, 0, ambient_dim);
  return s;
}

Subspace Subspace::full(Residue p, std::size_t ambient_dim) {
  Subspace s = zero(p, ambient_dim);
  s.basis_ = Matrix::identity(p, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s = zero(m.prime(), m.cols());
  if (m.rows() == 0) return s;
  Echelon e = rref(m);
  Matrix basis(m.prime(), e.rank, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r) {
    std::copy(e.form.row(r).begin(), e.form.row(r).end(), basis.row(r).begin());
  }
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::vector<Residue> Subspace::reduce(std::span<const Residue> v) const {
  if (v.size() != ambient_) fail(Errc::dimension_mismatch, "vector length differs from ambient");
  std::vector<Residue> w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Residue coeff = w[pivots_[i]];
    if (coeff) kernels::axpy_mod(w, basis_.row(i), p_ - coeff, p_);
  }
  return w;
}

bool Subspace::contains(std::span<const Residue> v) const {
  return kernels::all_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace nullspace(const Matrix& m) { return column_kernel(m); }

Subspace left_kernel(const Matrix& m) { return column_kernel(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::row_space(a.basis().stack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.prime(), a.ambient_dim());
  // Relations y*A + z*B = 0 give the common vectors y*A.
  const Subspace relations = left_kernel(a.basis().stack(b.basis()));
  Matrix ys(a.prime(), relations.dim(), a.dim());
  for (std::size_t r = 0; r < relations.dim(); ++r) {
    auto src = relations.basis().row(r);
    std::copy(src.begin(), src.begin() + a.dim(), ys.row(r).begin());
  }
  return Subspace::row_space(ys * a.basis());
}

Subspace image(const Subspace& s, const Matrix& m) {
  if (s.ambient_dim() != m.rows()) fail(Errc::dimension_mismatch, "image: shape mismatch");
  if (s.dim() == 0) return Subspace::zero(m.prime(), m.cols());
  return Subspace::row_space(s.basis() * m);
}

}  // namespace pgrp::fp
