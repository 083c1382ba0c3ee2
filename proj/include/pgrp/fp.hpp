#pragma once

// Exact linear algebra over the prime field F_p. Vectors are rows and
// matrices act on the right: v * M.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace pgrp::fp {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);
/// Throws Errc::argument unless p is an odd prime the kernels can handle.
void check_prime(std::uint64_t p);

Residue inverse(Residue a, Residue p);
Residue reduce(std::int64_t value, Residue p);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Residue p, std::size_t rows, std::size_t cols);
  Matrix(Residue p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(Residue p, std::size_t n);
  static Matrix from_rows(Residue p, std::size_t cols,
                          const std::vector<std::vector<Residue>>& rows);

  Residue prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix pow(std::uint64_t k) const;
  Matrix minus_identity() const;
  /// Rows of this matrix followed by the rows of `below`.
  Matrix stack(const Matrix& below) const;
  /// Columns of this matrix followed by the columns of `right`.
  Matrix concat(const Matrix& right) const;

  /// v * M for a row vector v.
  std::vector<Residue> apply(std::span<const Residue> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  Residue p_ = 3;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct Echelon {
  Matrix form;                       // reduced row-echelon form, zero rows kept
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// A subspace of F_p^n held as a reduced row-echelon basis without zero rows.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Residue p, std::size_t ambient_dim);
  static Subspace full(Residue p, std::size_t ambient_dim);
  static Subspace row_space(const Matrix& m);

  Residue prime() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Residue> v) const;
  bool contains(const Subspace& other) const;
  /// v minus its projection along the basis pivots; zero iff v lies in the span.
  std::vector<Residue> reduce(std::span<const Residue> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Residue p_ = 3;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : v * m^T = 0}, the kernel of m acting on column vectors.
Subspace nullspace(const Matrix& m);
/// {v : v * m = 0}.
Subspace left_kernel(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {v * m : v in s}.
Subspace image(const Subspace& s, const Matrix& m);

}  // namespace pgrp::fp
