#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pgrp/error.hpp"
#include "pgrp/fp.hpp"

using namespace pgrp;
using fp::Matrix;
using fp::Subspace;

namespace {

Matrix random_matrix(std::mt19937_64& rng, fp::Residue p, std::size_t r, std::size_t c,
                     int zero_bias = 0) {
  std::uniform_int_distribution<int> d(-zero_bias, static_cast<int>(p) - 1);
  Matrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<fp::Residue>(std::max(0, d(rng)));
  return m;
}

Subspace unit_span(std::size_t n, std::initializer_list<std::size_t> at) {
  Matrix m(3, at.size(), n);
  std::size_t r = 0;
  for (auto c : at) m(r++, c) = 1;
  return Subspace::row_space(m);
}

}  // namespace

TEST(Fp, PrimeChecks) {
  EXPECT_NO_THROW(fp::check_prime(3));
  EXPECT_NO_THROW(fp::check_prime(4093));
  EXPECT_THROW(fp::check_prime(2), Error);
  EXPECT_THROW(fp::check_prime(9), Error);
  EXPECT_THROW(fp::check_prime(4099), Error);
  EXPECT_EQ(fp::inverse(2, 5), 3u);
  EXPECT_EQ(fp::reduce(-1, 7), 6u);
}

TEST(Fp, RrefExamples) {
  auto id = fp::rref(Matrix::identity(3, 3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.form, Matrix::identity(3, 3));

  auto z = fp::rref(Matrix(3, 2, 2));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.form.is_zero());

  auto r = fp::rref(Matrix(3, {{1, 2}, {2, 1}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.form(0, 0), 1u);
  EXPECT_EQ(r.form(0, 1), 2u);
  EXPECT_EQ(r.form(1, 0), 0u);
  EXPECT_EQ(r.form(1, 1), 0u);
}

TEST(Fp, RrefIsIdempotentAndCanonical) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const fp::Residue p = (t % 3 == 0) ? 3 : (t % 3 == 1 ? 5 : 7);
    Matrix m = random_matrix(rng, p, 1 + t % 6, 1 + (t * 7) % 6, 3);
    auto e = fp::rref(m);
    auto e2 = fp::rref(e.form);
    EXPECT_EQ(e.form, e2.form);
    EXPECT_EQ(e.rank, e2.rank);
    for (std::size_t i = 1; i < e.pivots.size(); ++i) EXPECT_LT(e.pivots[i - 1], e.pivots[i]);
    for (std::size_t i = 0; i < e.rank; ++i)
      for (std::size_t k = 0; k < e.rank; ++k)
        EXPECT_EQ(e.form(k, e.pivots[i]), k == i ? 1u : 0u);
  }
}

TEST(Fp, NullspaceExamples) {
  EXPECT_EQ(fp::nullspace(Matrix(3, 2, 2)).dim(), 2u);
  EXPECT_EQ(fp::nullspace(Matrix::identity(3, 2)).dim(), 0u);
  Matrix n(3, {{0, 1}, {0, 0}});  // J_2(1) - I
  auto k = fp::nullspace(n);
  ASSERT_EQ(k.dim(), 1u);
  // Oracle: count vectors with v * n^T = 0 directly.
  int count = 0;
  for (const auto& v : oracle::all_vectors(3, 2)) count += fp::Subspace::zero(3, 2).contains(n.transpose().apply(v));
  EXPECT_EQ(count, 3);
}

TEST(Fp, NullspaceVectorsAnnihilateAndExtensionBreaks) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    Matrix m = random_matrix(rng, 3, 1 + t % 5, 2 + t % 5, 2);
    Subspace k = fp::nullspace(m);
    EXPECT_EQ(k.dim(), m.cols() - fp::rank(m));
    Matrix mt = m.transpose();
    for (std::size_t r = 0; r < k.dim(); ++r) {
      auto img = mt.apply(k.basis().row(r));
      for (auto x : img) EXPECT_EQ(x, 0u);
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::vector<fp::Residue> e(m.cols(), 0);
      e[c] = 1;
      if (k.contains(e)) continue;
      auto img = mt.apply(e);
      EXPECT_FALSE(std::all_of(img.begin(), img.end(), [](auto x) { return x == 0; }));
    }
  }
}

TEST(Fp, SumIntersectExamples) {
  Subspace x = unit_span(3, {0, 2});
  EXPECT_EQ(fp::sum(x, Subspace::zero(3, 3)), x);
  EXPECT_EQ(fp::intersect(x, Subspace::full(3, 3)), x);
  Subspace a = unit_span(3, {0}), b = unit_span(3, {1});
  EXPECT_EQ(fp::sum(a, b).dim(), 2u);
  EXPECT_EQ(fp::intersect(a, b).dim(), 0u);
  EXPECT_THROW(fp::sum(a, Subspace::zero(3, 4)), Error);
  EXPECT_THROW(fp::intersect(a, Subspace::zero(3, 4)), Error);
}

TEST(Fp, ModularDimensionLaw) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    Subspace a = Subspace::row_space(random_matrix(rng, 3, 1 + t % 4, n, 2));
    Subspace b = Subspace::row_space(random_matrix(rng, 3, 1 + (t / 4) % 4, n, 2));
    Subspace s = fp::sum(a, b), i = fp::intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(b));
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
  }
}

TEST(Fp, IntersectAgreesWithEnumeration) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    Subspace a = Subspace::row_space(random_matrix(rng, 3, 2, 4, 1));
    Subspace b = Subspace::row_space(random_matrix(rng, 3, 2, 4, 1));
    std::size_t count = 0;
    for (const auto& v : oracle::all_vectors(3, 4)) count += a.contains(v) && b.contains(v);
    EXPECT_EQ(oracle::log_p(count, 3), static_cast<int>(fp::intersect(a, b).dim()));
  }
}

TEST(Fp, MatrixArithmetic) {
  Matrix j(5, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  EXPECT_TRUE(j.pow(5).is_identity());
  EXPECT_FALSE(j.pow(4).is_identity());
  EXPECT_TRUE((j.minus_identity().pow(3)).is_zero());
  EXPECT_EQ(j * Matrix::identity(5, 3), j);
  EXPECT_EQ((j + j) - j, j);
  auto v = j.apply(std::vector<fp::Residue>{1, 0, 0});
  EXPECT_EQ(v, (std::vector<fp::Residue>{1, 1, 0}));
  EXPECT_THROW(j * Matrix(5, 2, 2), Error);
}
