#include "pgrp/modules.hpp"

#include <algorithm>
#include <map>

#include "pgrp/error.hpp"

namespace pgrp::modrep {

namespace {

std::vector<fp::Matrix> generator_images(const Rep& v, auto&& fn) {
  std::vector<fp::Matrix> out;
  for (Elem s : v.group()->generators()) out.push_back(fn(v.matrix(s)));
  return out;
}

fp::Matrix permutation_matrix(fp::Residue p, const std::vector<std::size_t>& image) {
  fp::Matrix m(p, image.size(), image.size());
  for (std::size_t i = 0; i < image.size(); ++i) m(i, image[i]) = 1;
  return m;
}

}  // namespace

Rep trivial_module(const DenseGroupPtr& g, std::size_t dim) { return Rep::trivial(g, dim); }

Rep regular_module(const DenseGroupPtr& g) {
  std::vector<fp::Matrix> images;
  for (Elem s : g->generators()) {
    std::vector<std::size_t> image(g->order());
    for (std::size_t y = 0; y < g->order(); ++y) image[y] = g->mul(static_cast<Elem>(y), s);
    images.push_back(permutation_matrix(g->prime(), image));
  }
  return Rep::from_generator_images(g, std::move(images));
}

Rep coset_module(const DenseGroupPtr& g, const Subgroup& h) {
  if (h.group() != g) fail(Errc::handle_mismatch, "subgroup of another group");
  const auto hs = h.elements();
  std::vector<std::size_t> coset(g->order(), SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t y = 0; y < g->order(); ++y) {
    if (coset[y] != SIZE_MAX) continue;
    for (Elem x : hs) coset[g->mul(x, static_cast<Elem>(y))] = count;
    ++count;
  }
  std::vector<std::size_t> rep_of(count);
  for (std::size_t y = g->order(); y-- > 0;) rep_of[coset[y]] = y;
  std::vector<fp::Matrix> images;
  for (Elem s : g->generators()) {
    std::vector<std::size_t> image(count);
    for (std::size_t c = 0; c < count; ++c) image[c] = coset[g->mul(static_cast<Elem>(rep_of[c]), s)];
    images.push_back(permutation_matrix(g->prime(), image));
  }
  return Rep::from_generator_images(g, std::move(images));
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.group() != b.group()) fail(Errc::handle_mismatch, "direct sum over different groups");
  std::vector<fp::Matrix> images;
  const std::size_t n = a.dim() + b.dim();
  for (Elem s : a.group()->generators()) {
    fp::Matrix m(a.prime(), n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.matrix(s)(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.matrix(s)(i, j);
    images.push_back(std::move(m));
  }
  return Rep::from_generator_images(a.group(), std::move(images));
}

fp::Subspace spin(const Rep& v, const fp::Subspace& w) {
  fp::Subspace cur = w;
  for (;;) {
    fp::Subspace next = cur;
    for (Elem s : v.group()->generators()) next = fp::sum(next, fp::image(cur, v.matrix(s)));
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

Rep submodule(const Rep& v, const fp::Subspace& w) {
  for (Elem s : v.group()->generators())
    if (!w.contains(fp::image(w, v.matrix(s))))
      fail(Errc::argument, "subspace is not invariant under the group");
  const auto& basis = w.basis();
  const auto& piv = w.pivots();
  return Rep::from_generator_images(v.group(), generator_images(v, [&](const fp::Matrix& m) {
    fp::Matrix out(v.prime(), w.dim(), w.dim());
    for (std::size_t i = 0; i < w.dim(); ++i) {
      auto row = m.apply(basis.row(i));
      for (std::size_t j = 0; j < w.dim(); ++j) out(i, j) = row[piv[j]];
    }
    return out;
  }));
}

Rep quotient(const Rep& v, const fp::Subspace& w) {
  for (Elem s : v.group()->generators())
    if (!w.contains(fp::image(w, v.matrix(s))))
      fail(Errc::argument, "subspace is not invariant under the group");
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < v.dim(); ++c)
    if (!std::binary_search(w.pivots().begin(), w.pivots().end(), c)) free.push_back(c);
  return Rep::from_generator_images(v.group(), generator_images(v, [&](const fp::Matrix& m) {
    fp::Matrix out(v.prime(), free.size(), free.size());
    for (std::size_t i = 0; i < free.size(); ++i) {
      auto row = w.reduce(m.row(free[i]));
      for (std::size_t j = 0; j < free.size(); ++j) out(i, j) = row[free[j]];
    }
    return out;
  }));
}

Rep jordan_module(const DenseGroupPtr& g, const std::vector<std::size_t>& blocks) {
  if (g->generators().size() != 1) fail(Errc::argument, "Jordan modules need a cyclic group");
  std::size_t n = 0;
  for (std::size_t b : blocks) n += b;
  fp::Matrix m = fp::Matrix::identity(g->prime(), n);
  std::size_t at = 0;
  for (std::size_t b : blocks) {
    for (std::size_t i = 0; i + 1 < b; ++i) m(at + i, at + i + 1) = 1;
    at += b;
  }
  return Rep::from_generator_images(g, {m});
}

Rep transvection_module(const DenseGroupPtr& g) {
  const std::size_t r = g->generators().size();
  std::vector<fp::Matrix> images;
  for (std::size_t i = 0; i < r; ++i) {
    fp::Matrix m = fp::Matrix::identity(g->prime(), r + 1);
    m(0, i + 1) = 1;
    images.push_back(std::move(m));
  }
  return Rep::from_generator_images(g, std::move(images));
}

Rep heisenberg_natural_module(const DenseGroupPtr& g, unsigned m) {
  const unsigned p = g->prime();
  std::vector<fp::Matrix> images;
  for (Elem s : g->generators()) {
    // Coordinates (a_1..a_m, b_1..b_m, c), first least significant.
    std::vector<unsigned> x(2 * m + 1);
    std::size_t idx = s;
    for (auto& c : x) {
      c = static_cast<unsigned>(idx % p);
      idx /= p;
    }
    fp::Matrix mat = fp::Matrix::identity(p, m + 2);
    for (unsigned i = 0; i < m; ++i) {
      mat(0, 1 + i) = x[i];
      mat(1 + i, m + 1) = x[m + i];
    }
    mat(0, m + 1) = x[2 * m];
    images.push_back(std::move(mat));
  }
  return Rep::from_generator_images(g, std::move(images));
}

fp::Subspace random_spun_subspace(const Rep& v, std::mt19937_64& rng) {
  if (v.dim() == 0) return fp::Subspace::zero(v.prime(), 0);
  std::uniform_int_distribution<fp::Residue> coord(0, v.prime() - 1);
  std::vector<fp::Residue> vec(v.dim());
  do {
    for (auto& c : vec) c = coord(rng);
  } while (std::all_of(vec.begin(), vec.end(), [](fp::Residue c) { return c == 0; }));
  return spin(v, fp::Subspace::row_space(fp::Matrix::from_rows(v.prime(), v.dim(), {vec})));
}

std::vector<Rep> random_spun_family(const Rep& v, std::mt19937_64& rng, unsigned depth) {
  std::vector<Rep> out;
  if (depth == 0 || v.dim() == 0) return out;
  fp::Subspace w = random_spun_subspace(v, rng);
  std::vector<Rep> level;
  level.push_back(submodule(v, w));
  if (w.dim() < v.dim()) level.push_back(quotient(v, w));
  for (auto& r : level) {
    auto below = random_spun_family(r, rng, depth - 1);
    out.push_back(std::move(r));
    for (auto& b : below) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace pgrp::modrep
