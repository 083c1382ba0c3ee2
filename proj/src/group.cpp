#include "pgrp/group.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pgrp/error.hpp"
#include "pgrp/fp.hpp"

namespace pgrp {

namespace {

constexpr std::size_t max_perm_degree = 1 << 16;

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

Perm shifted(const Perm& g, std::size_t offset, std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t x = 0; x < degree; ++x) img[x] = static_cast<Point>(x);
  for (std::size_t x = 0; x < g.degree(); ++x) {
    img[offset + x] = static_cast<Point>(offset + g[static_cast<Point>(x)]);
  }
  return Perm(std::move(img));
}

void require_same_prime(const Group& a, const Group& b) {
  if (a.prime() != b.prime()) {
    fail(Errc::argument, "groups over different primes: " + std::to_string(a.prime()) + " and " +
                             std::to_string(b.prime()));
  }
}

}  // namespace

// --- Group -------------------------------------------------------------------------

Group Group::from_dense(DenseGroupPtr dense) {
  Group g;
  g.prime_ = dense->prime();
  g.exponent_ = dense->order_exponent();
  g.dense_ = std::move(dense);
  return g;
}

Group Group::from_perm(PermGroup perm, std::optional<std::vector<Perm>> rank_witness) {
  Group g;
  g.prime_ = perm.prime();
  g.exponent_ = perm.order_exponent();
  g.witness_ = std::move(rank_witness);
  if (perm.order() <= dense_capacity) {
    std::vector<Perm> elems = perm.elements(dense_capacity);
    const auto& base = perm.chain().base();
    std::map<std::vector<Point>, Elem> index;
    std::vector<Point> key(base.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t l = 0; l < base.size(); ++l) key[l] = elems[i][base[l]];
      index.emplace(key, static_cast<Elem>(i));
    }
    const std::size_t n = elems.size();
    std::vector<Elem> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // The product is determined by its base images.
        for (std::size_t l = 0; l < base.size(); ++l) key[l] = elems[j][elems[i][base[l]]];
        table[i * n + j] = index.at(key);
      }
    }
    std::vector<Elem> gens;
    for (const auto& s : perm.generators()) {
      for (std::size_t l = 0; l < base.size(); ++l) key[l] = s[base[l]];
      gens.push_back(index.at(key));
    }
    g.dense_ = DenseGroup::create(perm.prime(), std::move(table), std::move(gens));
    g.element_perms_ = std::move(elems);
  }
  g.perm_ = std::move(perm);
  return g;
}

const DenseGroupPtr& Group::dense() const {
  if (!dense_) {
    fail(Errc::capacity, "group of order " + format_order(prime_, exponent_) +
                             " exceeds dense capacity " + std::to_string(dense_capacity));
  }
  return dense_;
}

const DenseGroupPtr& Group::dense_for(std::string_view op) const {
  if (!dense_) {
    fail(Errc::unsupported_on_engine,
         std::string(op) + " needs the dense engine; group has order " +
             format_order(prime_, exponent_));
  }
  return dense_;
}

PermGroup Group::to_perm() const {
  if (perm_) return *perm_;
  const DenseGroup& d = *dense_;
  std::vector<Perm> gens;
  for (Elem s : d.generators()) gens.push_back(element_perm(s));
  return PermGroup(prime_, d.order(), std::move(gens));
}

Perm Group::element_perm(Elem x) const {
  if (perm_) return element_perms_.at(x);
  const DenseGroup& d = *dense();
  std::vector<Point> img(d.order());
  for (std::size_t y = 0; y < d.order(); ++y) img[y] = d.mul(static_cast<Elem>(y), x);
  return Perm(std::move(img));
}

std::vector<Perm> Group::rank_witness() const {
  if (witness_) return *witness_;
  if (!dense_) return {};
  const Subgroup whole = whole_group(dense_);
  const auto eas = elementary_abelian_subgroups(whole);
  if (eas.empty()) return {};
  // Sorted by order, so the last subgroup has maximal rank.
  std::vector<Perm> out;
  for (Elem x : eas.back().generators()) out.push_back(element_perm(x));
  return out;
}

// --- constructors ------------------------------------------------------------------

Group group_from_coordinates(
    unsigned p, const std::vector<unsigned>& radices,
    const std::function<std::vector<unsigned>(const std::vector<unsigned>&,
                                              const std::vector<unsigned>&)>& mul,
    const std::vector<std::vector<unsigned>>& gens) {
  std::uint64_t n = 1;
  for (unsigned r : radices) {
    n *= r;
    if (n > dense_capacity) {
      fail(Errc::capacity, "constructed group exceeds dense capacity " +
                               std::to_string(dense_capacity));
    }
  }
  auto decode = [&](std::size_t idx) {
    std::vector<unsigned> c(radices.size());
    for (std::size_t k = 0; k < radices.size(); ++k) {
      c[k] = static_cast<unsigned>(idx % radices[k]);
      idx /= radices[k];
    }
    return c;
  };
  auto encode = [&](const std::vector<unsigned>& c) {
    std::size_t idx = 0;
    for (std::size_t k = radices.size(); k-- > 0;) idx = idx * radices[k] + c[k] % radices[k];
    return static_cast<Elem>(idx);
  };
  std::vector<std::vector<unsigned>> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = decode(i);
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = encode(mul(coords[i], coords[j]));
  }
  std::vector<Elem> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(encode(g));
  return Group::from_dense(DenseGroup::create(p, std::move(table), std::move(gen_idx)));
}

Group cyclic(unsigned p, unsigned k) {
  fp::check_prime(p);
  if (k == 0) fail(Errc::argument, "cyclic group needs k >= 1");
  const std::uint64_t n = ipow(p, k);
  if (n > dense_capacity) fail(Errc::capacity, "cyclic group exceeds dense capacity");
  const unsigned m = static_cast<unsigned>(n);
  return group_from_coordinates(
      p, {m}, [m](const auto& a, const auto& b) { return std::vector<unsigned>{(a[0] + b[0]) % m}; },
      {{1}});
}

Group elementary_abelian(unsigned p, unsigned rank) {
  fp::check_prime(p);
  if (rank == 0) fail(Errc::argument, "elementary abelian group needs rank >= 1");
  if (ipow(p, std::min(rank, 64u)) > dense_capacity || rank > 64) {
    fail(Errc::capacity, "elementary abelian group exceeds dense capacity");
  }
  std::vector<std::vector<unsigned>> gens;
  for (unsigned i = 0; i < rank; ++i) {
    std::vector<unsigned> e(rank, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return group_from_coordinates(
      p, std::vector<unsigned>(rank, p),
      [p](const auto& a, const auto& b) {
        std::vector<unsigned> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
        return c;
      },
      gens);
}

Group extraspecial(unsigned p, std::uint64_t order, std::uint64_t exponent) {
  fp::check_prime(p);
  unsigned n = 0;
  for (std::uint64_t o = order; o > 1; o /= p) {
    if (o % p) fail(Errc::argument, "extraspecial order must be a power of p");
    ++n;
  }
  if (n < 3 || n % 2 == 0) fail(Errc::argument, "extraspecial order must be p^(1+2m), m >= 1");
  if (order > dense_capacity) fail(Errc::capacity, "extraspecial group exceeds dense capacity");
  const unsigned m = (n - 1) / 2;
  auto unit = [](std::size_t len, std::size_t at) {
    std::vector<unsigned> v(len, 0);
    v[at] = 1;
    return v;
  };

  if (exponent == p) {
    // Heisenberg coordinates (a_1..a_m, b_1..b_m, c); c picks up a . b'.
    std::vector<std::vector<unsigned>> gens;
    for (unsigned i = 0; i < 2 * m; ++i) gens.push_back(unit(2 * m + 1, i));
    return group_from_coordinates(
        p, std::vector<unsigned>(2 * m + 1, p),
        [p, m](const auto& x, const auto& y) {
          std::vector<unsigned> z(2 * m + 1);
          unsigned dot = 0;
          for (unsigned i = 0; i < m; ++i) dot += x[i] * y[m + i];
          for (unsigned i = 0; i < 2 * m; ++i) z[i] = (x[i] + y[i]) % p;
          z[2 * m] = (x[2 * m] + y[2 * m] + dot) % p;
          return z;
        },
        gens);
  }
  if (exponent == std::uint64_t{p} * p) {
    // M(p^3) = <x, y | y^-1 x y = x^(1+p)> centrally joined with a Heisenberg
    // group of order p^(2m-1); coordinates (i mod p^2, j, a_1.., b_1..).
    const unsigned q = p * p;
    const std::size_t len = 2 + 2 * (m - 1);
    std::vector<unsigned> radices(len, p);
    radices[0] = q;
    std::vector<std::vector<unsigned>> gens;
    for (std::size_t i = 0; i < len; ++i) gens.push_back(unit(len, i));
    return group_from_coordinates(
        p, radices,
        [p, q, m, len](const auto& x, const auto& y) {
          std::vector<unsigned> z(len);
          unsigned dot = 0;
          for (unsigned i = 0; i + 1 < m; ++i) dot += x[2 + i] * y[2 + (m - 1) + i];
          // y^j x^k y^-j = x^(k(1-p)^j) = x^(k(1-jp)) mod p^2.
          const unsigned twist = (q + 1 - (x[1] * p) % q) % q;
          z[0] = (x[0] + y[0] * twist + p * dot) % q;
          z[1] = (x[1] + y[1]) % p;
          for (std::size_t i = 2; i < len; ++i) z[i] = (x[i] + y[i]) % p;
          return z;
        },
        gens);
  }
  fail(Errc::argument, "extraspecial exponent must be p or p^2");
}

Group direct_product(const Group& a, const Group& b) {
  require_same_prime(a, b);
  const unsigned e = a.order_exponent() + b.order_exponent();
  if (a.has_dense() && b.has_dense() && e <= 12 && ipow(a.prime(), e) <= dense_capacity) {
    const DenseGroup& da = *a.dense();
    const DenseGroup& db = *b.dense();
    const std::size_t na = da.order(), nb = db.order(), n = na * nb;
    std::vector<Elem> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Elem x = da.mul(static_cast<Elem>(i % na), static_cast<Elem>(j % na));
        const Elem y = db.mul(static_cast<Elem>(i / na), static_cast<Elem>(j / na));
        table[i * n + j] = static_cast<Elem>(x + na * y);
      }
    }
    std::vector<Elem> gens;
    for (Elem s : da.generators()) gens.push_back(s);
    for (Elem s : db.generators()) gens.push_back(static_cast<Elem>(na * s));
    return Group::from_dense(DenseGroup::create(a.prime(), std::move(table), std::move(gens)));
  }
  const PermGroup pa = a.to_perm();
  const PermGroup pb = b.to_perm();
  const std::size_t degree = pa.degree() + pb.degree();
  if (degree > max_perm_degree) fail(Errc::capacity, "permutation degree too large");
  std::vector<Perm> gens, witness;
  for (const auto& s : pa.generators()) gens.push_back(shifted(s, 0, degree));
  for (const auto& s : pb.generators()) gens.push_back(shifted(s, pa.degree(), degree));
  for (const auto& w : a.rank_witness()) witness.push_back(shifted(w, 0, degree));
  for (const auto& w : b.rank_witness()) witness.push_back(shifted(w, pa.degree(), degree));
  return Group::from_perm(PermGroup(a.prime(), degree, std::move(gens)), std::move(witness));
}

Group wreath(const Group& a, unsigned p) {
  fp::check_prime(p);
  if (p != a.prime()) {
    fail(Errc::argument, "wreath product with C_" + std::to_string(p) + " of a " +
                             std::to_string(a.prime()) + "-group");
  }
  const PermGroup pa = a.to_perm();
  const std::size_t d = pa.degree();
  const std::size_t degree = d * p;
  if (degree > max_perm_degree) fail(Errc::capacity, "permutation degree too large");
  std::vector<Perm> gens;
  for (const auto& s : pa.generators()) gens.push_back(shifted(s, 0, degree));
  std::vector<Point> cycle(degree);
  for (std::size_t blk = 0; blk < p; ++blk) {
    for (std::size_t x = 0; x < d; ++x) {
      cycle[blk * d + x] = static_cast<Point>(((blk + 1) % p) * d + x);
    }
  }
  gens.emplace_back(std::move(cycle));
  // The base group A^p contains p commuting copies of A's witness.
  std::vector<Perm> witness;
  const auto inner = a.rank_witness();
  for (std::size_t blk = 0; blk < p; ++blk) {
    for (const auto& w : inner) witness.push_back(shifted(w, blk * d, degree));
  }
  return Group::from_perm(PermGroup(p, degree, std::move(gens)), std::move(witness));
}

// --- engine-independent queries ------------------------------------------------------

unsigned nilpotency_class(const Group& g) {
  if (g.has_dense()) return nilpotency_class(whole_group(g.dense()));
  return nilpotency_class(g.to_perm());
}

unsigned derived_length(const Group& g) {
  if (g.has_dense()) return static_cast<unsigned>(derived_series(whole_group(g.dense())).size() - 1);
  return static_cast<unsigned>(derived_series(g.to_perm()).size() - 1);
}

bool is_metabelian(const Group& g) { return derived_length(g) <= 2; }

bool is_maximal_class(const Group& g) {
  const unsigned n = g.order_exponent();
  return n >= 2 && nilpotency_class(g) == n - 1;
}

unsigned derived_subgroup_class(const Group& g) {
  if (g.has_dense()) {
    const Subgroup whole = whole_group(g.dense());
    return nilpotency_class(commutator_subgroup(whole, whole));
  }
  const PermGroup p = g.to_perm();
  return nilpotency_class(commutator_subgroup(p, p));
}

Subgroup center(const Group& g) { return center(whole_group(g.dense_for("center"))); }

Chain upper_central_series(const Group& g) {
  return upper_central_series(whole_group(g.dense_for("upper central series")));
}

std::vector<Subgroup> elementary_abelian_subgroups(const Group& g) {
  return elementary_abelian_subgroups(whole_group(g.dense_for("elementary abelian enumeration")));
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  return normal_subgroups(whole_group(g.dense()));
}

RankInfo rank_info(const Group& g) {
  if (g.has_dense()) return {p_rank(whole_group(g.dense())), true};
  const auto witness = g.rank_witness();
  if (witness.empty()) return {0, false};
  const auto check = check_rank_witness(g.to_perm(), witness);
  if (!check.valid) fail(Errc::integrity, "rank witness rejected: " + check.reason);
  return {check.rank, false};
}

std::string format_order(unsigned p, unsigned exponent) {
  return std::to_string(p) + "^" + std::to_string(exponent);
}

}  // namespace pgrp
