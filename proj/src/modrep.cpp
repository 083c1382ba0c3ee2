#include "pgrp/modrep.hpp"

#include <deque>
#include <string>

#include "pgrp/error.hpp"

namespace pgrp::modrep {

namespace {

void require_rep_group(const Rep& v, const Subgroup& h) {
  if (h.group() != v.group())
    fail(Errc::handle_mismatch, "subgroup does not belong to the module's group");
}

int log_p(std::size_t n, unsigned p) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

Rep Rep::from_generator_images(DenseGroupPtr group, std::vector<fp::Matrix> images,
                               std::vector<Elem> gens) {
  if (!group) fail(Errc::argument, "module needs a group");
  if (gens.empty()) gens = group->generators();
  if (images.size() != gens.size())
    fail(Errc::representation_invalid, "expected " + std::to_string(gens.size()) +
                                           " generator matrices, got " +
                                           std::to_string(images.size()));
  const fp::Residue p = group->prime();
  std::size_t dim = 0;
  if (!images.empty()) dim = images.front().rows();
  for (const auto& m : images) {
    if (m.prime() != p)
      fail(Errc::representation_invalid, "matrix field differs from the group's prime");
    if (m.rows() != dim || m.cols() != dim)
      fail(Errc::dimension_mismatch, "generator matrices must be square of one size");
  }

  Rep rep;
  rep.group_ = group;
  rep.p_ = p;
  rep.dim_ = dim;
  const std::size_t n = group->order();
  rep.mats_.assign(n, fp::Matrix());
  std::vector<bool> known(n, false);
  rep.mats_[0] = fp::Matrix::identity(p, dim);
  known[0] = true;
  std::deque<Elem> queue{0};
  std::size_t reached = 1;
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = group->mul(x, gens[i]);
      fp::Matrix prod = rep.mats_[x] * images[i];
      if (!known[y]) {
        rep.mats_[y] = std::move(prod);
        known[y] = true;
        ++reached;
        queue.push_back(y);
      } else if (!(rep.mats_[y] == prod)) {
        fail(Errc::representation_invalid,
             "generator images do not define a homomorphism (relation fails at element " +
                 std::to_string(y) + ")");
      }
    }
  }
  if (reached != n)
    fail(Errc::representation_invalid, "supplied elements do not generate the group");

  rep.shifted_.reserve(n);
  rep.faithful_ = true;
  for (std::size_t x = 0; x < n; ++x) {
    rep.shifted_.push_back(rep.mats_[x].minus_identity());
    if (x != 0 && rep.shifted_.back().is_zero()) rep.faithful_ = false;
  }
  return rep;
}

Rep Rep::trivial(DenseGroupPtr group, std::size_t dim) {
  if (!group) fail(Errc::argument, "module needs a group");
  Rep rep;
  rep.p_ = group->prime();
  rep.dim_ = dim;
  rep.mats_.assign(group->order(), fp::Matrix::identity(rep.p_, dim));
  rep.shifted_.assign(group->order(), fp::Matrix(rep.p_, dim, dim));
  rep.faithful_ = group->order() == 1;
  rep.group_ = std::move(group);
  return rep;
}

Subgroup Rep::kernel() const {
  ElementSet members(group_->order());
  for (std::size_t x = 0; x < mats_.size(); ++x)
    if (shifted_[x].is_zero()) members.set(static_cast<Elem>(x));
  return subgroup_from_members(group_, members);
}

fp::Subspace fixed_space(const Rep& v, Elem g) {
  return fp::left_kernel(v.shifted(g));
}

fp::Subspace fixed_space(const Rep& v, const Subgroup& h) {
  require_rep_group(v, h);
  if (h.generators().empty()) return fp::Subspace::full(v.prime(), v.dim());
  fp::Matrix m = v.shifted(h.generators().front());
  for (std::size_t i = 1; i < h.generators().size(); ++i) m = m.concat(v.shifted(h.generators()[i]));
  return fp::left_kernel(m);
}

fp::Subspace commutator_space(const Rep& v, const fp::Subspace& w, const Subgroup& h) {
  require_rep_group(v, h);
  fp::Subspace out = fp::Subspace::zero(v.prime(), v.dim());
  for (Elem g : h.generators()) out = fp::sum(out, fp::image(w, v.shifted(g)));
  return out;
}

fp::Subspace commutator_space(const Rep& v, const Subgroup& h) {
  return commutator_space(v, fp::Subspace::full(v.prime(), v.dim()), h);
}

fp::Subspace iterated_commutator_space(const Rep& v, Elem g, unsigned k) {
  if (k == 0) fail(Errc::argument, "iterated commutator needs k >= 1");
  fp::Subspace w = fp::Subspace::full(v.prime(), v.dim());
  for (unsigned i = 0; i < k && w.dim() > 0; ++i) w = fp::image(w, v.shifted(g));
  return w;
}

JValue j_value(const Rep& v, const Subgroup& h) {
  require_rep_group(v, h);
  return {log_p(h.order(), v.prime()) + static_cast<int>(fixed_space(v, h).dim()) -
          static_cast<int>(v.dim())};
}

bool is_quadratic(const Rep& v, Elem g) {
  if (g == 0) fail(Errc::argument, "the identity is not considered for quadratic action");
  const fp::Matrix& s = v.shifted(g);
  bool quadratic = (s * s).is_zero();
  if (quadratic && v.is_faithful() && v.group()->element_order(g) != v.prime())
    fail(Errc::integrity, "faithful quadratic element of order other than p");
  return quadratic;
}

bool is_quadratic(const Rep& v, const Subgroup& e) {
  fp::Subspace w = commutator_space(v, e);
  return commutator_space(v, w, e).dim() == 0;
}

std::vector<Elem> quadratic_elements(const Rep& v, const Subgroup& x) {
  require_rep_group(v, x);
  std::vector<Elem> out;
  for (Elem g : x.elements())
    if (g != 0 && is_quadratic(v, g)) out.push_back(g);
  return out;
}

bool has_quadratic_in(const Rep& v, const Subgroup& x) {
  require_rep_group(v, x);
  for (Elem g : x.elements())
    if (g != 0 && is_quadratic(v, g)) return true;
  return false;
}

bool ps_condition(const Rep& v, const Subgroup& x) {
  require_rep_group(v, x);
  for (Elem g : x.elements()) {
    if (g == 0) continue;
    if (v.shifted(g).pow(v.prime() - 1).is_zero()) return false;
  }
  return true;
}

OffenderAnalysis analyze_offenders(const Rep& v) {
  if (!v.is_faithful()) fail(Errc::faithfulness, "offenders are defined for faithful modules");
  OffenderAnalysis out;
  auto all = elementary_abelian_subgroups(whole_group(v.group()));
  out.elementary.reserve(all.size());
  for (auto& e : all) out.elementary.push_back({std::move(e), {}, false});
  for (auto& o : out.elementary) o.j = j_value(v, o.group);

  // The list is sorted by order, so every proper subgroup of entry i sits
  // before it; the trivial subgroup has j = 0.
  for (std::size_t i = 0; i < out.elementary.size(); ++i) {
    auto& e = out.elementary[i];
    bool best = e.j.exponent >= 0;
    for (std::size_t k = 0; best && k < i; ++k) {
      const auto& f = out.elementary[k];
      if (f.group.order() < e.group.order() && f.group.is_subgroup_of(e.group) &&
          f.j.exponent > e.j.exponent)
        best = false;
    }
    e.best = best;
    if (e.j.exponent >= 0) out.offenders.push_back(e);
  }
  for (const auto& e : out.offenders)
    if (e.best) out.best.push_back(e);
  if (out.offenders.empty() != out.best.empty())
    fail(Errc::integrity, "offenders and best offenders disagree on emptiness");
  return out;
}

std::vector<Offender> offenders(const Rep& v) { return analyze_offenders(v).offenders; }
std::vector<Offender> best_offenders(const Rep& v) { return analyze_offenders(v).best; }
bool is_f_module(const Rep& v) { return analyze_offenders(v).is_f_module(); }

bool is_best_offender(const Rep& v, const Subgroup& e) {
  require_rep_group(v, e);
  if (!v.is_faithful()) fail(Errc::faithfulness, "offenders are defined for faithful modules");
  if (!is_abelian(e) || omega1(e).order() != e.order()) return false;
  JValue je = j_value(v, e);
  if (je.exponent < 0) return false;
  for (const auto& f : elementary_abelian_subgroups(e))
    if (j_value(v, f) > je) return false;
  return true;
}

Replacement timmesfeld_replace(const Rep& v, const Subgroup& e) {
  if (!is_best_offender(v, e)) fail(Errc::not_best_offender, "subgroup is not a best offender");
  const fp::Subspace ve = commutator_space(v, e);
  ElementSet members(v.group()->order());
  for (Elem x : e.elements())
    if (fp::image(ve, v.shifted(x)).dim() == 0) members.set(x);
  Replacement r{e, subgroup_from_members(v.group(), members), j_value(v, e), {}};
  r.j_f = j_value(v, r.f);

  if (!r.f.is_subgroup_of(e)) fail(Errc::integrity, "replacement is not inside E");
  if (!r.f.is_trivial() && !is_quadratic(v, r.f))
    fail(Errc::integrity, "replacement does not act quadratically");
  if (r.j_f != r.j_e) fail(Errc::integrity, "replacement changed the j-value");
  if (!(fixed_space(v, r.f) == fp::sum(ve, fixed_space(v, e))))
    fail(Errc::integrity, "C_V(F) differs from [V,E] + C_V(E)");
  return r;
}

Semidirect::Semidirect(const Rep& v)
    : base_order_(v.group()->order()), dim_(v.dim()), p_(v.prime()) {
  std::size_t vectors = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    vectors *= p_;
    if (vectors * base_order_ > dense_capacity)
      fail(Errc::capacity, "semidirect product exceeds dense capacity");
  }
  const std::size_t n = base_order_ * vectors;
  const DenseGroup& g = *v.group();

  auto decode = [&](std::size_t idx) {
    std::vector<fp::Residue> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      out[i] = static_cast<fp::Residue>(idx % p_);
      idx /= p_;
    }
    return out;
  };
  auto encode = [&](const std::vector<fp::Residue>& vec) {
    std::size_t idx = 0;
    for (std::size_t i = dim_; i-- > 0;) idx = idx * p_ + vec[i];
    return idx;
  };

  // act[w * |G| + h] = index of w * matrix(h)
  std::vector<std::size_t> act(vectors * base_order_);
  for (std::size_t w = 0; w < vectors; ++w) {
    auto vec = decode(w);
    for (std::size_t h = 0; h < base_order_; ++h)
      act[w * base_order_ + h] = encode(v.matrix(static_cast<Elem>(h)).apply(vec));
  }
  std::vector<std::size_t> addv(vectors * vectors);
  for (std::size_t a = 0; a < vectors; ++a) {
    auto va = decode(a);
    for (std::size_t b = 0; b < vectors; ++b) {
      auto vb = decode(b);
      for (std::size_t i = 0; i < dim_; ++i) vb[i] = (vb[i] + va[i]) % p_;
      addv[a * vectors + b] = encode(vb);
    }
  }

  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t gx = x % base_order_, vx = x / base_order_;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t gy = y % base_order_, vy = y / base_order_;
      std::size_t gz = g.mul(static_cast<Elem>(gx), static_cast<Elem>(gy));
      std::size_t vz = addv[act[vx * base_order_ + gy] * vectors + vy];
      table[x * n + y] = static_cast<Elem>(gz + base_order_ * vz);
    }
  }
  std::vector<Elem> gens;
  for (Elem s : g.generators()) gens.push_back(s);
  for (std::size_t i = 0, unit = 1; i < dim_; ++i, unit *= p_)
    gens.push_back(static_cast<Elem>(base_order_ * unit));
  group_ = Group::from_dense(DenseGroup::create(p_, std::move(table), std::move(gens)));

  // Inside the semidirect product the group commutator [v,g] is v(g-1), and
  // iterating it p times lands in V(g-1)^p.
  const DenseGroup& gamma = *group_.dense();
  for (std::size_t w = 0; w < vectors; ++w) {
    auto vec = decode(w);
    Elem vw = embed_vector(vec);
    for (std::size_t h = 0; h < base_order_; ++h) {
      Elem gh = embed_group(static_cast<Elem>(h));
      auto expected = v.shifted(static_cast<Elem>(h)).apply(vec);
      Elem c = gamma.comm(vw, gh);
      if (c != embed_vector(expected))
        fail(Errc::integrity, "semidirect commutator disagrees with v(g-1)");
      for (unsigned k = 1; k < p_; ++k) {
        c = gamma.comm(c, gh);
        expected = v.shifted(static_cast<Elem>(h)).apply(expected);
      }
      if (c != embed_vector(expected))
        fail(Errc::integrity, "iterated semidirect commutator disagrees with v(g-1)^p");
    }
  }
}

Elem Semidirect::embed_group(Elem g) const { return g; }

Elem Semidirect::embed_vector(std::span<const fp::Residue> v) const {
  if (v.size() != dim_) fail(Errc::dimension_mismatch, "vector length differs from module dimension");
  std::size_t idx = 0;
  for (std::size_t i = dim_; i-- > 0;) idx = idx * p_ + v[i] % p_;
  return static_cast<Elem>(idx * base_order_);
}

std::vector<fp::Residue> Semidirect::vector_part(Elem x) const {
  std::size_t idx = x / base_order_;
  std::vector<fp::Residue> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i] = static_cast<fp::Residue>(idx % p_);
    idx /= p_;
  }
  return out;
}

Elem Semidirect::group_part(Elem x) const { return static_cast<Elem>(x % base_order_); }

Group semidirect_group(const Rep& v) { return Semidirect(v).group(); }

}  // namespace pgrp::modrep
