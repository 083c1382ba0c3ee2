#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pgrp/error.hpp"
#include "pgrp/group.hpp"
#include "pgrp/modrep.hpp"
#include "pgrp/modules.hpp"

using namespace pgrp;
using namespace pgrp::modrep;
using fp::Matrix;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::integrity;
}

Rep jordan3() { return jordan_module(cyclic(3, 1).dense(), {3}); }
Rep jordan2() { return jordan_module(cyclic(3, 1).dense(), {2}); }

// UT(3,3) acting on F_3^3; element index a + 3b + 9c is I + aE01 + bE12 + cE02.
Rep ut33() { return heisenberg_natural_module(extraspecial(3, 27, 3).dense(), 1); }

std::vector<Rep> sample_reps() {
  auto c3 = cyclic(3, 1).dense();
  auto ea2 = elementary_abelian(3, 2).dense();
  auto ut = ut33();
  std::vector<Rep> out{jordan3(), jordan2(), ut, transvection_module(ea2),
                       jordan_module(cyclic(3, 2).dense(), {4}),
                       direct_sum(jordan_module(c3, {2}), jordan_module(c3, {3})),
                       jordan_module(c3, {2, 2})};
  out.push_back(direct_sum(ut, trivial_module(ut.group(), 1)));
  return out;
}

}  // namespace

TEST(Rep, HomCheckRejectsNonHomomorphisms) {
  auto c3 = cyclic(3, 1).dense();
  EXPECT_EQ(code_of([&] { Rep::from_generator_images(c3, {Matrix(3, {{1, 1}, {0, 2}})}); }),
            Errc::representation_invalid);
  auto ea = elementary_abelian(3, 2).dense();
  Matrix a(3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), b(3, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
  EXPECT_EQ(code_of([&] { Rep::from_generator_images(ea, {a, b}); }), Errc::representation_invalid);
  EXPECT_EQ(code_of([&] { Rep::from_generator_images(c3, {}); }), Errc::representation_invalid);
  EXPECT_EQ(code_of([&] { Rep::from_generator_images(c3, {Matrix(5, {{1, 1}, {0, 1}})}); }),
            Errc::representation_invalid);
}

TEST(Rep, EveryPairMultiplies) {
  for (const auto& v : sample_reps()) {
    const auto& g = *v.group();
    EXPECT_TRUE(v.matrix(0).is_identity());
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y)
        ASSERT_EQ(v.matrix(x) * v.matrix(y), v.matrix(g.mul(x, y)));
  }
}

TEST(Modrep, FixedSpaceExamples) {
  auto j = jordan3();
  EXPECT_EQ(fixed_space(j, trivial_subgroup(j.group())).dim(), 3u);
  EXPECT_EQ(fixed_space(j, whole_group(j.group())).dim(), 1u);

  auto ut = ut33();
  auto e = generate(ut.group(), std::vector<Elem>{1, 9});
  auto c = fixed_space(ut, e);
  ASSERT_EQ(c.dim(), 2u);
  EXPECT_TRUE(c.contains(std::vector<fp::Residue>{0, 1, 0}));
  EXPECT_TRUE(c.contains(std::vector<fp::Residue>{0, 0, 1}));

  auto other = whole_group(cyclic(3, 1).dense());
  EXPECT_EQ(code_of([&] { fixed_space(j, other); }), Errc::handle_mismatch);
}

TEST(Modrep, CommutatorSpaceExamples) {
  auto triv = trivial_module(elementary_abelian(3, 2).dense(), 3);
  EXPECT_EQ(commutator_space(triv, whole_group(triv.group())).dim(), 0u);
  auto j = jordan3();
  EXPECT_EQ(iterated_commutator_space(j, 1, 1).dim(), 2u);
  EXPECT_EQ(iterated_commutator_space(j, 1, 2).dim(), 1u);
  EXPECT_EQ(iterated_commutator_space(j, 1, 3).dim(), 0u);
  EXPECT_EQ(code_of([&] { iterated_commutator_space(j, 1, 0); }), Errc::argument);
}

TEST(Modrep, SpacesMatchEnumeration) {
  std::mt19937_64 rng(9);
  for (const auto& v : sample_reps()) {
    if (v.dim() > 6) continue;
    auto subs = oracle::small_generated_subgroups(*v.group(), 2);
    for (const auto& h : subs) {
      auto sub = subgroup_from_members(v.group(), [&] {
        ElementSet s(v.group()->order());
        for (Elem x : h) s.set(x);
        return s;
      }());
      EXPECT_EQ(static_cast<int>(fixed_space(v, sub).dim()), oracle::fixed_dim(v, h));
      EXPECT_EQ(static_cast<int>(commutator_space(v, sub).dim()), oracle::commutator_dim(v, h));
      EXPECT_EQ(j_value(v, sub).exponent,
                oracle::log_p(h.size(), 3) + oracle::fixed_dim(v, h) - static_cast<int>(v.dim()));
    }
  }
}

// (g^p - 1) = (g - 1)^p in characteristic p, hence [V,g^p] = [V,g;p].
TEST(Modrep, FrobeniusIdentity) {
  for (const auto& v : sample_reps()) {
    const auto& g = *v.group();
    for (Elem x = 1; x < g.order(); ++x) {
      EXPECT_EQ(v.shifted(g.pow(x, 3)), v.shifted(x).pow(3));
      EXPECT_EQ(fp::image(fp::Subspace::full(3, v.dim()), v.shifted(g.pow(x, 3))),
                iterated_commutator_space(v, x, 3));
    }
  }
}

TEST(Modrep, JValueExamples) {
  auto j = jordan3();
  EXPECT_EQ(j_value(j, trivial_subgroup(j.group())).exponent, 0);
  EXPECT_EQ(j_value(j, whole_group(j.group())).exponent, -1);
  auto t = transvection_module(elementary_abelian(3, 1).dense());
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(j_value(t, whole_group(t.group())).exponent, 0);
}

TEST(Modrep, QuadraticAndPS) {
  EXPECT_TRUE(is_quadratic(jordan2(), 1));
  auto j = jordan3();
  EXPECT_FALSE(is_quadratic(j, 1));
  EXPECT_TRUE(ps_condition(j, whole_group(j.group())));
  auto j2 = jordan2();
  EXPECT_FALSE(ps_condition(j2, whole_group(j2.group())));
  EXPECT_EQ(code_of([&] { is_quadratic(j, 0); }), Errc::argument);
  EXPECT_FALSE(has_quadratic_in(j, whole_group(j.group())));
  EXPECT_EQ(quadratic_elements(j2, whole_group(j2.group())).size(), 2u);

  for (auto g : {cyclic(3, 1), cyclic(3, 2), extraspecial(3, 27, 3), extraspecial(3, 27, 9),
                 wreath(cyclic(3, 1), 3)}) {
    auto reg = regular_module(g.dense());
    auto z = omega1(center(whole_group(g.dense())));
    EXPECT_TRUE(ps_condition(reg, z));
  }
}

TEST(Modrep, OffenderExamples) {
  auto ut = ut33();
  EXPECT_TRUE(ut.is_faithful());
  auto a = analyze_offenders(ut);
  EXPECT_TRUE(a.is_f_module());
  auto e = generate(ut.group(), std::vector<Elem>{1, 9});
  bool found = false;
  for (const auto& o : a.best)
    if (o.group == e) {
      found = true;
      EXPECT_EQ(o.j.exponent, 1);
    }
  EXPECT_TRUE(found);

  EXPECT_FALSE(is_f_module(jordan3()));
  EXPECT_TRUE(best_offenders(jordan3()).empty());

  auto t = transvection_module(elementary_abelian(3, 1).dense());
  auto off = offenders(t);
  ASSERT_EQ(off.size(), 1u);
  EXPECT_EQ(off[0].j.exponent, 0);

  auto triv = trivial_module(cyclic(3, 1).dense(), 2);
  EXPECT_FALSE(triv.is_faithful());
  EXPECT_EQ(code_of([&] { offenders(triv); }), Errc::faithfulness);
}

// Offenders and best offenders against vector enumeration over every
// elementary abelian subgroup.
TEST(Modrep, OffendersMatchOracle) {
  for (const auto& v : sample_reps()) {
    if (!v.is_faithful() || v.dim() > 6) continue;
    const auto& g = *v.group();
    std::vector<std::vector<Elem>> eas;
    for (const auto& h : oracle::small_generated_subgroups(g, 3))
      if (h.size() > 1 && oracle::is_elementary_abelian(g, h)) eas.push_back(h);
    auto j = [&](const std::vector<Elem>& h) {
      return oracle::log_p(h.size(), 3) + oracle::fixed_dim(v, h) - static_cast<int>(v.dim());
    };
    std::set<std::vector<Elem>> off, best;
    for (const auto& e : eas) {
      if (j(e) < 0) continue;
      off.insert(e);
      bool b = true;
      for (const auto& f : eas)
        if (std::includes(e.begin(), e.end(), f.begin(), f.end()) && j(f) > j(e)) b = false;
      if (b) best.insert(e);
    }
    auto a = analyze_offenders(v);
    std::set<std::vector<Elem>> got_off, got_best;
    for (const auto& o : a.offenders) got_off.insert(o.group.elements());
    for (const auto& o : a.best) got_best.insert(o.group.elements());
    EXPECT_EQ(got_off, off);
    EXPECT_EQ(got_best, best);
  }
}

TEST(Modrep, TimmesfeldReplacement) {
  auto ut = ut33();
  auto e = generate(ut.group(), std::vector<Elem>{1, 9});
  auto r = timmesfeld_replace(ut, e);
  EXPECT_EQ(r.f, e);
  EXPECT_EQ(r.j_f.exponent, 1);

  auto j = jordan3();
  EXPECT_EQ(code_of([&] { timmesfeld_replace(j, whole_group(j.group())); }),
            Errc::not_best_offender);

  for (const auto& v : sample_reps()) {
    if (!v.is_faithful()) continue;
    for (const auto& b : best_offenders(v)) {
      auto rr = timmesfeld_replace(v, b.group);
      EXPECT_TRUE(rr.f.is_subgroup_of(b.group));
      EXPECT_EQ(rr.j_f, rr.j_e);
      if (is_quadratic(v, b.group)) {
        EXPECT_EQ(rr.f, b.group);
      }
    }
  }
}

TEST(Semidirect, Examples) {
  auto one = DenseGroup::create(3, {0});
  auto v = semidirect_group(trivial_module(one, 2));
  auto gv = whole_group(v.dense());
  EXPECT_EQ(gv.order(), 9u);
  EXPECT_TRUE(is_abelian(gv));
  EXPECT_EQ(p_rank(gv), 2u);

  auto g = semidirect_group(jordan3());
  auto s = whole_group(g.dense());
  EXPECT_EQ(g.dense()->order(), 81u);
  EXPECT_FALSE(is_abelian(s));
  EXPECT_EQ(nilpotency_class(s), 3u);
  EXPECT_TRUE(is_maximal_class(s));
  EXPECT_EQ(p_rank(s), 3u);

  Semidirect sd(jordan3());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<fp::Residue> r(0, 2);
  const auto& gamma = *sd.group().dense();
  for (int t = 0; t < 100; ++t) {
    std::vector<fp::Residue> vec{r(rng), r(rng), r(rng)};
    Elem h = static_cast<Elem>(r(rng));
    Elem c = gamma.comm(sd.embed_vector(vec), sd.embed_group(h));
    EXPECT_EQ(sd.group_part(c), 0);
    EXPECT_EQ(sd.vector_part(c), jordan3().shifted(h).apply(vec));
  }

  EXPECT_EQ(code_of([] { semidirect_group(regular_module(extraspecial(3, 27, 3).dense())); }),
            Errc::capacity);
}

TEST(Modules, FactoryExamples) {
  auto reg = regular_module(cyclic(3, 1).dense());
  EXPECT_TRUE(reg.is_faithful());
  EXPECT_EQ(fp::rank(reg.shifted(1)), 2u);
  EXPECT_EQ(fp::rank(reg.shifted(1).pow(2)), 1u);

  auto reg27 = regular_module(extraspecial(3, 27, 3).dense());
  EXPECT_EQ(reg27.dim(), 27u);
  EXPECT_TRUE(reg27.is_faithful());

  // Coset module on a non-normal order-3 subgroup; kernel is the core.
  auto es = extraspecial(3, 27, 3).dense();
  Subgroup h = generate(es, std::vector<Elem>{1});
  ASSERT_FALSE(is_normal(h, whole_group(es)));
  auto cm = coset_module(es, h);
  EXPECT_EQ(cm.dim(), 9u);
  std::vector<Elem> core;
  for (Elem x : h.elements()) {
    bool all = true;
    for (Elem y = 0; y < es->order(); ++y) all = all && h.contains(es->conj(x, y));
    if (all) core.push_back(x);
  }
  EXPECT_EQ(cm.kernel().elements(), core);
  EXPECT_EQ(cm.is_faithful(), core.size() == 1);

  // Coset module on the centre has the centre as kernel.
  auto cz = coset_module(es, center(whole_group(es)));
  EXPECT_EQ(cz.kernel(), center(whole_group(es)));
}

TEST(Modules, SpunFamiliesAreModules) {
  std::mt19937_64 rng(12);
  auto base = regular_module(extraspecial(3, 27, 3).dense());
  for (int t = 0; t < 5; ++t) {
    auto w = random_spun_subspace(base, rng);
    EXPECT_GT(w.dim(), 0u);
    EXPECT_EQ(spin(base, w), w);
    auto sub = submodule(base, w);
    auto quo = quotient(base, w);
    EXPECT_EQ(sub.dim() + quo.dim(), base.dim());
  }
  auto fam = random_spun_family(ut33(), rng, 2);
  for (const auto& r : fam) EXPECT_GT(r.dim(), 0u);

  auto j = jordan3();
  auto line = fp::Subspace::row_space(Matrix(3, {{1, 0, 0}}));
  EXPECT_EQ(code_of([&] { submodule(j, line); }), Errc::argument);
  EXPECT_EQ(spin(j, line).dim(), 3u);
}
