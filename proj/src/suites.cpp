#include "pgrp/suites.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "pgrp/catalog.hpp"
#include "pgrp/error.hpp"
#include "pgrp/modules.hpp"
#include "pgrp/oliver.hpp"

namespace pgrp::suites {

using modrep::Rep;

std::vector<std::string> SuiteResult::properties() const {
  std::vector<std::string> out;
  for (const auto& r : records)
    if (std::find(out.begin(), out.end(), r.property) == out.end()) out.push_back(r.property);
  return out;
}

Counts SuiteResult::counts(std::string_view property) const {
  Counts c;
  for (const auto& r : records) {
    if (r.property != property) continue;
    switch (r.status) {
      case Status::pass: ++c.pass; break;
      case Status::fail: ++c.fail; break;
      case Status::vacuous: ++c.vacuous; break;
    }
  }
  return c;
}

Counts SuiteResult::totals() const {
  Counts c;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::pass: ++c.pass; break;
      case Status::fail: ++c.fail; break;
      case Status::vacuous: ++c.vacuous; break;
    }
  }
  return c;
}

std::size_t SuiteResult::instances(std::string_view property, Status status) const {
  std::set<std::string> ids;
  for (const auto& r : records)
    if (r.property == property && r.status == status) ids.insert(r.instance);
  return ids.size();
}

std::size_t SuiteResult::instances() const {
  std::set<std::string> ids;
  for (const auto& r : records) ids.insert(r.instance);
  return ids.size();
}

const std::string* SuiteResult::note(std::string_view key) const {
  for (const auto& [k, v] : notes)
    if (k == key) return &v;
  return nullptr;
}

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void check(const std::string& instance, const std::string& property, bool ok,
             const std::string& detail = {}) {
    r_.records.push_back({instance, property, ok ? Status::pass : Status::fail, ok ? "" : detail});
  }
  void vacuous(const std::string& instance, const std::string& property, const std::string& why) {
    r_.records.push_back({instance, property, Status::vacuous, why});
  }
  void note(const std::string& key, const std::string& value) { r_.notes.emplace_back(key, value); }
  void note(const std::string& key, std::size_t value) { note(key, std::to_string(value)); }

  // Runs `fn`; a library error becomes a failed record instead of aborting the suite.
  void guarded(const std::string& instance, const std::string& property,
               const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      check(instance, property, false, std::string("error: ") + e.what());
    }
  }

 private:
  SuiteResult& r_;
};

struct NamedGroup {
  std::string name;
  Group group;
};

struct Instance {
  std::string id;
  Rep v;
};

struct Catalog {
  std::vector<NamedGroup> dense;
  std::vector<NamedGroup> perm;
  std::vector<Instance> modules;
};

Catalog load_catalog(const std::filesystem::path& dir) {
  Catalog c;
  const auto groups = catalog::load_manifest(dir / "catalog.txt");
  for (const auto& e : groups.entries) {
    Group g = catalog::build(e.expr, groups.base_dir);
    (g.has_dense() ? c.dense : c.perm).push_back({e.name, std::move(g)});
  }
  const auto mods = catalog::load_manifest(dir / "modules.txt");
  for (const auto& e : mods.entries) c.modules.push_back({e.name, catalog::build_module(e, mods.base_dir)});
  return c;
}

std::string order_str(const Subgroup& h) { return format_order(h.parent().prime(), h.order_exponent()); }

unsigned rank_of(const Subgroup& e) { return e.order_exponent(); }

Subgroup term(const Chain& lower, std::size_t r) {
  // K_r with K_1 = lower[0]; beyond the series the term is trivial.
  return r - 1 < lower.size() ? lower[r - 1] : trivial_subgroup(lower.front().group());
}

std::vector<fp::Residue> random_vector(std::size_t dim, fp::Residue p, std::mt19937_64& rng) {
  std::vector<fp::Residue> v(dim);
  for (auto& x : v) x = static_cast<fp::Residue>(rng() % p);
  return v;
}

Elem random_elem(const DenseGroup& g, std::mt19937_64& rng) {
  return static_cast<Elem>(rng() % g.order());
}

Subgroup random_subgroup(const DenseGroupPtr& g, std::mt19937_64& rng) {
  std::vector<Elem> gens;
  const std::size_t k = rng() % 3;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_elem(*g, rng));
  return generate(g, gens);
}

// Faithful and non-faithful modules over the dense catalog groups of order
// at most `max_order`, plus the bundled modules.
std::vector<Instance> module_pool(const Catalog& cat, std::size_t max_order, std::mt19937_64& rng) {
  std::vector<Instance> out;
  for (const auto& ng : cat.dense) {
    const DenseGroupPtr& g = ng.group.dense();
    if (g->order() > max_order) continue;
    if (g->order() <= 81) out.push_back({ng.name + "/regular", modrep::regular_module(g)});
    std::vector<Rep> cosets;
    for (const auto& e : elementary_abelian_subgroups(whole_group(g))) {
      if (cosets.size() == 2) break;
      if (e.order() == g->prime() && !is_normal(e, whole_group(g)) && g->order() / e.order() <= 81)
        cosets.push_back(modrep::coset_module(g, e));
    }
    for (std::size_t i = 0; i < cosets.size(); ++i)
      out.push_back({ng.name + "/coset" + std::to_string(i), cosets[i]});
    if (cosets.size() == 2 && cosets[0].dim() + cosets[1].dim() <= 81)
      out.push_back({ng.name + "/coset-sum", modrep::direct_sum(cosets[0], cosets[1])});
    if (g->order() <= 27) {
      auto family = modrep::random_spun_family(modrep::regular_module(g), rng, 1);
      for (std::size_t i = 0; i < family.size() && i < 3; ++i)
        out.push_back({ng.name + "/spun" + std::to_string(i), std::move(family[i])});
    }
  }
  for (const auto& m : cat.modules) out.push_back(m);
  return out;
}

// Isomorphism by extending a generator assignment along the Cayley graph.
bool isomorphic(const DenseGroup& a, const DenseGroup& b) {
  if (a.order() != b.order()) return false;
  const auto& gens = a.generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t y = 0; y < b.order(); ++y)
      if (b.element_order(static_cast<Elem>(y)) == a.element_order(gens[i]))
        candidates[i].push_back(static_cast<Elem>(y));

  std::vector<Elem> image(gens.size());
  std::vector<Elem> phi(a.order());
  std::vector<char> seen(a.order()), used(b.order());
  auto extends = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    std::vector<Elem> queue{0};
    phi[0] = 0;
    seen[0] = used[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem xs = a.mul(x, gens[i]);
        const Elem ys = b.mul(phi[x], image[i]);
        if (seen[xs]) {
          if (phi[xs] != ys) return false;
          continue;
        }
        if (used[ys]) return false;
        seen[xs] = used[ys] = 1;
        phi[xs] = ys;
        queue.push_back(xs);
      }
    }
    return queue.size() == a.order();
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return extends();
    for (Elem y : candidates[i]) {
      image[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

// --- eq-identities ----------------------------------------------------------------

void eq_identities(const Options& opt, std::mt19937_64& rng, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  std::vector<Instance> reps = cat.modules;
  reps.push_back({"C3/regular", modrep::regular_module(cyclic(3, 1).dense())});
  reps.push_back({"C9/regular", modrep::regular_module(cyclic(3, 2).dense())});
  reps.push_back({"C5/regular", modrep::regular_module(cyclic(5, 1).dense())});

  std::size_t products = 0;
  constexpr std::size_t per_product = 150;
  for (const auto& inst : reps) {
    const Rep& v = inst.v;
    const DenseGroup& g = *v.group();
    std::optional<modrep::Semidirect> sd;
    try {
      sd.emplace(v);
    } catch (const Error& e) {
      if (e.code() != Errc::capacity) throw;
      continue;
    }
    ++products;
    const DenseGroup& gamma = *sd->group().dense();
    const fp::Residue p = v.prime();
    for (std::size_t k = 0; k < per_product; ++k) {
      const std::string id = inst.id + "#" + std::to_string(k);
      const auto vec = random_vector(v.dim(), p, rng);
      const Elem gg = random_elem(g, rng);
      const Elem x = sd->embed_vector(vec);
      const Elem y = sd->embed_group(gg);

      // Eq. [v,g] = v(g-1), computed in the group and in the module.
      const Elem c = gamma.comm(x, y);
      const auto expected = v.shifted(gg).apply(vec);
      rec.check(id, "commutator-is-v(g-1)", c == sd->embed_vector(expected),
                "group commutator differs from v(g-1)");

      // [v,g^p] = [v,g;p]: left-nested commutators against (g-1)^p and g^p - 1.
      Elem nested = x;
      for (unsigned i = 0; i < p; ++i) nested = gamma.comm(nested, y);
      const fp::Matrix shifted_pow = v.shifted(gg).pow(p);
      const Elem gp = g.pow(gg, p);
      const bool matrices = shifted_pow == v.shifted(gp);
      const bool module_side = nested == sd->embed_vector(shifted_pow.apply(vec));
      const bool group_side = nested == gamma.comm(x, sd->embed_group(gp));
      rec.check(id, "p-fold-commutator", matrices && module_side && group_side,
                std::string("matrix ") + (matrices ? "ok" : "differs") + ", module " +
                    (module_side ? "ok" : "differs") + ", group " + (group_side ? "ok" : "differs"));
    }
  }
  rec.note("semidirect_products", products);
  rec.note("triples_per_product", per_product);
}

// --- js-inequality ----------------------------------------------------------------

void js_inequality(const Options& opt, std::mt19937_64& rng, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  std::vector<NamedGroup> abelian;
  for (const auto& ng : cat.dense)
    if (is_abelian(whole_group(ng.group.dense()))) abelian.push_back(ng);
  for (const char* extra : {"C5", "C25", "EA(5,2)"})
    abelian.push_back({extra, catalog::build(extra, opt.catalog_dir)});

  std::vector<Instance> modules;
  for (const auto& ng : abelian) {
    const DenseGroupPtr& g = ng.group.dense();
    const Rep regular = modrep::regular_module(g);
    modules.push_back({ng.name + "/regular", regular});
    for (auto& w : modrep::random_spun_family(regular, rng, 2))
      if (w.is_faithful()) modules.push_back({ng.name + "/spun" + std::to_string(modules.size()), std::move(w)});
  }
  for (const auto& m : cat.modules)
    if (is_abelian(whole_group(m.v.group()))) modules.push_back(m);

  constexpr std::size_t samples = 600;
  for (std::size_t i = 0; i < samples; ++i) {
    const Instance& inst = modules[i % modules.size()];
    const Rep& v = inst.v;
    const Subgroup h = random_subgroup(v.group(), rng), k = random_subgroup(v.group(), rng);
    const std::string id = inst.id + "#" + std::to_string(i);
    const int lhs = modrep::j_value(v, join(h, k)).exponent + modrep::j_value(v, intersection(h, k)).exponent;
    const int rhs = modrep::j_value(v, h).exponent + modrep::j_value(v, k).exponent;
    rec.check(id, "j(HK)j(H^K)>=j(H)j(K)", lhs >= rhs,
              "exponents " + std::to_string(lhs) + " < " + std::to_string(rhs));
    const bool decomposes = modrep::fixed_space(v, intersection(h, k)) ==
                            fp::sum(modrep::fixed_space(v, h), modrep::fixed_space(v, k));
    rec.check(id, "equality-iff-fixed-sum", (lhs == rhs) == decomposes,
              std::string("equality ") + (lhs == rhs ? "holds" : "fails") + " but C_V(H^K) " +
                  (decomposes ? "=" : "!=") + " C_V(H)+C_V(K)");
  }
  rec.note("abelian_groups", abelian.size());
  rec.note("faithful_modules", modules.size());
}

// --- timmesfeld -------------------------------------------------------------------

void timmesfeld(const Options& opt, std::mt19937_64&, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  std::vector<Instance> modules = cat.modules;
  const DenseGroupPtr es243 = extraspecial(3, 243, 3).dense();
  modules.push_back({"es243_plus/natural", modrep::heisenberg_natural_module(es243, 2)});
  const Instance* ut3 = nullptr;
  for (const auto& m : cat.modules)
    if (m.id == "ut3_natural") ut3 = &m;
  if (ut3) {
    modules.push_back({"ut3_natural+trivial", modrep::direct_sum(ut3->v, modrep::trivial_module(ut3->v.group(), 1))});
    modules.push_back({"ut3_natural^2", modrep::direct_sum(ut3->v, ut3->v)});
  }

  std::size_t nonvacuous = 0;
  for (const auto& inst : modules) {
    const Rep& v = inst.v;
    if (!v.is_faithful()) {
      rec.vacuous(inst.id, "replacement", "module is not faithful");
      continue;
    }
    const auto analysis = modrep::analyze_offenders(v);
    if (analysis.best.empty()) rec.vacuous(inst.id, "replacement", "no best offenders");
    for (const auto& off : analysis.elementary) {
      const Subgroup& e = off.group;
      const std::string id = inst.id + "/E" + std::to_string(&off - analysis.elementary.data());
      if (!off.best) {
        bool rejected = false;
        try {
          modrep::timmesfeld_replace(v, e);
        } catch (const Error& err) {
          rejected = err.code() == Errc::not_best_offender;
        }
        rec.check(id, "rejects-non-best", rejected, "replacement accepted a subgroup outside the best offenders");
        continue;
      }
      ++nonvacuous;
      rec.guarded(id, "replacement", [&] {
        const auto r = modrep::timmesfeld_replace(v, e);
        const fp::Subspace ve = modrep::commutator_space(v, e);
        // F recomputed element by element: e in E killing [V,E].
        ElementSet ref(v.group()->order());
        for (Elem x : e.elements())
          if (fp::image(ve, v.shifted(x)).dim() == 0) ref.set(x);
        rec.check(id, "F=C_E([V,E])", r.f.members() == ref, "F differs from the element-wise centralizer");
        rec.check(id, "F<=E", r.f.is_subgroup_of(e));
        rec.check(id, "[V,F,F]=0",
                  modrep::commutator_space(v, modrep::commutator_space(v, r.f), r.f).dim() == 0);
        const auto jf = modrep::j_value(v, r.f), je = modrep::j_value(v, e);
        rec.check(id, "j_F=j_E", jf == je,
                  "exponents " + std::to_string(jf.exponent) + " and " + std::to_string(je.exponent));
        rec.check(id, "C_V(F)=[V,E]+C_V(E)",
                  modrep::fixed_space(v, r.f) == fp::sum(ve, modrep::fixed_space(v, e)));
      });
    }
  }
  rec.note("best_offenders_checked", nonvacuous);
}

// --- normal-abelian ---------------------------------------------------------------

void normal_abelian(const Options& opt, std::mt19937_64& rng, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  const auto pool = module_pool(cat, 243, rng);
  std::size_t nonvacuous = 0;
  for (const auto& inst : pool) {
    const Rep& v = inst.v;
    const Subgroup g = whole_group(v.group());
    if (!v.is_faithful()) {
      rec.vacuous(inst.id, "hypotheses", "module is not faithful");
      continue;
    }
    const Subgroup z1 = omega1(center(g));
    if (modrep::has_quadratic_in(v, z1)) {
      rec.vacuous(inst.id, "hypotheses", "Omega_1(Z(G)) has quadratic elements");
      continue;
    }
    ++nonvacuous;
    rec.check(inst.id, "hypotheses", true);
    const auto analysis = modrep::analyze_offenders(v);
    const Subgroup derived = commutator_subgroup(g, g);
    std::size_t abelian_normals = 0;
    bool contained = false;
    for (const auto& a : normal_subgroups(g)) {
      if (!is_abelian(a)) continue;
      ++abelian_normals;
      for (const auto& off : analysis.offenders) contained = contained || off.group.is_subgroup_of(a);
    }
    rec.check(inst.id, "no-offender-in-abelian-normal", !contained,
              "an offender lies in an abelian normal subgroup");
    if (analysis.offenders.empty()) {
      rec.vacuous(inst.id, "[G',E]!=1", "no offenders");
      rec.vacuous(inst.id, "quadratic-offender-meets-Z-trivially", "no offenders");
    }
    for (const auto& off : analysis.offenders) {
      rec.check(inst.id, "[G',E]!=1", !commutator_subgroup(derived, off.group).is_trivial(),
                "offender of order " + order_str(off.group) + " commutes with G'");
      if (modrep::is_quadratic(v, off.group))
        rec.check(inst.id, "quadratic-offender-meets-Z-trivially",
                  intersection(off.group, center(g)).is_trivial());
    }
  }
  rec.note("instances", pool.size());
  rec.note("nonvacuous_instances", nonvacuous);
}

// --- central-series ---------------------------------------------------------------

void central_series(const Options& opt, std::mt19937_64& rng, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  for (const auto& ng : cat.dense) {
    const Subgroup g = whole_group(ng.group.dense());
    const Chain lower = lower_central_series(g);
    const Chain upper = upper_central_series(g);
    const std::size_t n = nilpotency_class(g);
    for (std::size_t r = 0; r <= n; ++r)
      rec.check(ng.name, "K_{n+1-r}<=Z_r", term(lower, n + 1 - r).is_subgroup_of(upper.at(r)),
                "r=" + std::to_string(r));
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t s = 1; r + s <= n + 1; ++s)
        rec.check(ng.name, "[K_r,K_s]<=K_{r+s}",
                  commutator_subgroup(term(lower, r), term(lower, s)).is_subgroup_of(term(lower, r + s)),
                  "r=" + std::to_string(r) + " s=" + std::to_string(s));
  }

  const auto pool = module_pool(cat, 243, rng);
  std::string witness;
  std::size_t commutator_samples = 0, class3_candidates = 0;
  for (const auto& inst : pool) {
    const Rep& v = inst.v;
    if (!v.is_faithful()) continue;
    const Subgroup g = whole_group(v.group());
    const DenseGroup& grp = *v.group();
    const Chain lower = lower_central_series(g);
    const std::size_t n = nilpotency_class(g);
    const auto analysis = modrep::analyze_offenders(v);
    for (const auto& off : analysis.offenders) {
      if (!modrep::is_quadratic(v, off.group)) continue;
      const std::string id = inst.id + "/E" + std::to_string(&off - analysis.offenders.data());
      for (std::size_t r = (n + 1) / 2; r <= n; ++r) {
        if (r == 0) continue;
        const std::string rid = id + "/r" + std::to_string(r);
        if (modrep::has_quadratic_in(v, term(lower, r + 1))) {
          rec.vacuous(rid, "[K_r,E]=1", "K_{r+1} has quadratic elements");
          continue;
        }
        rec.check(rid, "[K_r,E]=1", commutator_subgroup(term(lower, r), off.group).is_trivial());
      }
      // The r = n-2 form fails at class 3: search for E with [G,E] != 1
      // although K_2 carries no quadratic elements.
      if (n == 3) {
        ++class3_candidates;
        if (witness.empty() && !modrep::has_quadratic_in(v, term(lower, 2)) &&
            !commutator_subgroup(term(lower, 1), off.group).is_trivial())
          witness = id + " (|E|=" + order_str(off.group) + ")";
      }
    }

    // [a,b] = c central in <a,b>, c != 1 non-quadratic forces a, b non-quadratic.
    for (int k = 0; k < 200; ++k) {
      const Elem a = random_elem(grp, rng), b = random_elem(grp, rng);
      const Elem c = grp.comm(a, b);
      if (c == 0 || grp.comm(c, a) != 0 || grp.comm(c, b) != 0) continue;
      ++commutator_samples;
      if (modrep::is_quadratic(v, c)) continue;
      const bool ok = !modrep::is_quadratic(v, a) && !modrep::is_quadratic(v, b);
      rec.check(inst.id + "#" + std::to_string(k), "non-quadratic-commutator", ok,
                "a or b is quadratic while [a,b] is not");
    }
  }
  rec.note("commutator_triples_meeting_hypotheses", commutator_samples);
  rec.note("class3_quadratic_offenders_examined", class3_candidates);
  rec.note("class3_witness", witness.empty() ? "none found" : witness);
}

// --- metabelian -------------------------------------------------------------------

void metabelian(const Options& opt, std::mt19937_64&, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  std::size_t applicable = 0;
  for (const auto& ng : cat.dense) {
    const DenseGroup& grp = *ng.group.dense();
    const Subgroup g = whole_group(ng.group.dense());
    const Subgroup derived = commutator_subgroup(g, g);
    for (const auto& a : normal_subgroups(g)) {
      if (!is_abelian(a) || a == g) continue;
      std::size_t tried = 0;
      for (std::size_t xi = 0; xi < grp.order() && tried < 8; ++xi) {
        const Elem x = static_cast<Elem>(xi);
        if (a.contains(x)) continue;
        const std::vector<Elem> xs{x};
        if (!(join(a, generate(g.group(), xs)) == g)) continue;
        ++tried;
        ElementSet comms(grp.order());
        for (Elem y : a.elements()) comms.set(grp.comm(y, x));
        rec.check(ng.name + "/A" + order_str(a) + "/x" + std::to_string(x), "G'={[a,x]}",
                  comms == derived.members(), "commutator set differs from G'");
      }
      applicable += tried > 0;
    }
  }
  rec.note("abelian_normal_subgroups_with_cyclic_quotient", applicable);
}

// --- maximal-class-rank -----------------------------------------------------------

void maximal_class_rank(const Options& opt, std::mt19937_64&, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  const DenseGroupPtr wreath33 = wreath(cyclic(3, 1), 3).dense();
  std::size_t considered = 0;
  for (const auto& ng : cat.dense) {
    const Subgroup g = whole_group(ng.group.dense());
    const unsigned n = g.order_exponent();
    if (g.parent().prime() != 3 || n < 4 || n > 6 || !is_maximal_class(g)) continue;
    ++considered;
    const unsigned rank = p_rank(g);
    rec.check(ng.name, "rank<=p", rank <= 3, "rank " + std::to_string(rank));
    const bool wr = isomorphic(*wreath33, g.parent());
    rec.check(ng.name, "rank=p-iff-wreath", (rank == 3) == wr,
              "rank " + std::to_string(rank) + (wr ? ", isomorphic" : ", not isomorphic") + " to C3 wr C3");
  }
  rec.note("maximal_class_groups", considered);
}

// --- rank-p -----------------------------------------------------------------------

void rank_p(const Options& opt, std::mt19937_64& rng, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  const auto pool = module_pool(cat, 243, rng);
  std::size_t ps_instances = 0, pairs = 0;
  for (const auto& inst : pool) {
    const Rep& v = inst.v;
    if (!v.is_faithful()) continue;
    const Subgroup g = whole_group(v.group());
    const DenseGroup& grp = *v.group();
    const unsigned p = grp.prime();
    const Subgroup z1 = omega1(center(g));
    const bool ps = modrep::ps_condition(v, z1);
    const auto analysis = modrep::analyze_offenders(v);

    if (ps) {
      ++ps_instances;
      if (analysis.offenders.empty()) {
        rec.vacuous(inst.id, "offender-rank>=p-1", "no offenders under (PS)");
        rec.vacuous(inst.id, "rank-(p-1)-offender", "no offenders under (PS)");
      }
      for (const auto& off : analysis.offenders) {
        const Subgroup& e = off.group;
        rec.check(inst.id, "offender-rank>=p-1", rank_of(e) + 1 >= p, "rank " + std::to_string(rank_of(e)));
        if (rank_of(e) + 1 != p) continue;
        bool same = true;
        const fp::Subspace ce = modrep::fixed_space(v, e);
        for (Elem x : e.elements())
          if (x != 0) same = same && modrep::fixed_space(v, x) == ce;
        rec.check(inst.id, "rank-(p-1)-offender",
                  same && off.j.exponent == 0 && off.best && modrep::is_quadratic(v, e),
                  "C_V(g)=C_V(E), j=1, best and quadratic not all satisfied");
      }
    }

    const auto cond = oliver::classify_conditions(Group::from_dense(v.group()));
    if (!modrep::has_quadratic_in(v, z1) && (cond.class_at_most_4 || cond.metabelian))
      rec.check(inst.id, "class<=4-or-metabelian=>not-F", !analysis.is_f_module(), "F-module");
    if (ps && (cond.maximal_class || cond.rank_at_most_p.value_or(false)))
      rec.check(inst.id, "maximal-class-or-rank<=p=>not-F", !analysis.is_f_module(), "F-module");

    // Quadratic a, b with C_V(a) = C_V(b) commute.
    std::vector<Elem> quad = modrep::quadratic_elements(v, g);
    std::shuffle(quad.begin(), quad.end(), rng);
    if (quad.size() > 60) quad.resize(60);
    std::vector<fp::Subspace> fixed;
    for (Elem x : quad) fixed.push_back(modrep::fixed_space(v, x));
    for (std::size_t i = 0; i < quad.size(); ++i)
      for (std::size_t j = i + 1; j < quad.size(); ++j) {
        if (!(fixed[i] == fixed[j])) continue;
        ++pairs;
        rec.check(inst.id + "/" + std::to_string(quad[i]) + "," + std::to_string(quad[j]),
                  "common-centralizer-commute", grp.comm(quad[i], quad[j]) == 0);
      }
  }
  rec.note("instances", pool.size());
  rec.note("ps_instances", ps_instances);
  rec.note("quadratic_pairs", pairs);
}

// --- oliver-conjecture ------------------------------------------------------------

void oliver_conjecture(const Options& opt, std::mt19937_64&, Recorder& rec) {
  const Catalog cat = load_catalog(opt.catalog_dir);
  for (const auto& ng : cat.dense) {
    const Subgroup s = whole_group(ng.group.dense());
    rec.guarded(ng.name, "J<=X", [&] {
      const auto r = oliver::conjecture_check(s);
      std::string dump;
      if (!r.holds) {
        dump = "J=" + order_str(r.j) + " X=" + order_str(r.x.x) + " witness element " +
               std::to_string(r.witness.value_or(0)) + "\n" +
               catalog::format_group_file(ng.group, catalog::GroupFileKind::table);
      }
      rec.check(ng.name, "J<=X", r.holds && r.j.is_subgroup_of(r.x.x), dump);
      rec.check(ng.name, "greedy=exhaustive", r.x.greedy_agrees && r.x.greedy == r.x.x,
                "greedy " + order_str(r.x.greedy) + " vs exhaustive " + order_str(r.x.x));
      const auto cert = oliver::check_q_series(s, r.x.cert.chain);
      rec.check(ng.name, "certificate", cert.valid && r.x.cert.chain.back() == r.x.x, cert.reason);
      rec.check(ng.name, "X-normal", is_normal(r.x.x, s));
      if (oliver::classify_conditions(ng.group).any())
        rec.check(ng.name, "conditions=>holds", r.holds);
    });
  }
  rec.note("dense_groups", cat.dense.size());
}

using SuiteFn = void (*)(const Options&, std::mt19937_64&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"eq-identities", eq_identities},   {"js-inequality", js_inequality},
      {"timmesfeld", timmesfeld},         {"normal-abelian", normal_abelian},
      {"central-series", central_series}, {"metabelian", metabelian},
      {"maximal-class-rank", maximal_class_rank}, {"rank-p", rank_p},
      {"oliver-conjecture", oliver_conjecture},
  };
  return r;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const Options& options) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult result;
    result.suite = n;
    result.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    Recorder rec(result);
    fn(options, rng, rec);
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const Record& a, const Record& b) { return a.instance < b.instance; });
    return result;
  }
  fail(Errc::argument, "unknown suite '" + std::string(name) + "'");
}

void print(std::ostream& os, const SuiteResult& r) {
  os << "suite: " << r.suite << "\n";
  os << "seed: " << r.seed << "\n";
  os << "instances: " << r.instances() << "\n";
  for (const auto& prop : r.properties()) {
    const Counts c = r.counts(prop);
    os << "property " << prop << ": pass " << c.pass << " fail " << c.fail << " vacuous " << c.vacuous
       << "\n";
  }
  for (const auto& [k, v] : r.notes) os << "note " << k << ": " << v << "\n";
  for (const auto& rec : r.records)
    if (rec.status == Status::fail)
      os << status_name(rec.status) << " " << rec.instance << " " << rec.property << ": " << rec.detail
         << "\n";
  const Counts t = r.totals();
  os << "total: pass " << t.pass << " fail " << t.fail << " vacuous " << t.vacuous << "\n";
  os << "status: " << (r.ok() ? "ok" : "FAILED") << "\n";
}

}  // namespace pgrp::suites
