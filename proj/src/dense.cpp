#include "pgrp/dense.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <unordered_set>

#include "pgrp/error.hpp"

namespace pgrp {

// --- ElementSet ----------------------------------------------------------------

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w; w &= w - 1) {
      out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull;
  return h;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

// --- DenseGroup --------------------------------------------------------------------

namespace {

bool is_power_of(std::uint64_t n, unsigned p, unsigned* exponent) {
  unsigned e = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++e;
  }
  if (exponent) *exponent = e;
  return n == 1;
}

// Extends `members`/`list` to the closure under right multiplication by gens.
void close_under(const DenseGroup& g, std::span<const Elem> gens, ElementSet& members,
                 std::vector<Elem>& list) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.mul(list[i], s);
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  }
}

}  // namespace

std::shared_ptr<const DenseGroup> DenseGroup::create(unsigned p, std::vector<Elem> table,
                                                     std::vector<Elem> gens) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n * n != table.size() || n == 0) fail(Errc::format, "multiplication table is not square");
  if (n > dense_capacity) {
    fail(Errc::capacity, "order " + std::to_string(n) + " exceeds dense capacity " +
                             std::to_string(dense_capacity));
  }
  unsigned exponent = 0;
  if (!is_power_of(n, p, &exponent)) {
    fail(Errc::format, "order " + std::to_string(n) + " is not a power of " + std::to_string(p));
  }

  auto g = std::shared_ptr<DenseGroup>(new DenseGroup());
  g->p_ = p;
  g->order_ = n;
  g->exponent_ = exponent;
  g->table_ = std::move(table);

  for (Elem x : g->table_) {
    if (x >= n) fail(Errc::format, "table entry " + std::to_string(x) + " out of range");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (g->mul(0, static_cast<Elem>(x)) != x || g->mul(static_cast<Elem>(x), 0) != x) {
      fail(Errc::format, "index 0 is not the identity");
    }
  }
  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) seen[g->mul(static_cast<Elem>(a), static_cast<Elem>(b))] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      fail(Errc::format, "row " + std::to_string(a) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) seen[g->mul(static_cast<Elem>(b), static_cast<Elem>(a))] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      fail(Errc::format, "column " + std::to_string(a) + " is not a permutation");
    }
  }
  auto check_triple = [&](Elem a, Elem b, Elem c) {
    if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c))) {
      fail(Errc::format, "table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  if (n <= 81) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          check_triple(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c));
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 1000; ++t) {
      check_triple(static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)),
                   static_cast<Elem>(pick(rng)));
    }
  }

  g->inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g->mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) {
        g->inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_power_of(g->element_order(static_cast<Elem>(a)), p, nullptr)) {
      fail(Errc::format, "element " + std::to_string(a) + " has order prime to p");
    }
  }

  // Generators: keep the supplied ones that are not redundant, then fill greedily.
  ElementSet members(n);
  members.set(0);
  std::vector<Elem> list{0};
  std::vector<Elem> kept;
  auto offer = [&](Elem x) {
    if (x >= n) fail(Errc::format, "generator index out of range");
    if (members.test(x)) return;
    kept.push_back(x);
    close_under(*g, kept, members, list);
  };
  for (Elem x : gens) offer(x);
  if (!gens.empty() && list.size() != n) fail(Errc::format, "supplied generators do not generate");
  for (std::size_t x = 0; x < n && list.size() < n; ++x) offer(static_cast<Elem>(x));
  g->gens_ = std::move(kept);
  return g;
}

Elem DenseGroup::pow(Elem a, std::uint64_t k) const {
  Elem result = 0, base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::uint64_t DenseGroup::element_order(Elem a) const {
  std::uint64_t ord = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++ord;
  return ord;
}

// --- Subgroup --------------------------------------------------------------------------

unsigned Subgroup::order_exponent() const {
  unsigned e = 0;
  is_power_of(order(), group_->prime(), &e);
  return e;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  require_same_group(*this, other);
  return members_.subset_of(other.members_);
}

void require_same_group(const Subgroup& a, const Subgroup& b) {
  if (a.group() != b.group()) fail(Errc::handle_mismatch, "subgroups belong to different groups");
}

Subgroup trivial_subgroup(const DenseGroupPtr& g) {
  ElementSet m(g->order());
  m.set(0);
  return Subgroup(g, std::move(m), {});
}

Subgroup whole_group(const DenseGroupPtr& g) { return generate(g, g->generators()); }

Subgroup generate(const DenseGroupPtr& g, std::span<const Elem> gens) {
  ElementSet members(g->order());
  members.set(0);
  std::vector<Elem> list{0};
  std::vector<Elem> kept;
  for (Elem x : gens) {
    if (x >= g->order()) fail(Errc::argument, "element index out of range");
    if (members.test(x)) continue;
    kept.push_back(x);
    close_under(*g, kept, members, list);
  }
  return Subgroup(g, std::move(members), std::move(kept));
}

Subgroup subgroup_from_members(const DenseGroupPtr& g, const ElementSet& members) {
  std::vector<Elem> elems = members.to_vector();
  ElementSet closure(g->order());
  closure.set(0);
  std::vector<Elem> list{0};
  std::vector<Elem> kept;
  for (Elem x : elems) {
    if (closure.test(x)) continue;
    kept.push_back(x);
    close_under(*g, kept, closure, list);
    if (list.size() == elems.size()) break;
  }
  if (!(closure == members)) fail(Errc::integrity, "element set is not a subgroup");
  return Subgroup(g, closure, std::move(kept));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_group(a, b);
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generate(a.group(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_group(a, b);
  ElementSet m = a.members();
  m &= b.members();
  return subgroup_from_members(a.group(), m);
}

Subgroup center(const Subgroup& h) { return centralizer(h, h); }

Subgroup centralizer(const Subgroup& h, const Subgroup& x) {
  require_same_group(h, x);
  const DenseGroup& g = h.parent();
  ElementSet m(g.order());
  for (Elem e : h.elements()) {
    bool commutes = true;
    for (Elem s : x.generators()) {
      if (g.mul(e, s) != g.mul(s, e)) {
        commutes = false;
        break;
      }
    }
    if (commutes) m.set(e);
  }
  return subgroup_from_members(h.group(), m);
}

Subgroup normal_closure(const Subgroup& x, const Subgroup& within) {
  require_same_group(x, within);
  const DenseGroup& g = x.parent();
  std::vector<Elem> gens = x.generators();
  Subgroup n = x;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (Elem w : within.generators()) {
      const Elem c = g.conj(gens[k], w);
      if (!n.contains(c)) {
        gens.push_back(c);
        n = generate(x.group(), gens);
      }
    }
  }
  return n;
}

bool is_normal(const Subgroup& x, const Subgroup& within) {
  require_same_group(x, within);
  const DenseGroup& g = x.parent();
  for (Elem n : x.generators()) {
    for (Elem w : within.generators()) {
      if (!x.contains(g.conj(n, w))) return false;
    }
  }
  return true;
}

Subgroup omega1(const Subgroup& x) {
  const DenseGroup& g = x.parent();
  std::vector<Elem> small;
  for (Elem e : x.elements()) {
    if (g.pow(e, g.prime()) == 0) small.push_back(e);
  }
  return generate(x.group(), small);
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_group(a, b);
  const DenseGroup& g = a.parent();
  std::vector<Elem> comms;
  for (Elem x : a.generators()) {
    for (Elem y : b.generators()) {
      const Elem c = g.comm(x, y);
      if (c != 0) comms.push_back(c);
    }
  }
  const Subgroup seed = generate(a.group(), comms);
  return normal_closure(seed, join(a, b));
}

Subgroup commutator_subgroup_all_pairs(const Subgroup& a, const Subgroup& b) {
  require_same_group(a, b);
  const DenseGroup& g = a.parent();
  ElementSet comms(g.order());
  const auto bs = b.elements();
  for (Elem x : a.elements()) {
    for (Elem y : bs) comms.set(g.comm(x, y));
  }
  const auto elems = comms.to_vector();
  return generate(a.group(), elems);
}

Subgroup iterated_commutator(const Subgroup& a, const Subgroup& b, unsigned k) {
  if (k == 0) fail(Errc::argument, "iterated commutator needs k >= 1");
  Subgroup c = commutator_subgroup(a, b);
  for (unsigned i = 1; i < k && !c.is_trivial(); ++i) c = commutator_subgroup(c, b);
  return c;
}

Chain lower_central_series(const Subgroup& h) {
  Chain series{h};
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), h);
    if (next.order() == series.back().order()) {
      fail(Errc::integrity, "lower central series stalled; group is not nilpotent");
    }
    series.push_back(std::move(next));
  }
  return series;
}

Chain upper_central_series(const Subgroup& h) {
  const DenseGroup& g = h.parent();
  Chain series{trivial_subgroup(h.group())};
  while (series.back().order() != h.order()) {
    const Subgroup& z = series.back();
    ElementSet m(g.order());
    for (Elem e : h.elements()) {
      bool central = true;
      for (Elem s : h.generators()) {
        if (!z.contains(g.comm(e, s))) {
          central = false;
          break;
        }
      }
      if (central) m.set(e);
    }
    Subgroup next = subgroup_from_members(h.group(), m);
    if (next.order() == z.order()) {
      fail(Errc::integrity, "upper central series stalled; group is not nilpotent");
    }
    series.push_back(std::move(next));
  }
  return series;
}

Chain derived_series(const Subgroup& h) {
  Chain series{h};
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), series.back());
    if (next.order() == series.back().order()) {
      fail(Errc::integrity, "derived series stalled; group is not solvable");
    }
    series.push_back(std::move(next));
  }
  return series;
}

unsigned nilpotency_class(const Subgroup& h) {
  return static_cast<unsigned>(lower_central_series(h).size() - 1);
}

bool is_abelian(const Subgroup& h) {
  const DenseGroup& g = h.parent();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool is_metabelian(const Subgroup& h) { return is_abelian(commutator_subgroup(h, h)); }

bool is_maximal_class(const Subgroup& h) {
  const unsigned n = h.order_exponent();
  return n >= 2 && nilpotency_class(h) == n - 1;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

std::vector<Subgroup> normal_subgroups(const Subgroup& h) {
  // Every normal subgroup is the join of the normal closures of its cyclic
  // subgroups, so closing those under joins finds them all.
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> cyclic_closures;
  for (Elem x : h.elements()) {
    const Elem one[] = {x};
    Subgroup c = normal_closure(generate(h.group(), one), h);
    if (seen.insert(c.members()).second) cyclic_closures.push_back(std::move(c));
  }
  seen.clear();
  std::vector<Subgroup> found{trivial_subgroup(h.group())};
  seen.insert(found[0].members());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclic_closures) {
      if (c.members().subset_of(found[i].members())) continue;
      Subgroup j = join(found[i], c);
      if (seen.insert(j.members()).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

std::vector<Subgroup> elementary_abelian_subgroups(const Subgroup& h) {
  const DenseGroup& g = h.parent();
  std::vector<Elem> order_p;
  for (Elem x : h.elements()) {
    if (x != 0 && g.pow(x, g.prime()) == 0) order_p.push_back(x);
  }
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> found;
  for (Elem x : order_p) {
    const Elem one[] = {x};
    Subgroup c = generate(h.group(), one);
    if (seen.insert(c.members()).second) found.push_back(std::move(c));
  }
  // Extend each subgroup by a commuting element of order p outside it.
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup e = found[i];
    const auto e_elems = e.elements();
    for (Elem x : order_p) {
      if (e.contains(x)) continue;
      bool commutes = true;
      for (Elem s : e.generators()) {
        if (g.mul(s, x) != g.mul(x, s)) {
          commutes = false;
          break;
        }
      }
      if (!commutes) continue;
      ElementSet m(g.order());
      Elem xk = 0;
      for (unsigned k = 0; k < g.prime(); ++k) {
        for (Elem y : e_elems) m.set(g.mul(y, xk));
        xk = g.mul(xk, x);
      }
      if (!seen.insert(m).second) continue;
      std::vector<Elem> gens = e.generators();
      gens.push_back(x);
      found.emplace_back(h.group(), std::move(m), std::move(gens));
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

unsigned p_rank(const Subgroup& h) {
  unsigned best = 0;
  for (const auto& e : elementary_abelian_subgroups(h)) best = std::max(best, e.order_exponent());
  return best;
}

}  // namespace pgrp
