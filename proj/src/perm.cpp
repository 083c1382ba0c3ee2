#include "pgrp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "pgrp/error.hpp"
#include "pgrp/kernels.hpp"

namespace pgrp {

// --- Perm ------------------------------------------------------------------

Perm::Perm(std::size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x]) fail(Errc::format, "image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&](const std::string& why) -> Perm {
    fail(Errc::format, "cycle notation at column " + std::to_string(i + 1) + ": " + why);
  };
  skip_ws();
  if (i == text.size()) return bad("empty permutation; write () for the identity");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') return bad("expected '('");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > degree) return bad("point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (start == i) return bad("expected a point");
      if (value == 0) return bad("points are 1-based");
      const Point pt = static_cast<Point>(value - 1);
      if (used[pt]) return bad("point " + std::to_string(value) + " repeated");
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      return bad("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (img_[x] != x) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) inv[img_[x]] = static_cast<Point>(x);
  Perm r;
  r.img_ = std::move(inv);
  return r;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = img_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::pow(std::uint64_t k) const {
  Perm result(degree());
  Perm base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

std::optional<Point> Perm::first_moved() const {
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (img_[x] != x) return static_cast<Point>(x);
  }
  return std::nullopt;
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    any = true;
    os << '(';
    Point y = static_cast<Point>(x);
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) os << ',';
      os << (y + 1);
      first = false;
      y = img_[y];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Perm operator*(const Perm& lhs, const Perm& rhs) {
  if (lhs.degree() != rhs.degree()) fail(Errc::argument, "permutation degrees differ");
  Perm r;
  r.img_.resize(lhs.degree());
  kernels::compose(lhs.img_, rhs.img_, r.img_);
  return r;
}

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

Perm conjugate(const Perm& a, const Perm& b) { return b.inverse() * a * b; }

// --- StabChain ---------------------------------------------------------------

StabChain::StabChain(std::size_t degree, const std::vector<Perm>& gens) : degree_(degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) fail(Errc::format, "generator degree differs from group degree");
  }
  schreier_sims(gens);
}

void StabChain::rebuild_orbit(Level& level) const {
  level.reps.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.reps[level.base_point] = Perm(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point x = level.orbit[k];
    for (const auto& s : level.gens) {
      const Point y = s[x];
      if (!level.reps[y]) {
        level.reps[y] = *level.reps[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, std::size_t> StabChain::strip(Perm g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Point x = g[levels_[l].base_point];
    const auto& rep = levels_[l].reps[x];
    if (!rep) return {std::move(g), l};
    g = g * rep->inverse();
  }
  return {std::move(g), levels_.size()};
}

// Deterministic Schreier-Sims: check every Schreier generator at level i,
// sift it through the deeper levels, and restart from the level where a
// residue had to be added.
void StabChain::schreier_sims(const std::vector<Perm>& input) {
  std::vector<Perm> gens;
  for (const auto& g : input) {
    if (!g.is_identity()) gens.push_back(g);
  }
  auto fixes_base = [&](const Perm& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l) {
      if (g[base_[l]] != base_[l]) return false;
    }
    return true;
  };
  auto add_level = [&](const Perm& moved_by) {
    Level lv;
    lv.base_point = *moved_by.first_moved();
    base_.push_back(lv.base_point);
    levels_.push_back(std::move(lv));
  };
  for (const auto& g : gens) {
    if (fixes_base(g, base_.size())) add_level(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : gens) {
      if (fixes_base(g, l)) levels_[l].gens.push_back(g);
    }
    rebuild_orbit(levels_[l]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    Level& level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; !restarted && k < level.orbit.size(); ++k) {
      const Point x = level.orbit[k];
      for (std::size_t si = 0; si < level.gens.size(); ++si) {
        const Perm& s = level.gens[si];
        const Perm h = *level.reps[x] * s * level.reps[s[x]]->inverse();
        auto [residue, j] = strip(h, static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && residue.is_identity()) continue;
        if (j == levels_.size()) add_level(residue);
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::vector<std::size_t> StabChain::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& l : levels_) sizes.push_back(l.orbit.size());
  return sizes;
}

std::uint64_t StabChain::order() const {
  std::uint64_t ord = 1;
  for (const auto& l : levels_) {
    if (__builtin_mul_overflow(ord, l.orbit.size(), &ord)) {
      fail(Errc::capacity, "group order overflows 64 bits");
    }
  }
  return ord;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = strip(g);
  return level == levels_.size() && residue.is_identity();
}

// --- PermGroup ---------------------------------------------------------------

PermGroup::PermGroup(unsigned p, std::size_t degree, std::vector<Perm> gens)
    : p_(p), degree_(degree), gens_(std::move(gens)), chain_(degree, gens_) {
  exponent_ = 0;
  for (std::size_t size : chain_.orbit_sizes()) {
    std::size_t s = size;
    while (s > 1 && s % p == 0) {
      s /= p;
      ++exponent_;
    }
    if (s != 1) {
      fail(Errc::argument, "permutation group order is not a power of " + std::to_string(p));
    }
  }
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Perm& g) { return other.contains(g); });
}

std::vector<Perm> PermGroup::elements(std::size_t limit) const {
  if (order() > limit) {
    fail(Errc::capacity, "group of order " + std::to_string(order()) +
                             " exceeds enumeration limit " + std::to_string(limit));
  }
  const auto& base = chain_.base();
  auto key = [&](const Perm& g) {
    std::vector<Point> k;
    k.reserve(base.size());
    for (Point b : base) k.push_back(g[b]);
    return k;
  };
  std::vector<Perm> out{Perm(degree_)};
  std::set<std::vector<Point>> seen{key(out[0])};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : gens_) {
      Perm y = out[i] * s;
      if (seen.insert(key(y)).second) out.push_back(std::move(y));
    }
  }
  return out;
}

// --- subgroup machinery ------------------------------------------------------

PermGroup normal_closure(const PermGroup& within, const std::vector<Perm>& gens) {
  std::vector<Perm> ngens;
  for (const auto& g : gens) {
    if (!g.is_identity()) ngens.push_back(g);
  }
  StabChain chain(within.degree(), ngens);
  // Every conjugate of a generator by a generator of `within` must be in N.
  for (std::size_t k = 0; k < ngens.size(); ++k) {
    for (const auto& w : within.generators()) {
      Perm c = conjugate(ngens[k], w);
      if (!chain.contains(c)) {
        ngens.push_back(std::move(c));
        chain = StabChain(within.degree(), ngens);
      }
    }
  }
  return PermGroup(within.prime(), within.degree(), std::move(ngens));
}

PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> comms;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      Perm c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  if (a.is_subgroup_of(b)) return normal_closure(b, comms);
  if (b.is_subgroup_of(a)) return normal_closure(a, comms);
  std::vector<Perm> joint = a.generators();
  joint.insert(joint.end(), b.generators().begin(), b.generators().end());
  return normal_closure(PermGroup(a.prime(), a.degree(), std::move(joint)), comms);
}

std::vector<PermGroup> lower_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (!series.back().is_trivial()) {
    PermGroup next = commutator_subgroup(series.back(), g);
    if (next.order_exponent() == series.back().order_exponent()) {
      fail(Errc::integrity, "lower central series stalled; group is not nilpotent");
    }
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (!series.back().is_trivial()) {
    PermGroup next = commutator_subgroup(series.back(), series.back());
    if (next.order_exponent() == series.back().order_exponent()) {
      fail(Errc::integrity, "derived series stalled; group is not solvable");
    }
    series.push_back(std::move(next));
  }
  return series;
}

unsigned nilpotency_class(const PermGroup& g) {
  return static_cast<unsigned>(lower_central_series(g).size() - 1);
}

RankWitnessCheck check_rank_witness(const PermGroup& g, const std::vector<Perm>& gens) {
  RankWitnessCheck out;
  out.rank = static_cast<unsigned>(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!g.contains(gens[i])) {
      out.reason = "generator " + std::to_string(i) + " is not in the group";
      return out;
    }
    if (gens[i].order() != g.prime()) {
      out.reason = "generator " + std::to_string(i) + " does not have order p";
      return out;
    }
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutator(gens[i], gens[j]).is_identity()) {
        out.reason = "generators " + std::to_string(i) + " and " + std::to_string(j) +
                     " do not commute";
        return out;
      }
    }
  }
  PermGroup sub(g.prime(), g.degree(), gens);
  if (sub.order_exponent() != gens.size()) {
    out.reason = "generators are dependent: subgroup has order " + std::to_string(g.prime()) +
                 "^" + std::to_string(sub.order_exponent());
    return out;
  }
  out.valid = true;
  return out;
}

}  // namespace pgrp
