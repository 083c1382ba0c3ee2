#pragma once

// Permutation engine: permutations on points 0..d-1 acting on the right,
// a deterministic Schreier-Sims stabilizer chain, and the reduced operation
// set used for groups beyond dense capacity.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pgrp {

using Point = std::uint32_t;

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);  // identity
  explicit Perm(std::vector<Point> images);

  /// Parse disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
  /// "()" is the identity.
  static Perm parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  std::uint64_t order() const;
  Perm pow(std::uint64_t k) const;
  std::optional<Point> first_moved() const;
  std::string to_cycles() const;

  /// Apply *this first, then rhs.
  friend Perm operator*(const Perm& lhs, const Perm& rhs);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<Point> img_;
};

/// [a,b] = a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);
/// b^-1 a b.
Perm conjugate(const Perm& a, const Perm& b);

/// Base and strong generating set with explicit transversals.
class StabChain {
 public:
  StabChain() = default;
  StabChain(std::size_t degree, const std::vector<Perm>& gens);

  std::size_t degree() const { return degree_; }
  std::size_t base_length() const { return levels_.size(); }
  const std::vector<Point>& base() const { return base_; }
  std::vector<std::size_t> orbit_sizes() const;
  /// Product of fundamental orbit lengths; throws Errc::capacity on overflow.
  std::uint64_t order() const;

  bool contains(const Perm& g) const;
  /// Residue after sifting and the level where sifting stopped
  /// (base_length() when it passed every level).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from_level = 0) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;                 // strong generators fixing earlier base points
    std::vector<std::optional<Perm>> reps;  // reps[x] maps base_point to x
    std::vector<Point> orbit;
  };

  void rebuild_orbit(Level& level) const;
  void schreier_sims(const std::vector<Perm>& gens);

  std::size_t degree_ = 0;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

class PermGroup {
 public:
  PermGroup() = default;
  /// Validates degrees and that the order is a power of p.
  PermGroup(unsigned p, std::size_t degree, std::vector<Perm> gens);

  unsigned prime() const { return p_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const { return chain_; }
  std::uint64_t order() const { return chain_.order(); }
  unsigned order_exponent() const { return exponent_; }
  bool contains(const Perm& g) const { return chain_.contains(g); }
  bool is_trivial() const { return exponent_ == 0; }

  /// Every element of this group lies in other.
  bool is_subgroup_of(const PermGroup& other) const;

  /// Enumerate all elements (breadth-first over generators, identity first).
  std::vector<Perm> elements(std::size_t limit) const;

 private:
  unsigned p_ = 3;
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  StabChain chain_;
  unsigned exponent_ = 0;
};

/// Smallest subgroup of `within` containing `gens` and normalized by `within`.
PermGroup normal_closure(const PermGroup& within, const std::vector<Perm>& gens);
/// [A,B]: commutators of generators, normally closed inside <A,B>.
PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b);
/// K_1 = G, K_{r+1} = [K_r, G], down to the trivial group.
std::vector<PermGroup> lower_central_series(const PermGroup& g);
/// G, G', G'', ... down to the trivial group.
std::vector<PermGroup> derived_series(const PermGroup& g);
unsigned nilpotency_class(const PermGroup& g);

struct RankWitnessCheck {
  bool valid = false;
  unsigned rank = 0;
  std::string reason;
};

/// Checks that `gens` lie in g, have order p, commute pairwise, and are
/// independent (they generate a group of order p^|gens|).
RankWitnessCheck check_rank_witness(const PermGroup& g, const std::vector<Perm>& gens);

}  // namespace pgrp
