#pragma once

// F_p G-modules for dense p-groups: fixed and commutator spaces, the
// j-functional, quadratic action, offenders and Timmesfeld replacement.
// Modules are right modules over row vectors: v * g is v times matrix(g).

#include <span>
#include <vector>

#include "pgrp/dense.hpp"
#include "pgrp/fp.hpp"
#include "pgrp/group.hpp"

namespace pgrp::modrep {

class Rep {
 public:
  Rep() = default;

  /// Extends generator images to every element and checks
  /// matrix(x) * matrix(s) = matrix(xs) for all x and every generator s, which
  /// (with matrix(1) = I) makes the extension a homomorphism.
  /// `gens` defaults to the group's canonical generators.
  static Rep from_generator_images(DenseGroupPtr group, std::vector<fp::Matrix> images,
                                   std::vector<Elem> gens = {});

  /// Every element acts as the identity on F_p^dim.
  static Rep trivial(DenseGroupPtr group, std::size_t dim);

  const DenseGroupPtr& group() const { return group_; }
  fp::Residue prime() const { return p_; }
  std::size_t dim() const { return dim_; }
  const fp::Matrix& matrix(Elem g) const { return mats_[g]; }
  /// matrix(g) - I, cached.
  const fp::Matrix& shifted(Elem g) const { return shifted_[g]; }

  /// C_G(V) = {g : matrix(g) = I}.
  Subgroup kernel() const;
  bool is_faithful() const { return faithful_; }

 private:
  DenseGroupPtr group_;
  fp::Residue p_ = 3;
  std::size_t dim_ = 0;
  std::vector<fp::Matrix> mats_;
  std::vector<fp::Matrix> shifted_;
  bool faithful_ = false;
};

/// |H| |C_V(H)| / |V| = p^exponent.
struct JValue {
  int exponent = 0;
  friend auto operator<=>(const JValue&, const JValue&) = default;
};

/// C_V(H). Throws Errc::handle_mismatch for a subgroup of another group.
fp::Subspace fixed_space(const Rep& v, const Subgroup& h);
/// C_V(g) for a single element.
fp::Subspace fixed_space(const Rep& v, Elem g);
/// [V,H], spanned by the images of matrix(h) - I over generators h.
fp::Subspace commutator_space(const Rep& v, const Subgroup& h);
/// [W,H] for a subspace W (meaningful when W is H-invariant).
fp::Subspace commutator_space(const Rep& v, const fp::Subspace& w, const Subgroup& h);
/// [V,g;k] = V (g - 1)^k, k >= 1.
fp::Subspace iterated_commutator_space(const Rep& v, Elem g, unsigned k);

JValue j_value(const Rep& v, const Subgroup& h);

/// [V,g,g] = 0 for a non-identity g.
bool is_quadratic(const Rep& v, Elem g);
/// [V,E,E] = 0.
bool is_quadratic(const Rep& v, const Subgroup& e);
std::vector<Elem> quadratic_elements(const Rep& v, const Subgroup& x);
bool has_quadratic_in(const Rep& v, const Subgroup& x);
/// Every non-identity x in X satisfies (x - 1)^(p-1) != 0 on V.
bool ps_condition(const Rep& v, const Subgroup& x);

struct Offender {
  Subgroup group;
  JValue j;
  bool best = false;
};

/// Every member of the elementary abelian poset with its j-value and
/// best-offender flag, for a faithful module.
struct OffenderAnalysis {
  std::vector<Offender> elementary;  // all non-trivial elementary abelian subgroups
  std::vector<Offender> offenders;   // j >= 1, i.e. exponent >= 0
  std::vector<Offender> best;        // the best offenders
  bool is_f_module() const { return !offenders.empty(); }
};

/// Throws Errc::faithfulness for an unfaithful module.
OffenderAnalysis analyze_offenders(const Rep& v);
std::vector<Offender> offenders(const Rep& v);
std::vector<Offender> best_offenders(const Rep& v);
/// Offenders exist iff best offenders exist; both are computed and compared.
bool is_f_module(const Rep& v);

/// j_E >= j_F for every subgroup 1 <= F <= E; E must be elementary abelian.
bool is_best_offender(const Rep& v, const Subgroup& e);

struct Replacement {
  Subgroup e;
  Subgroup f;
  JValue j_e;
  JValue j_f;
};

/// F = C_E([V,E]) for a best offender E. Checks F <= E, [V,F,F] = 0,
/// j_F = j_E and C_V(F) = [V,E] + C_V(E); a failed check is an integrity error.
Replacement timmesfeld_replace(const Rep& v, const Subgroup& e);

/// G semidirect V with (g,v)(h,w) = (gh, v*h + w).
class Semidirect {
 public:
  explicit Semidirect(const Rep& v);

  const Group& group() const { return group_; }
  Elem embed_group(Elem g) const;
  Elem embed_vector(std::span<const fp::Residue> v) const;
  std::vector<fp::Residue> vector_part(Elem x) const;
  Elem group_part(Elem x) const;

 private:
  Group group_;
  std::size_t base_order_ = 1;
  std::size_t dim_ = 0;
  fp::Residue p_ = 3;
};

/// Convenience wrapper around Semidirect.
Group semidirect_group(const Rep& v);

}  // namespace pgrp::modrep
