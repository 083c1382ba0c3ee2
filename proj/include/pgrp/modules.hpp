#pragma once

// Module constructors used by the catalog and the suites.

#include <cstdint>
#include <random>
#include <vector>

#include "pgrp/modrep.hpp"

namespace pgrp::modrep {

Rep trivial_module(const DenseGroupPtr& g, std::size_t dim);
/// F_p G with basis indexed by elements: e_y * x = e_{yx}.
Rep regular_module(const DenseGroupPtr& g);
/// Permutation module on the right cosets of H.
Rep coset_module(const DenseGroupPtr& g, const Subgroup& h);
Rep direct_sum(const Rep& a, const Rep& b);
/// Restriction to an invariant subspace, in its echelon basis.
/// Throws Errc::argument if W is not invariant.
Rep submodule(const Rep& v, const fp::Subspace& w);
/// V/W on the non-pivot coordinates of W.
Rep quotient(const Rep& v, const fp::Subspace& w);
/// Smallest submodule containing the given vectors.
fp::Subspace spin(const Rep& v, const fp::Subspace& w);

/// Cyclic group generated by `generator` acting by one unipotent Jordan
/// block of each listed size. Block sizes must be at most the generator order.
Rep jordan_module(const DenseGroupPtr& g, const std::vector<std::size_t>& blocks);
/// EA(p,r) on F_p^(r+1): the i-th generator adds coordinate 0 to coordinate i+1.
Rep transvection_module(const DenseGroupPtr& g);
/// Natural module of the exponent-p Heisenberg group in its coordinate
/// encoding, as (m+2)x(m+2) unitriangular matrices.
Rep heisenberg_natural_module(const DenseGroupPtr& g, unsigned m);

/// Spin a uniformly random nonzero vector.
fp::Subspace random_spun_subspace(const Rep& v, std::mt19937_64& rng);

/// Sub- and quotient modules reached by repeatedly spinning random vectors,
/// up to `depth` levels below `v`. Zero-dimensional results are dropped.
std::vector<Rep> random_spun_family(const Rep& v, std::mt19937_64& rng, unsigned depth);

}  // namespace pgrp::modrep
