#pragma once

#include <optional>
#include <vector>

#include "planecubic/lattice.hpp"

namespace planecubic {

/// All v with b(v, v) = n in a positive-definite lattice, one per ±v pair
/// (first nonzero coordinate positive; the zero vector for n = 0), sorted
/// lexicographically. Bounds come from an exact rational Cholesky
/// decomposition, so the list is complete.
/// Negative n yields an empty list. Throws kNotPositiveDefinite.
std::vector<LatticeVector> vectors_of_norm(const Lattice& lattice, const Integer& n);

/// Norm-2 vectors. Throws kNotPositiveDefinite, kOddLattice.
std::vector<LatticeVector> short_roots(const Lattice& a0);

/// Norm-6 vectors v with b(v, w) ≡ 0 mod 3 for every basis vector w of a0.
std::vector<LatticeVector> long_roots(const Lattice& a0);

/// Variant of long_roots where divisibility by 3 is tested against every
/// basis vector of the ambient lattice. complement_basis expresses the basis
/// of A0 in ambient coordinates; returned vectors are in A0 coordinates.
std::vector<LatticeVector> long_roots_against_ambient(
    const Lattice& ambient, const std::vector<LatticeVector>& complement_basis);

/// Norm-6 vectors v of A0 = a^⊥ with v ≡ ±a mod 3·ambient, i.e. (v ± a)/3 is
/// a class w with b(w, w) = 1 and b(w, a) = 1. This is the divisibility
/// v·L0 ⊂ 3Z against the full primitive lattice, read inside a saturated
/// ambient lattice. Returned vectors are in A0 coordinates.
std::vector<LatticeVector> long_roots_in_coset(const Lattice& ambient, const LatticeVector& a,
                                               const std::vector<LatticeVector>& complement_basis);

struct IsotropicResult {
  bool exists = false;
  /// Primitive v with b(v, v) = 0 when exists.
  std::optional<LatticeVector> witness;
};

/// Rank-2 even lattice [[2a, b], [b, 2c]]: isotropic iff b² − 4ac is a square.
/// Throws kWrongRank, kOddLattice, kDegenerate.
IsotropicResult isotropic_exists(const Lattice& lattice);

}  // namespace planecubic
