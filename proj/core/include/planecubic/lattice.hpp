#pragma once

#include <cstddef>
#include <vector>

#include "planecubic/types.hpp"

namespace planecubic {

/// An integral lattice given by its symmetric Gram matrix. Degenerate Gram
/// matrices are allowed; operations that need non-degeneracy say so.
class Lattice {
 public:
  /// Throws kNotSquare / kNotSymmetric.
  explicit Lattice(IntMatrix gram);

  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return gram_.rows(); }

  const Integer& operator()(std::size_t i, std::size_t j) const {
    return gram_(i, j);
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  IntMatrix gram_;
};

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// vᵀ·G·w. Throws kDimensionMismatch.
Integer bilinear(const Lattice& lattice, const LatticeVector& v,
                 const LatticeVector& w);

/// b(v, v).
Integer norm(const Lattice& lattice, const LatticeVector& v);

/// Bilinear form extended to L ⊗ Q.
Rational bilinear(const Lattice& lattice, const RationalVector& v,
                  const RationalVector& w);

/// The pairing b(v, ·) against each basis vector, i.e. G·v.
LatticeVector pairing_row(const Lattice& lattice, const LatticeVector& v);

/// Exact determinant of the Gram matrix (fraction-free elimination).
Integer discriminant(const Lattice& lattice);

/// Determinant of an arbitrary square integer matrix (Bareiss).
Integer determinant(const IntMatrix& m);

/// Sylvester signature from exact rational congruence diagonalization.
Signature signature(const Lattice& lattice);

bool is_even(const Lattice& lattice);
bool is_positive_definite(const Lattice& lattice);

Lattice rescale(const Lattice& lattice, const Integer& factor);
Lattice direct_sum(const Lattice& first, const Lattice& second);

/// Gram matrix of the sublattice spanned by the given vectors.
Lattice sublattice(const Lattice& lattice,
                   const std::vector<LatticeVector>& basis);

struct Complement {
  /// Saturated basis of the complement, in coordinates of the ambient lattice.
  std::vector<LatticeVector> basis;
  Lattice lattice;
};

/// {v ∈ L : b(v, w) = 0 for all w in vectors}, as a primitive sublattice.
Complement orthogonal_complement(const Lattice& lattice,
                                 const std::vector<LatticeVector>& vectors);

/// [L : L'] for a full-rank sublattice L'. Computed from the discriminant
/// ratio d(L')/d(L) = [L : L']² and checked against |det| of the coordinate
/// matrix. Throws kNotFiniteIndex, kDegenerate, kInvariantViolation.
Integer sublattice_index(const Lattice& lattice,
                         const std::vector<LatticeVector>& sub_basis);

Lattice hyperbolic_u();
/// Cartan matrix of E8, node order following the Bourbaki labelling
/// 1-3-4-5-6-7-8 along the long arm with node 2 attached to node 4.
Lattice e8();
Lattice rank_one(const Integer& n);
/// U³ ⊕ E8(−1)², rank 22, signature (3, 19).
Lattice k3_lattice();

}  // namespace planecubic
