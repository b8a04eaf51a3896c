#pragma once

#include <cstddef>
#include <vector>

#include "planecubic/types.hpp"

namespace planecubic {

/// U·G·V = D with U, V unimodular and D diagonal, d_1 | d_2 | …, d_i ≥ 0.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix v;
  IntMatrix d;

  std::vector<Integer> diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& g);

/// Row-style Hermite normal form of the row space of m: echelon rows with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix row_hermite_form(const IntMatrix& m);

/// Saturated integral basis of {x ∈ Zⁿ : m·x = 0}, as HNF rows.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

/// Exact inverse over Q. Throws kDegenerate if singular.
RationalMatrix rational_inverse(const IntMatrix& m);

}  // namespace planecubic
