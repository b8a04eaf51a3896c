#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "planecubic/lattice.hpp"
#include "planecubic/normal_form.hpp"
#include "planecubic/types.hpp"

namespace planecubic {

/// A_L = L*/L presented by cyclic generators of the given orders.
struct DiscriminantGroup {
  /// Orders d_i > 1 with d_1 | d_2 | …
  std::vector<Integer> invariant_factors;
  /// Rational coordinates (in the basis of L) of generators in L*.
  std::vector<RationalVector> generators;

  Integer order() const;
};

/// Throws kDegenerate.
DiscriminantGroup discriminant_group(const Lattice& lattice);

/// A finite quadratic form on ⊕ Z/d_i, stored as q on generators (mod 2Z)
/// and the bilinear pairing on generator pairs (mod Z).
class FiniteQuadraticForm {
 public:
  /// Reduces q into [0, 2) and b into [0, 1); checks symmetry of b, that
  /// b(g_i, g_i) ≡ q(g_i) mod Z, and the denominators allowed by the orders.
  /// Throws kInvariantViolation.
  FiniteQuadraticForm(std::vector<Integer> orders, std::vector<Rational> q,
                      RationalMatrix b);

  const std::vector<Integer>& orders() const noexcept { return orders_; }
  const std::vector<Rational>& q_values() const noexcept { return q_; }
  const RationalMatrix& b_values() const noexcept { return b_; }
  std::size_t generator_count() const noexcept { return orders_.size(); }
  Integer group_order() const;

  /// q(Σ x_i g_i) in [0, 2).
  Rational value(const std::vector<Integer>& coefficients) const;
  /// b(Σ x_i g_i, Σ y_j g_j) in [0, 1).
  Rational pairing(const std::vector<Integer>& x,
                   const std::vector<Integer>& y) const;

  friend bool operator==(const FiniteQuadraticForm&,
                         const FiniteQuadraticForm&) = default;

 private:
  std::vector<Integer> orders_;
  std::vector<Rational> q_;
  RationalMatrix b_;
};

/// Orthogonal sum of two finite forms (generators concatenated).
FiniteQuadraticForm orthogonal_sum(const FiniteQuadraticForm& first,
                                   const FiniteQuadraticForm& second);

/// q_L on A_L. Throws kOddLattice, kDegenerate, kInvariantViolation.
FiniteQuadraticForm discriminant_form(const Lattice& lattice);

/// The form α ↦ (b(α, a))² − b(α, α) mod 2Z on A_A, with polarization
/// b(α, a)·b(β, a) − b(α, β) mod Z. Well defined on A*/A exactly when
/// b(a, e)² − b(e, e) is even for every basis vector e.
/// Throws kCondition5Violated, kDegenerate, kDimensionMismatch.
FiniteQuadraticForm mayanskiy_q(const Lattice& lattice, const LatticeVector& a);

/// Index of the first basis vector e with b(a, e)² − b(e, e) odd, or rank()
/// if there is none.
std::size_t first_condition5_failure(const Lattice& lattice, const LatticeVector& a);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;
inline constexpr double kGaussSumTolerance = 1e-6;

struct GaussSum {
  double real = 0.0;
  double imag = 0.0;
  /// Number of group elements summed.
  std::uint64_t elements = 0;
};

/// Σ_{x ∈ A} exp(πi q(x)). Phases are reduced exactly before the final
/// exponential. Throws kGroupTooLarge.
GaussSum gauss_sum(const FiniteQuadraticForm& form,
                   std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// σ ∈ {0..7} with Gauss sum = √|A|·exp(2πiσ/8). Throws kGroupTooLarge and
/// kDegenerateForm (sum off every eighth-root ray by more than the tolerance).
int milgram_signature(const FiniteQuadraticForm& form,
                      std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Calls visit(coefficients) for every element of the group in mixed-radix
/// order. Throws kGroupTooLarge.
template <typename Visit>
void for_each_element(const FiniteQuadraticForm& form, std::uint64_t cap,
                      Visit&& visit);

}  // namespace planecubic

#include "planecubic/detail/discgroup_impl.hpp"
