#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planecubic/discgroup.hpp"
#include "planecubic/lattice.hpp"

namespace planecubic {

/// A positive-definite lattice of algebraic middle classes with the square of
/// the hyperplane class (h2) and the plane class (p) marked.
/// Requires b(h2, h2) = 3, b(p, p) = 3, b(h2, p) = 1.
class MarkedFourfold {
 public:
  /// Throws kDimensionMismatch, kNotPositiveDefinite, kInvariantViolation.
  MarkedFourfold(Lattice lattice, LatticeVector h2, LatticeVector p);

  const Lattice& lattice() const noexcept { return lattice_; }
  const LatticeVector& h2() const noexcept { return h2_; }
  const LatticeVector& p() const noexcept { return p_; }
  /// Residual quadric class h2 − p; b(q, q) = 4 and b(h2, q) = 2.
  LatticeVector q() const;

  /// Lattice with basis (h2, p, e_3, …) by default: h2 = e_1, p = e_2.
  static MarkedFourfold standard(Lattice lattice);

 private:
  Lattice lattice_;
  LatticeVector h2_;
  LatticeVector p_;
};

/// δ(t) = b(t, h2 − p).
Integer delta(const MarkedFourfold& m, const LatticeVector& t);

struct OddDelta {
  bool exists = false;
  /// Basis index with odd δ, when exists.
  std::optional<std::size_t> basis_index;
};

/// δ is linear, so it takes an odd value iff it is odd on some basis vector.
/// A cycle with odd δ means the fourfold is trivially rational.
OddDelta exists_odd_delta(const MarkedFourfold& m);

/// Rank-3 criterion: trivially rational iff |d(A(X))| is odd.
/// Throws kWrongRank.
bool is_trivially_rational_rank3(const Lattice& lattice);
bool is_trivially_rational_rank3(const MarkedFourfold& m);

/// det [[3, 2, a], [2, 4, c], [a, c, b]] computed by elimination.
Integer rk2_discriminant(const Integer& a, const Integer& b, const Integer& c);
/// The closed form −4a² + 8b + 4ca − 3c².
Integer rk2_discriminant_closed_form(const Integer& a, const Integer& b,
                                     const Integer& c);

/// |d(A(X))| = 4^(ε−1)·|d(NS(S))|; signs are dropped because the two lattices
/// differ by a (−1)-twist. Throws kBadEpsilon.
Integer ns_to_ax_disc(const Integer& d_ns, int epsilon);

struct FamilyParams {
  Integer d;
  Integer c;
};

/// [[2, d], [d, 2c]]. Throws kZeroD, kSignatureViolation (4c − d² ≥ 0).
Lattice build_L_dc(const FamilyParams& params);

enum class FamilyVerdict { kNotTriviallyRational, kUndetermined };

std::string_view to_string(FamilyVerdict verdict);

/// NotTriviallyRational for even d; odd d gives no conclusion.
FamilyVerdict classify_family(const FamilyParams& params);

/// Which divisibility condition defines a long root (see enumerate.hpp).
enum class LongRootScope { kCoset, kAgainstComplement, kAgainstAmbient };

std::string_view to_string(LongRootScope scope);

struct MayanskiyOptions {
  LongRootScope long_root_scope = LongRootScope::kCoset;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct ConditionResult {
  bool pass = false;
  std::string evidence;
};

struct ConditionReport {
  /// Conditions 1..6 at indices 0..5.
  std::array<ConditionResult, 6> conditions;
  /// Orthogonal complement of a (when computable).
  std::optional<Complement> complement;
  std::optional<int> milgram_residue;
  /// Inputs of rank other than 3 are evaluated but flagged.
  bool outside_rank3_scope = false;

  bool all_pass() const;
};

/// The six lattice conditions for the existence of a cubic fourfold with the
/// given A(X) and distinguished norm-3 class a:
///   1. b(a, a) = 3
///   2. A0 = a^⊥ is even
///   3. A0 has no short roots (norm 2)
///   4. A0 has no long roots (norm 6, 3-divisible in the chosen sense)
///   5. b(a, e)² − b(e, e) is even on every basis vector e
///   6. the form α ↦ b(α, a)² − b(α, α) on A_A has signature 0 mod 8
/// Throws kNotPositiveDefinite, kDimensionMismatch, kWrongRank (rank < 2).
ConditionReport mayanskiy_check(const Lattice& lattice, const LatticeVector& a,
                                const MayanskiyOptions& options = {});

struct PfaffianCandidate {
  /// Norm-10 vector oriented so that b(tau, h2) ≥ 0.
  LatticeVector tau;
  Integer with_h2;
  Integer with_p;
  /// b(tau, h2) = 4, the pairing of the pfaffian sublattice.
  bool matches_shape = false;
};

struct PfaffianResult {
  bool obstructed = false;
  std::vector<PfaffianCandidate> candidates;
};

/// A pfaffian cubic fourfold has a norm-10 class pairing 4 with h2; no norm-10
/// vector at all rules it out. Candidates do not decide pfaffian-ness.
/// Throws kWrongRank, kNotPositiveDefinite.
PfaffianResult pfaffian_obstruction(const MarkedFourfold& m);

}  // namespace planecubic
