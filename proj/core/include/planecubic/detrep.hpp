#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planecubic/form.hpp"

namespace planecubic {

/// Symmetric n×n matrix of plane forms with the determinantal degree
/// pattern: linear entries in the leading (n−1)×(n−1) block, quadrics in the
/// last row and column, a cubic in the corner.
class FormMatrix {
 public:
  /// entries is row-major n×n. Throws kWrongSize, kNotSymmetric,
  /// kPatternViolation, kFieldMismatch, kWrongVariable.
  FormMatrix(std::size_t size, std::vector<Form> entries);

  /// All-zero matrix with the pattern degrees.
  static FormMatrix zero(std::size_t size, Field field);
  /// Degree required at (i, j).
  static unsigned pattern_degree(std::size_t size, std::size_t i, std::size_t j);

  std::size_t size() const noexcept { return size_; }
  const Field& field() const noexcept { return field_; }
  const Form& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size_ + j];
  }
  /// Sets (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Form& form);

  friend bool operator==(const FormMatrix&, const FormMatrix&) = default;

 private:
  void validate_entry(std::size_t i, std::size_t j, const Form& form) const;

  std::size_t size_;
  Field field_;
  std::vector<Form> entries_;
};

/// Determinant by cofactor expansion along the first row; homogeneous of
/// degree size + 2 for the pattern (6 for size 4).
Form det_form_matrix(const FormMatrix& m);

/// Σ_{i,j} Z_i Z_j L_ij + Σ_i 2 Z_i Q_i + H in (Z1, Z2, Z3, X0, X1, X2).
/// Throws kWrongSize unless size is 4.
Form build_cubic(const FormMatrix& m);

/// True iff F vanishes on the plane X0 = X1 = X2 = 0, i.e. no monomial is
/// pure in the Z variables. Throws kWrongVariable for plane forms.
bool contains_plane(const Form& cubic);

/// Inverse of build_cubic: the Gram matrix of the quadric bundle over the
/// plane. Throws kNotCubic, kNoPlane, kHalfIntegerCoefficient (char 2).
FormMatrix quadric_gram(const Form& cubic);

/// The discriminant sextic det(quadric_gram(F)).
Form discriminant_curve(const Form& cubic);

using ProjectivePoint = std::vector<std::uint64_t>;

struct ScanResult {
  bool smooth = true;
  /// First singular point in scan order (normalized: first nonzero
  /// coordinate is 1).
  std::optional<ProjectivePoint> witness;
  std::uint64_t points_scanned = 0;
};

inline constexpr std::uint64_t kDefaultScanPrimeCap = 7;

/// Points of P^(n−1)(F_p) in scan order: leading coordinate position
/// ascending, then the trailing coordinates lexicographically.
std::vector<ProjectivePoint> projective_points(std::size_t n, std::uint64_t p);

/// F and all partial derivatives vanish at the point, mod p.
/// Throws kBadPrime when F is not p-integral.
bool is_singular_point(const Form& form, const ProjectivePoint& point, std::uint64_t p);

/// Scans P²(F_p) for a common zero of F and its partials. A smooth result
/// certifies only the reduction mod p. Throws kBadPrime (p not prime, F not
/// p-integral or F ≡ 0 mod p), kWrongVariable.
ScanResult smooth_plane_curve_fp(const Form& form, std::uint64_t p);

/// Same scan over P⁵(F_p). Throws kBadPrime, kPrimeTooLarge (p > cap),
/// kWrongVariable.
ScanResult smooth_fourfold_fp(const Form& form, std::uint64_t p,
                              std::uint64_t prime_cap = kDefaultScanPrimeCap);

}  // namespace planecubic
