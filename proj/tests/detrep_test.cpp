#include "planecubic/detrep.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace planecubic {
namespace {

const Field kQ = Field::rationals();
const Field kF7 = Field::prime(7);
const Field kF101 = Field::prime(101);

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInvariantViolation;
}

Form plane(std::string_view text, Field field = kQ) {
  return parse_form(text, VariableSet::kPlane, field);
}

Form ambient(std::string_view text, Field field = kQ) {
  return parse_form(text, VariableSet::kAmbient, field);
}

FormMatrix diagonal_matrix() {
  FormMatrix m = FormMatrix::zero(4, kQ);
  m.set(0, 0, plane("X0"));
  m.set(1, 1, plane("X1"));
  m.set(2, 2, plane("X2"));
  m.set(3, 3, plane("X0 X1 X2"));
  return m;
}

TEST(FormMatrixTest, Pattern) {
  EXPECT_EQ(FormMatrix::pattern_degree(4, 0, 0), 1u);
  EXPECT_EQ(FormMatrix::pattern_degree(4, 2, 1), 1u);
  EXPECT_EQ(FormMatrix::pattern_degree(4, 3, 1), 2u);
  EXPECT_EQ(FormMatrix::pattern_degree(4, 0, 3), 2u);
  EXPECT_EQ(FormMatrix::pattern_degree(4, 3, 3), 3u);
  EXPECT_EQ(FormMatrix::pattern_degree(1, 0, 0), 3u);
}

TEST(FormMatrixTest, Validation) {
  EXPECT_EQ(kind_of([] { FormMatrix(0, {}); }), ErrorKind::kWrongSize);
  EXPECT_EQ(kind_of([] { FormMatrix(2, {plane("X0")}); }), ErrorKind::kWrongSize);
  EXPECT_EQ(kind_of([] { FormMatrix(1, {plane("X0")}); }), ErrorKind::kPatternViolation);
  EXPECT_EQ(kind_of([] {
              FormMatrix(2, {plane("X0"), plane("X1^2"), plane("X2^2"), plane("X0^3")});
            }),
            ErrorKind::kNotSymmetric);
  EXPECT_EQ(kind_of([] {
              FormMatrix(2, {plane("X0"), plane("X1^2", kF7), plane("X1^2", kF7), plane("X0^3")});
            }),
            ErrorKind::kFieldMismatch);
  EXPECT_EQ(kind_of([] { FormMatrix(1, {ambient("Z1 X0 X1")}); }), ErrorKind::kWrongVariable);
  FormMatrix m = FormMatrix::zero(4, kQ);
  EXPECT_EQ(kind_of([&] { m.set(0, 1, plane("X0^2")); }), ErrorKind::kPatternViolation);
  m.set(0, 1, plane("X2"));
  EXPECT_EQ(m(1, 0), plane("X2"));
}

TEST(DeterminantTest, Examples) {
  const Form d = det_form_matrix(diagonal_matrix());
  EXPECT_EQ(d, plane("X0^2 X1^2 X2^2"));
  EXPECT_EQ(d.degree(), 6u);
  const Form h = plane("X0^3 - 2 X1 X2^2");
  EXPECT_EQ(det_form_matrix(FormMatrix(1, {h})), h);
  EXPECT_TRUE(det_form_matrix(FormMatrix::zero(4, kQ)).is_zero());
  EXPECT_EQ(det_form_matrix(FormMatrix::zero(4, kQ)).degree(), 6u);
  // 2x2: X0·H − Q².
  const FormMatrix two(2, {plane("X0"), plane("X1^2"), plane("X1^2"), plane("X2^3")});
  EXPECT_EQ(det_form_matrix(two), plane("X0 X2^3 - X1^4"));
}

TEST(DeterminantTest, AgreesWithPermutationExpansion) {
  std::mt19937_64 rng(41);
  for (const Field& field : {kF7, kQ, kF101}) {
    for (std::size_t size = 1; size <= 5; ++size) {
      for (int trial = 0; trial < (size == 4 ? 20 : 5); ++trial) {
        const FormMatrix m = testing::random_patterned_matrix(size, field, rng);
        const Form d = det_form_matrix(m);
        EXPECT_EQ(d, testing::permutation_det(m)) << field.name() << " size " << size;
        EXPECT_EQ(d.degree(), size + 2);
      }
    }
  }
}

TEST(BuildCubicTest, Examples) {
  FormMatrix only_h = FormMatrix::zero(4, kQ);
  only_h.set(3, 3, plane("X0^3 + X1 X2^2"));
  EXPECT_EQ(build_cubic(only_h), ambient("X0^3 + X1 X2^2"));

  FormMatrix single = FormMatrix::zero(4, kQ);
  single.set(0, 1, plane("X0"));
  EXPECT_EQ(build_cubic(single), ambient("2 Z1 Z2 X0"));
  single.set(0, 3, plane("X1^2"));
  EXPECT_EQ(build_cubic(single), ambient("2 Z1 Z2 X0 + 2 Z1 X1^2"));
  single.set(2, 2, plane("-X2"));
  EXPECT_EQ(build_cubic(single), ambient("2 Z1 Z2 X0 - Z3^2 X2 + 2 Z1 X1^2"));

  EXPECT_EQ(kind_of([] { build_cubic(FormMatrix::zero(3, kQ)); }), ErrorKind::kWrongSize);
}

TEST(BuildCubicTest, ContainsPlane) {
  std::mt19937_64 rng(42);
  for (const Field& field : {kQ, kF7}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Form f = build_cubic(testing::random_patterned_matrix(4, field, rng));
      EXPECT_EQ(f.degree(), 3u);
      EXPECT_TRUE(contains_plane(f));
    }
  }
  EXPECT_FALSE(contains_plane(ambient("Z1^3")));
  EXPECT_FALSE(contains_plane(ambient("Z1^3 + Z2^3 + Z3^3 + X0^3 + X1^3 + X2^3")));
  EXPECT_TRUE(contains_plane(ambient("Z1^2 X0")));
  EXPECT_EQ(kind_of([] { contains_plane(plane("X0^3")); }), ErrorKind::kWrongVariable);
}

TEST(QuadricGramTest, Examples) {
  FormMatrix expected = FormMatrix::zero(4, kQ);
  expected.set(0, 0, plane("X0"));
  EXPECT_EQ(quadric_gram(ambient("Z1^2 X0")), expected);

  FormMatrix q_entry = FormMatrix::zero(4, kQ);
  q_entry.set(0, 3, plane("X0 X1 - X2^2"));
  EXPECT_EQ(quadric_gram(ambient("2 Z1 X0 X1 - 2 Z1 X2^2")), q_entry);

  // An odd cross coefficient halves exactly over Q.
  FormMatrix half = FormMatrix::zero(4, kQ);
  half.set(0, 1, plane("1/2 X2"));
  EXPECT_EQ(quadric_gram(ambient("Z1 Z2 X2")), half);

  EXPECT_EQ(kind_of([] { quadric_gram(ambient("Z1^2")); }), ErrorKind::kNotCubic);
  EXPECT_EQ(kind_of([] { quadric_gram(ambient("Z1^3 + X0^3")); }), ErrorKind::kNoPlane);
  EXPECT_EQ(kind_of([] { quadric_gram(ambient("Z1 Z2 X0", Field::prime(2))); }),
            ErrorKind::kHalfIntegerCoefficient);
}

TEST(QuadricGramTest, RoundTrip) {
  std::mt19937_64 rng(43);
  for (const Field& field : {kQ, kF101, kF7}) {
    for (int trial = 0; trial < 50; ++trial) {
      const FormMatrix m = testing::random_patterned_matrix(4, field, rng);
      EXPECT_EQ(quadric_gram(build_cubic(m)), m);
    }
  }
}

TEST(DiscriminantCurveTest, PathIndependence) {
  EXPECT_EQ(discriminant_curve(build_cubic(diagonal_matrix())), plane("X0^2 X1^2 X2^2"));
  std::mt19937_64 rng(44);
  for (const Field& field : {kQ, kF101}) {
    for (int trial = 0; trial < 50; ++trial) {
      const FormMatrix m = testing::random_patterned_matrix(4, field, rng);
      const Form c = discriminant_curve(build_cubic(m));
      EXPECT_EQ(c, det_form_matrix(m));
      EXPECT_EQ(c.degree(), 6u);
    }
  }
}

TEST(ProjectivePointsTest, CountAndOrder) {
  const auto p2 = projective_points(3, 7);
  EXPECT_EQ(p2.size(), 57u);
  EXPECT_EQ(p2.front(), (ProjectivePoint{1, 0, 0}));
  EXPECT_EQ(p2[1], (ProjectivePoint{1, 0, 1}));
  EXPECT_EQ(p2.back(), (ProjectivePoint{0, 0, 1}));
  EXPECT_EQ(projective_points(6, 7).size(), 19608u);
  EXPECT_EQ(projective_points(3, 2).size(), 7u);
  for (const auto& pt : p2) {
    const auto first = std::find_if(pt.begin(), pt.end(), [](auto x) { return x != 0; });
    ASSERT_NE(first, pt.end());
    EXPECT_EQ(*first, 1u);
  }
}

TEST(SmoothCurveTest, Examples) {
  const ScanResult fermat = smooth_plane_curve_fp(plane("X0^6 + X1^6 + X2^6"), 7);
  EXPECT_TRUE(fermat.smooth);
  EXPECT_FALSE(fermat.witness.has_value());
  EXPECT_EQ(fermat.points_scanned, 57u);

  const ScanResult two = smooth_plane_curve_fp(plane("X0^6 + X1^6 + X2^6"), 2);
  EXPECT_FALSE(two.smooth);
  ASSERT_TRUE(two.witness.has_value());
  EXPECT_TRUE(is_singular_point(plane("X0^6 + X1^6 + X2^6"), *two.witness, 2));

  const ScanResult square = smooth_plane_curve_fp(plane("X0^2 X1^2 X2^2"), 7);
  EXPECT_FALSE(square.smooth);
  EXPECT_EQ(square.witness, (ProjectivePoint{1, 0, 0}));

  // The scan works on rational forms with p-integral coefficients.
  EXPECT_TRUE(smooth_plane_curve_fp(plane("1/2 X0^2 + X1^2 + X2^2"), 7).smooth);
  EXPECT_TRUE(smooth_plane_curve_fp(plane("X0^6 + X1^6 + X2^6", kF7), 7).smooth);
}

TEST(SmoothCurveTest, Errors) {
  EXPECT_EQ(kind_of([] { smooth_plane_curve_fp(plane("X0^2"), 9); }), ErrorKind::kBadPrime);
  EXPECT_EQ(kind_of([] { smooth_plane_curve_fp(plane("1/7 X0^2 + X1^2"), 7); }),
            ErrorKind::kBadPrime);
  EXPECT_EQ(kind_of([] { smooth_plane_curve_fp(plane("7 X0^2 + 14 X1^2"), 7); }),
            ErrorKind::kBadPrime);
  EXPECT_EQ(kind_of([] { smooth_plane_curve_fp(ambient("Z1^3"), 7); }),
            ErrorKind::kWrongVariable);
  EXPECT_EQ(kind_of([] { smooth_plane_curve_fp(plane("X0", kF7), 5); }),
            ErrorKind::kBadPrime);
}

TEST(SmoothCurveTest, WitnessIsFirstSingularPoint) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const Form f = testing::random_plane_form(3, kF7, rng, 3);
    if (f.is_zero()) continue;
    const ScanResult r = smooth_plane_curve_fp(f, 7);
    std::optional<ProjectivePoint> first;
    for (const auto& pt : projective_points(3, 7))
      if (is_singular_point(f, pt, 7)) {
        first = pt;
        break;
      }
    EXPECT_EQ(r.witness, first);
    EXPECT_EQ(r.smooth, !first.has_value());
  }
}

TEST(SmoothFourfoldTest, Examples) {
  const Form fermat = ambient("Z1^3 + Z2^3 + Z3^3 + X0^3 + X1^3 + X2^3");
  const ScanResult r = smooth_fourfold_fp(fermat, 7);
  EXPECT_TRUE(r.smooth);
  EXPECT_EQ(r.points_scanned, 19608u);

  const ScanResult cone = smooth_fourfold_fp(ambient("Z1^2 X0"), 7);
  EXPECT_FALSE(cone.smooth);
  EXPECT_EQ(cone.witness, (ProjectivePoint{0, 1, 0, 0, 0, 0}));

  EXPECT_FALSE(smooth_fourfold_fp(fermat, 3).smooth);  // char 3: all partials vanish
  EXPECT_EQ(kind_of([&] { smooth_fourfold_fp(fermat, 11); }), ErrorKind::kPrimeTooLarge);
  EXPECT_TRUE(smooth_fourfold_fp(fermat, 11, 11).smooth);
  EXPECT_EQ(kind_of([&] { smooth_fourfold_fp(fermat, 4); }), ErrorKind::kBadPrime);
  EXPECT_EQ(kind_of([] { smooth_fourfold_fp(plane("X0^3"), 7); }), ErrorKind::kWrongVariable);
}

// A singular point of X off the plane (x ≠ 0) is a kernel vector (z, 1) of
// M(x) along which every derivative of M degenerates, so by Jacobi's formula
// the discriminant curve is singular at x.
TEST(SmoothFourfoldTest, OffPlaneSingularityProjectsToSingularCurvePoint) {
  std::mt19937_64 rng(46);
  // Forced case: H singular at (1:0:0) and Q_i(1,0,0) = 0 make X singular at
  // (0:0:0:1:0:0).
  for (int trial = 0; trial < 10; ++trial) {
    FormMatrix m = testing::random_patterned_matrix(4, kF7, rng);
    for (std::size_t i = 0; i < 3; ++i) {
      Form q = m(i, 3);
      q.add_term({2, 0, 0}, -q.coefficient({2, 0, 0}));
      m.set(i, 3, q);
    }
    Form h = m(3, 3);
    for (const Exponents& e : {Exponents{3, 0, 0}, Exponents{2, 1, 0}, Exponents{2, 0, 1}})
      h.add_term(e, -h.coefficient(e));
    m.set(3, 3, h);
    const Form x = build_cubic(m);
    ASSERT_TRUE(is_singular_point(x, {0, 0, 0, 1, 0, 0}, 7));
    EXPECT_TRUE(is_singular_point(discriminant_curve(x), {1, 0, 0}, 7));
  }
  // Random case: whatever the scan reports off the plane must project to a
  // singular point of the curve.
  int off_plane = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const FormMatrix m = testing::random_patterned_matrix(4, kF7, rng, 3);
    const Form x = build_cubic(m);
    const ScanResult r = smooth_fourfold_fp(x, 7);
    if (r.smooth) continue;
    const ProjectivePoint& w = *r.witness;
    const ProjectivePoint proj(w.begin() + 3, w.end());
    if (proj == ProjectivePoint{0, 0, 0}) continue;
    ++off_plane;
    EXPECT_TRUE(is_singular_point(det_form_matrix(m), proj, 7));
  }
  RecordProperty("off_plane_witnesses", off_plane);
}

}  // namespace
}  // namespace planecubic
