#include "planecubic/discgroup.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace planecubic {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Integer lcm_int(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

bool is_integral(const Rational& x) { return denominator(x) == 1; }

}  // namespace

Integer DiscriminantGroup::order() const {
  Integer p = 1;
  for (const auto& d : invariant_factors) p *= d;
  return p;
}

DiscriminantGroup discriminant_group(const Lattice& lattice) {
  const SmithDecomposition snf = smith_normal_form(lattice.gram());
  const std::size_t n = lattice.rank();
  DiscriminantGroup group;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = snf.d(i, i);
    if (d == 0) throw Error(ErrorKind::kDegenerate, "Gram matrix is singular");
    if (d == 1) continue;
    RationalVector g(n);
    for (std::size_t r = 0; r < n; ++r) g[r] = Rational(snf.v(r, i), d);
    group.invariant_factors.push_back(d);
    group.generators.push_back(std::move(g));
  }
  return group;
}

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Integer> orders,
                                         std::vector<Rational> q,
                                         RationalMatrix b)
    : orders_(std::move(orders)), q_(std::move(q)), b_(std::move(b)) {
  const std::size_t r = orders_.size();
  if (q_.size() != r || b_.rows() != r || b_.cols() != r) {
    throw Error(ErrorKind::kInvariantViolation, "finite form tables have inconsistent sizes");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (orders_[i] <= 1) {
      throw Error(ErrorKind::kInvariantViolation, "generator orders must exceed 1");
    }
    q_[i] = mod_rational(q_[i], 2);
    for (std::size_t j = 0; j < r; ++j) b_(i, j) = mod_rational(b_(i, j), 1);
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (mod_rational(q_[i] - b_(i, i), 1) != 0) {
      throw Error(ErrorKind::kInvariantViolation,
                  "q(g) and b(g, g) disagree mod Z on generator " + std::to_string(i));
    }
    // d_i·g_i = 0 forces d_i²·q_i ∈ 2Z and d_i·b_ij ∈ Z.
    if (mod_rational(q_[i] * Rational(orders_[i] * orders_[i]), 2) != 0) {
      throw Error(ErrorKind::kInvariantViolation,
                  "q is not well defined on a cyclic factor " + std::to_string(i));
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (b_(i, j) != b_(j, i)) {
        throw Error(ErrorKind::kInvariantViolation, "b is not symmetric");
      }
      if (!is_integral(b_(i, j) * Rational(orders_[i]))) {
        throw Error(ErrorKind::kInvariantViolation, "b has a denominator not dividing the order");
      }
    }
  }
}

Integer FiniteQuadraticForm::group_order() const {
  Integer p = 1;
  for (const auto& d : orders_) p *= d;
  return p;
}

Rational FiniteQuadraticForm::value(const std::vector<Integer>& x) const {
  if (x.size() != orders_.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "coefficient vector length");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    s += Rational(x[i] * x[i]) * q_[i];
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j] != 0) s += Rational(2 * x[i] * x[j]) * b_(i, j);
  }
  return mod_rational(s, 2);
}

Rational FiniteQuadraticForm::pairing(const std::vector<Integer>& x,
                                      const std::vector<Integer>& y) const {
  if (x.size() != orders_.size() || y.size() != orders_.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "coefficient vector length");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (x[i] != 0 && y[j] != 0) s += Rational(x[i] * y[j]) * b_(i, j);
  return mod_rational(s, 1);
}

FiniteQuadraticForm orthogonal_sum(const FiniteQuadraticForm& first,
                                   const FiniteQuadraticForm& second) {
  const std::size_t r1 = first.generator_count();
  const std::size_t r = r1 + second.generator_count();
  std::vector<Integer> orders = first.orders();
  orders.insert(orders.end(), second.orders().begin(), second.orders().end());
  std::vector<Rational> q = first.q_values();
  q.insert(q.end(), second.q_values().begin(), second.q_values().end());
  RationalMatrix b(r, r);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r1; ++j) b(i, j) = first.b_values()(i, j);
  for (std::size_t i = r1; i < r; ++i)
    for (std::size_t j = r1; j < r; ++j) b(i, j) = second.b_values()(i - r1, j - r1);
  return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
}

FiniteQuadraticForm discriminant_form(const Lattice& lattice) {
  if (!is_even(lattice)) {
    throw Error(ErrorKind::kOddLattice, "discriminant form needs an even lattice");
  }
  const DiscriminantGroup group = discriminant_group(lattice);
  const std::size_t r = group.generators.size();
  std::vector<Rational> q(r);
  RationalMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      b(i, j) = bilinear(lattice, group.generators[i], group.generators[j]);
      if (i == j) q[i] = b(i, i);
    }
  FiniteQuadraticForm form(group.invariant_factors, std::move(q), std::move(b));

  // Polarization identity on generator pairs, evaluated on the lattice side.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      RationalVector sum = group.generators[i];
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += group.generators[j][k];
      const Rational lhs = bilinear(lattice, sum, sum) - form.q_values()[i] -
                           form.q_values()[j] - 2 * form.b_values()(i, j);
      if (mod_rational(lhs, 2) != 0) {
        throw Error(ErrorKind::kInvariantViolation, "polarization identity fails");
      }
    }
  return form;
}

std::size_t first_condition5_failure(const Lattice& lattice, const LatticeVector& a) {
  const LatticeVector pairings = pairing_row(lattice, a);
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const Integer f = pairings[i] * pairings[i] - lattice(i, i);
    if (f % 2 != 0) return i;
  }
  return lattice.rank();
}

FiniteQuadraticForm mayanskiy_q(const Lattice& lattice, const LatticeVector& a) {
  const std::size_t bad = first_condition5_failure(lattice, a);
  const DiscriminantGroup group = discriminant_group(lattice);
  const std::size_t r = group.generators.size();
  // On the trivial group the form is the zero form whatever a is.
  if (r == 0) return FiniteQuadraticForm({}, {}, RationalMatrix(0, 0));
  if (bad != lattice.rank()) {
    throw Error(ErrorKind::kCondition5Violated,
                "b(a, e)^2 - b(e, e) is odd for basis vector e" + std::to_string(bad + 1));
  }
  const RationalVector a_rational(a.begin(), a.end());

  std::vector<Rational> along_a(r);
  for (std::size_t i = 0; i < r; ++i) {
    along_a[i] = bilinear(lattice, group.generators[i], a_rational);
    if (!is_integral(along_a[i])) {
      throw Error(ErrorKind::kInvariantViolation, "dual generator pairs non-integrally with a");
    }
  }
  std::vector<Rational> q(r);
  RationalMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational inner = bilinear(lattice, group.generators[i], group.generators[j]);
      b(i, j) = along_a[i] * along_a[j] - inner;
      if (i == j) q[i] = b(i, i);
    }
  return FiniteQuadraticForm(group.invariant_factors, std::move(q), std::move(b));
}

GaussSum gauss_sum(const FiniteQuadraticForm& form, std::uint64_t cap) {
  const std::size_t r = form.generator_count();
  // Every value q(x) is k/N mod 2 for the common denominator N; tally the
  // residues k exactly and exponentiate once per residue class.
  Integer common = 1;
  for (std::size_t i = 0; i < r; ++i) {
    common = lcm_int(common, denominator(form.q_values()[i]));
    for (std::size_t j = i + 1; j < r; ++j)
      common = lcm_int(common, denominator(form.b_values()(i, j)));
  }
  if (common > (Integer(1) << 30)) {
    throw Error(ErrorKind::kGroupTooLarge, "phase denominator too large");
  }
  const auto n = common.convert_to<std::int64_t>();
  const std::int64_t modulus = 2 * n;
  std::vector<std::int64_t> q_scaled(r);
  std::vector<std::int64_t> b_scaled(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    q_scaled[i] = (numerator(form.q_values()[i] * Rational(common)) % modulus).convert_to<std::int64_t>();
    for (std::size_t j = 0; j < r; ++j)
      b_scaled[i * r + j] =
          (numerator(2 * form.b_values()(i, j) * Rational(common)) % modulus)
              .convert_to<std::int64_t>();
  }

  std::vector<std::uint64_t> tally(static_cast<std::size_t>(modulus));
  std::vector<std::int64_t> x(r);
  std::uint64_t elements = 0;
  for_each_element(form, cap, [&](const std::vector<Integer>& coeffs) {
    for (std::size_t i = 0; i < r; ++i) x[i] = coeffs[i].convert_to<std::int64_t>();
    // All residues stay below 2^31, so every product fits in 64 bits.
    std::int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (x[i] == 0) continue;
      const std::int64_t xi = x[i] % modulus;
      s = (s + xi * xi % modulus * q_scaled[i]) % modulus;
      for (std::size_t j = i + 1; j < r; ++j) {
        if (x[j] == 0) continue;
        const std::int64_t xij = xi * (x[j] % modulus) % modulus;
        s = (s + xij * b_scaled[i * r + j]) % modulus;
      }
    }
    if (s < 0) s += modulus;
    ++tally[static_cast<std::size_t>(s)];
    ++elements;
  });

  long double re = 0.0L;
  long double im = 0.0L;
  for (std::int64_t k = 0; k < modulus; ++k) {
    const std::uint64_t c = tally[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const long double angle =
        std::numbers::pi_v<long double> * static_cast<long double>(k) /
        static_cast<long double>(n);
    re += static_cast<long double>(c) * std::cos(angle);
    im += static_cast<long double>(c) * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im), elements};
}

int milgram_signature(const FiniteQuadraticForm& form, std::uint64_t cap) {
  const GaussSum sum = gauss_sum(form, cap);
  const double radius = std::sqrt(static_cast<double>(sum.elements));
  const double angle = std::atan2(sum.imag, sum.real);
  int sigma = static_cast<int>(std::lround(angle / (std::numbers::pi / 4.0)));
  sigma = ((sigma % 8) + 8) % 8;
  const std::complex<double> expected =
      std::polar(radius, std::numbers::pi * sigma / 4.0);
  const double deviation = std::abs(std::complex<double>(sum.real, sum.imag) - expected);
  if (deviation > kGaussSumTolerance * radius) {
    throw Error(ErrorKind::kDegenerateForm,
                "Gauss sum (" + std::to_string(sum.real) + ", " +
                    std::to_string(sum.imag) + ") is not sqrt|A| on an eighth-root ray");
  }
  return sigma;
}

}  // namespace planecubic
