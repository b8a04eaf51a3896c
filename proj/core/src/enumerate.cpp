#include "planecubic/enumerate.hpp"

#include <algorithm>

#include <boost/multiprecision/integer.hpp>

namespace planecubic {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Q(x) = Σ_i d_i (x_i + Σ_{j>i} mu(i, j) x_j)².
struct RationalCholesky {
  std::vector<Rational> d;
  RationalMatrix mu;
};

RationalCholesky cholesky_or_throw(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(lattice(i, j));
  RationalCholesky ch{std::vector<Rational>(n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) <= 0) {
      throw Error(ErrorKind::kNotPositiveDefinite, "lattice is not positive definite");
    }
    ch.d[i] = a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) ch.mu(i, j) = a(i, j) / a(i, i);
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = i + 1; l < n; ++l) a(k, l) -= a(i, k) * a(i, l) / a(i, i);
  }
  return ch;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  // b > 0
  Integer q = a / b;
  if (a % b != 0 && a > 0) q += 1;
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

bool canonical_sign(const LatticeVector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return true;
}

class NormEnumerator {
 public:
  NormEnumerator(const Lattice& lattice, const Integer& target)
      : lattice_(lattice), chol_(cholesky_or_throw(lattice)), target_(target),
        x_(lattice.rank()) {}

  std::vector<LatticeVector> run() {
    if (lattice_.rank() == 0) {
      if (target_ == 0) found_.push_back({});
      return found_;
    }
    descend(lattice_.rank() - 1, Rational(target_));
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  void descend(std::size_t i, const Rational& budget) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < x_.size(); ++j)
      if (x_[j] != 0) center += chol_.mu(i, j) * Rational(x_[j]);
    // d_i (x + u/w)² ≤ budget  ⇔  (x·w + u)² ≤ floor(budget·w² / d_i).
    const Integer u = numerator(center);
    const Integer w = denominator(center);
    const Rational scaled = budget * Rational(w * w) / chol_.d[i];
    const Integer bound = floor_rational(scaled);
    if (bound < 0) return;
    if (i == 0) {
      solve_last(center, budget);
      return;
    }
    const Integer s = boost::multiprecision::sqrt(bound);
    const Integer lo = ceil_div(-s - u, w);
    const Integer hi = floor_div(s - u, w);
    for (Integer xi = lo; xi <= hi; ++xi) {
      x_[i] = xi;
      const Rational shifted = Rational(xi) + center;
      const Rational rest = budget - chol_.d[i] * shifted * shifted;
      if (rest < 0) continue;
      descend(i - 1, rest);
    }
    x_[i] = 0;
  }

  // Last coordinate: d_0 (x + center)² = budget has at most two solutions.
  void solve_last(const Rational& center, const Rational& budget) {
    const Rational t = budget / chol_.d[0];
    const Integer num_root = boost::multiprecision::sqrt(numerator(t));
    const Integer den_root = boost::multiprecision::sqrt(denominator(t));
    if (num_root * num_root != numerator(t) || den_root * den_root != denominator(t)) return;
    const Rational root(num_root, den_root);
    for (const Rational& x : {Rational(root - center), Rational(-root - center)}) {
      if (denominator(x) != 1) continue;
      x_[0] = numerator(x);
      if (canonical_sign(x_)) found_.push_back(x_);
      if (root == 0) break;
    }
    x_[0] = 0;
  }

  const Lattice& lattice_;
  RationalCholesky chol_;
  Integer target_;
  LatticeVector x_;
  std::vector<LatticeVector> found_;
};

void require_even(const Lattice& lattice) {
  if (!is_even(lattice)) throw Error(ErrorKind::kOddLattice, "root search needs an even lattice");
}

bool pairings_divisible_by_3(const LatticeVector& pairings) {
  return std::all_of(pairings.begin(), pairings.end(),
                     [](const Integer& x) { return x % 3 == 0; });
}

}  // namespace

std::vector<LatticeVector> vectors_of_norm(const Lattice& lattice, const Integer& n) {
  NormEnumerator enumerator(lattice, n);
  if (n < 0) return {};
  return enumerator.run();
}

std::vector<LatticeVector> short_roots(const Lattice& a0) {
  cholesky_or_throw(a0);
  require_even(a0);
  return vectors_of_norm(a0, 2);
}

std::vector<LatticeVector> long_roots(const Lattice& a0) {
  cholesky_or_throw(a0);
  require_even(a0);
  std::vector<LatticeVector> out;
  for (auto& v : vectors_of_norm(a0, 6))
    if (pairings_divisible_by_3(pairing_row(a0, v))) out.push_back(std::move(v));
  return out;
}

std::vector<LatticeVector> long_roots_against_ambient(
    const Lattice& ambient, const std::vector<LatticeVector>& complement_basis) {
  const Lattice a0 = sublattice(ambient, complement_basis);
  cholesky_or_throw(a0);
  require_even(a0);
  std::vector<LatticeVector> out;
  for (auto& v : vectors_of_norm(a0, 6)) {
    LatticeVector image(ambient.rank());
    for (std::size_t k = 0; k < v.size(); ++k)
      for (std::size_t c = 0; c < image.size(); ++c) image[c] += v[k] * complement_basis[k][c];
    if (pairings_divisible_by_3(pairing_row(ambient, image))) out.push_back(std::move(v));
  }
  return out;
}

std::vector<LatticeVector> long_roots_in_coset(const Lattice& ambient, const LatticeVector& a,
                                               const std::vector<LatticeVector>& complement_basis) {
  if (a.size() != ambient.rank()) {
    throw Error(ErrorKind::kDimensionMismatch, "a must match the lattice rank");
  }
  const Lattice a0 = sublattice(ambient, complement_basis);
  cholesky_or_throw(a0);
  require_even(a0);
  auto divisible = [](const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x % 3 == 0; });
  };
  std::vector<LatticeVector> out;
  for (auto& v : vectors_of_norm(a0, 6)) {
    LatticeVector plus(ambient.rank()), minus(ambient.rank());
    for (std::size_t c = 0; c < plus.size(); ++c) {
      for (std::size_t k = 0; k < v.size(); ++k) plus[c] += v[k] * complement_basis[k][c];
      minus[c] = plus[c] - a[c];
      plus[c] += a[c];
    }
    if (divisible(plus) || divisible(minus)) out.push_back(std::move(v));
  }
  return out;
}

IsotropicResult isotropic_exists(const Lattice& lattice) {
  if (lattice.rank() != 2) {
    throw Error(ErrorKind::kWrongRank, "isotropic search needs rank 2");
  }
  if (!is_even(lattice)) throw Error(ErrorKind::kOddLattice, "isotropic search needs an even lattice");
  const Integer a = lattice(0, 0) / 2;
  const Integer b = lattice(0, 1);
  const Integer c = lattice(1, 1) / 2;
  const Integer disc = b * b - 4 * a * c;
  if (disc == 0) throw Error(ErrorKind::kDegenerate, "rank-2 lattice is degenerate");
  if (disc < 0) return {};
  const Integer s = boost::multiprecision::sqrt(disc);
  if (s * s != disc) return {};

  LatticeVector v;
  if (a == 0) {
    v = {1, 0};
  } else if (c == 0) {
    v = {0, 1};
  } else {
    // a x² + b x y + c y² = 0 has the rational root x/y = (−b + s) / 2a.
    Integer x = -b + s;
    Integer y = 2 * a;
    const Integer g = boost::multiprecision::gcd(x, y);
    x /= g;
    y /= g;
    v = {x, y};
    if (!canonical_sign(v)) v = {-x, -y};
  }
  if (norm(lattice, v) != 0) {
    throw Error(ErrorKind::kInvariantViolation, "isotropic witness has nonzero norm");
  }
  return {true, std::move(v)};
}

}  // namespace planecubic
