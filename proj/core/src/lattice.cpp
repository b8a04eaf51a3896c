#include "planecubic/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

#include "planecubic/normal_form.hpp"

namespace planecubic {
namespace {

void check_length(const Lattice& lattice, std::size_t size) {
  if (size != lattice.rank()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "vector of length " + std::to_string(size) +
                    " used with lattice of rank " + std::to_string(lattice.rank()));
  }
}

}  // namespace

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) {
    throw Error(ErrorKind::kNotSquare, "Gram matrix must be square");
  }
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) {
        throw Error(ErrorKind::kNotSymmetric,
                    "gram[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] != gram[" + std::to_string(j) + "][" +
                        std::to_string(i) + "]");
      }
}

LatticeVector pairing_row(const Lattice& lattice, const LatticeVector& v) {
  check_length(lattice, v.size());
  const std::size_t n = lattice.rank();
  LatticeVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] != 0) out[i] += lattice(i, j) * v[j];
    }
  return out;
}

Integer bilinear(const Lattice& lattice, const LatticeVector& v,
                 const LatticeVector& w) {
  check_length(lattice, v.size());
  const LatticeVector gw = pairing_row(lattice, w);
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * gw[i];
  return s;
}

Integer norm(const Lattice& lattice, const LatticeVector& v) {
  return bilinear(lattice, v, v);
}

Rational bilinear(const Lattice& lattice, const RationalVector& v,
                  const RationalVector& w) {
  check_length(lattice, v.size());
  check_length(lattice, w.size());
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == 0 || lattice(i, j) == 0) continue;
      s += v[i] * Rational(lattice(i, j)) * w[j];
    }
  }
  return s;
}

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) throw Error(ErrorKind::kNotSquare, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer discriminant(const Lattice& lattice) { return determinant(lattice.gram()); }

Signature signature(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(lattice(i, j));

  // Congruence transforms only (Sylvester's law): the active block shrinks by
  // one index per pivot.
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  Signature sig;
  while (!active.empty()) {
    std::size_t pivot_pos = active.size();
    for (std::size_t k = 0; k < active.size(); ++k)
      if (a(active[k], active[k]) != 0) {
        pivot_pos = k;
        break;
      }
    if (pivot_pos == active.size()) {
      // All diagonal entries vanish. A nonzero off-diagonal entry b_ij means
      // e_i, e_j span a hyperbolic plane; replacing e_i by e_i + e_j gives a
      // nonzero diagonal 2·b_ij and the pair contributes (+1, −1).
      bool moved = false;
      for (std::size_t x = 0; x < active.size() && !moved; ++x)
        for (std::size_t y = x + 1; y < active.size(); ++y) {
          const std::size_t i = active[x];
          const std::size_t j = active[y];
          if (a(i, j) == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
          for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
          pivot_pos = x;
          moved = true;
          break;
        }
      if (!moved) {
        sig.zero += active.size();
        break;
      }
    }
    const std::size_t p = active[pivot_pos];
    const Rational pivot = a(p, p);
    (pivot > 0 ? sig.plus : sig.minus) += 1;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (std::size_t i : active) {
      if (a(i, p) == 0) continue;
      const Rational f = a(i, p) / pivot;
      for (std::size_t j : active) a(i, j) -= f * a(p, j);
      a(i, p) = 0;
    }
    for (std::size_t j : active) a(p, j) = 0;
  }
  return sig;
}

bool is_even(const Lattice& lattice) {
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (lattice(i, i) % 2 != 0) return false;
  return true;
}

bool is_positive_definite(const Lattice& lattice) {
  const Signature s = signature(lattice);
  return s.plus == lattice.rank();
}

Lattice rescale(const Lattice& lattice, const Integer& factor) {
  IntMatrix g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= factor;
  return Lattice(std::move(g));
}

Lattice direct_sum(const Lattice& first, const Lattice& second) {
  const std::size_t n1 = first.rank();
  const std::size_t n = n1 + second.rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) g(i, j) = first(i, j);
  for (std::size_t i = n1; i < n; ++i)
    for (std::size_t j = n1; j < n; ++j) g(i, j) = second(i - n1, j - n1);
  return Lattice(std::move(g));
}

Lattice sublattice(const Lattice& lattice,
                   const std::vector<LatticeVector>& basis) {
  const std::size_t k = basis.size();
  std::vector<LatticeVector> images;
  images.reserve(k);
  for (const auto& v : basis) images.push_back(pairing_row(lattice, v));
  IntMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Integer s = 0;
      for (std::size_t c = 0; c < lattice.rank(); ++c) s += basis[i][c] * images[j][c];
      g(i, j) = s;
    }
  return Lattice(std::move(g));
}

Complement orthogonal_complement(const Lattice& lattice,
                                 const std::vector<LatticeVector>& vectors) {
  const std::size_t n = lattice.rank();
  IntMatrix conditions(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const LatticeVector row = pairing_row(lattice, vectors[i]);
    for (std::size_t j = 0; j < n; ++j) conditions(i, j) = row[j];
  }
  std::vector<LatticeVector> basis = integer_kernel(conditions);
  Lattice complement = sublattice(lattice, basis);
  return {std::move(basis), std::move(complement)};
}

Integer sublattice_index(const Lattice& lattice,
                         const std::vector<LatticeVector>& sub_basis) {
  const std::size_t n = lattice.rank();
  if (sub_basis.size() != n) {
    throw Error(ErrorKind::kNotFiniteIndex,
                "sublattice basis has " + std::to_string(sub_basis.size()) +
                    " vectors, lattice rank is " + std::to_string(n));
  }
  IntMatrix coords(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    check_length(lattice, sub_basis[i].size());
    for (std::size_t j = 0; j < n; ++j) coords(i, j) = sub_basis[i][j];
  }
  Integer coord_det = determinant(coords);
  if (coord_det == 0) {
    throw Error(ErrorKind::kNotFiniteIndex, "sublattice basis is dependent");
  }
  if (coord_det < 0) coord_det = -coord_det;

  const Integer d = discriminant(lattice);
  if (d == 0) throw Error(ErrorKind::kDegenerate, "index formula needs d(L) != 0");
  const Integer d_sub = discriminant(sublattice(lattice, sub_basis));
  if (d_sub % d != 0) {
    throw Error(ErrorKind::kInvariantViolation, "d(L') not divisible by d(L)");
  }
  const Integer ratio = d_sub / d;
  const Integer root = boost::multiprecision::sqrt(ratio < 0 ? Integer(-ratio) : ratio);
  if (ratio < 0 || root * root != ratio) {
    throw Error(ErrorKind::kInvariantViolation,
                "d(L')/d(L) = " + ratio.str() + " is not a square");
  }
  if (root != coord_det) {
    throw Error(ErrorKind::kInvariantViolation,
                "index " + root.str() + " from discriminants disagrees with |det| " +
                    coord_det.str());
  }
  return root;
}

Lattice hyperbolic_u() { return Lattice(IntMatrix{{0, 1}, {1, 0}}); }

Lattice e8() {
  // Bourbaki nodes 1..8 stored at indices 0..7.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  const std::pair<std::size_t, std::size_t> edges[] = {
      {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& [a, b] : edges) {
    g(a - 1, b - 1) = -1;
    g(b - 1, a - 1) = -1;
  }
  return Lattice(std::move(g));
}

Lattice rank_one(const Integer& n) { return Lattice(IntMatrix{{n}}); }

Lattice k3_lattice() {
  const Lattice u = hyperbolic_u();
  const Lattice e8_neg = rescale(e8(), -1);
  return direct_sum(direct_sum(direct_sum(u, u), direct_sum(u, e8_neg)), e8_neg);
}

}  // namespace planecubic
