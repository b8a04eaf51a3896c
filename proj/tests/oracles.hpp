#pragma once

// Independent brute-force routes used as test oracles. Nothing here calls the
// library code path it is compared against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "planecubic/detrep.hpp"
#include "planecubic/lattice.hpp"

namespace planecubic::testing {

using SmallMatrix = std::vector<std::vector<std::int64_t>>;
using SmallVector = std::vector<std::int64_t>;

inline Lattice to_lattice(const SmallMatrix& g) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : g) rows.emplace_back(r.begin(), r.end());
  return Lattice(IntMatrix::from_rows(rows));
}

inline LatticeVector to_vector(const SmallVector& v) { return {v.begin(), v.end()}; }

inline std::int64_t small_norm(const SmallMatrix& g, const SmallVector& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * g[i][j] * v[j];
  return s;
}

/// Determinant by permutation expansion (rank ≤ 6).
inline std::int64_t permutation_det(const SmallMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= g[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// (G⁻¹)_ii = cofactor_ii / det.
inline double inverse_diagonal(const SmallMatrix& g, std::size_t i) {
  SmallMatrix minor;
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (r == i) continue;
    SmallVector row;
    for (std::size_t c = 0; c < g.size(); ++c)
      if (c != i) row.push_back(g[r][c]);
    minor.push_back(row);
  }
  const double cof = minor.empty() ? 1.0 : static_cast<double>(permutation_det(minor));
  return cof / static_cast<double>(permutation_det(g));
}

/// All v with vᵀGv = n in the box |v_i| ≤ ceil(sqrt(n·(G⁻¹)_ii)) + 1, one per
/// ± pair (first nonzero coordinate positive), sorted.
inline std::vector<SmallVector> box_vectors_of_norm(const SmallMatrix& g, std::int64_t n) {
  const std::size_t rank = g.size();
  std::vector<std::int64_t> bound(rank);
  for (std::size_t i = 0; i < rank; ++i)
    bound[i] = static_cast<std::int64_t>(std::ceil(std::sqrt(n * inverse_diagonal(g, i)))) + 1;
  std::vector<SmallVector> out;
  SmallVector v(rank);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rank) {
      if (small_norm(g, v) != n) return;
      for (auto x : v) {
        if (x == 0) continue;
        if (x > 0) out.push_back(v);
        return;
      }
      out.push_back(v);  // zero vector
      return;
    }
    for (std::int64_t x = -bound[i]; x <= bound[i]; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Random unimodular matrix as a product of elementary operations.
inline SmallMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12) {
  SmallMatrix u(n, SmallVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (n < 2) {
    if (rng() % 2) u[0][0] = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (j + 1) % n;
    const int c = coef(rng);
    for (std::size_t r = 0; r < n; ++r) u[r][i] += c * u[r][j];  // column op
    if (rng() % 5 == 0) std::swap(u[i], u[j]);
  }
  return u;
}

inline SmallMatrix congruent(const SmallMatrix& g, const SmallMatrix& u) {
  const std::size_t n = g.size();
  SmallMatrix out(n, SmallVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[i][j] += u[k][i] * g[k][l] * u[l][j];
  return out;
}

/// Random even positive-definite Gram matrix: AᵀA scaled to an even diagonal
/// plus a shift, retried until the leading minors are positive.
inline SmallMatrix random_even_positive_definite(std::size_t n, std::mt19937_64& rng,
                                                 int entry_bound = 3) {
  std::uniform_int_distribution<int> coef(-entry_bound, entry_bound);
  while (true) {
    SmallMatrix a(n, SmallVector(n));
    for (auto& row : a)
      for (auto& x : row) x = coef(rng);
    SmallMatrix g(n, SmallVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) g[i][j] += a[k][i] * a[k][j];
    for (std::size_t i = 0; i < n; ++i) {
      g[i][i] += 1 + static_cast<std::int64_t>(rng() % 3);
      if (g[i][i] % 2) g[i][i] += 1;
    }
    bool positive = true;
    for (std::size_t k = 1; k <= n && positive; ++k) {
      SmallMatrix lead(k, SmallVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead[i][j] = g[i][j];
      positive = permutation_det(lead) > 0;
    }
    if (positive) return g;
  }
}

/// Determinant of a matrix of forms by the Leibniz permutation sum.
inline Form permutation_det(const FormMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::optional<Form> total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Form term = m(0, perm[0]);
    for (std::size_t i = 1; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2) term = -term;
    if (total) {
      *total += term;
    } else {
      total = term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *total;
}

/// Random plane form of the given degree with coefficients in [-bound, bound].
inline Form random_plane_form(unsigned degree, Field field, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  Form f(VariableSet::kPlane, degree, field);
  for (unsigned a = 0; a <= degree; ++a)
    for (unsigned b = 0; a + b <= degree; ++b) f.add_term({a, b, degree - a - b}, coef(rng));
  return f;
}

inline FormMatrix random_patterned_matrix(std::size_t size, Field field, std::mt19937_64& rng,
                                          int bound = 9) {
  FormMatrix m = FormMatrix::zero(size, field);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j)
      m.set(i, j, random_plane_form(FormMatrix::pattern_degree(size, i, j), field, rng, bound));
  return m;
}

}  // namespace planecubic::testing
