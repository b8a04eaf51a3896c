#include "planecubic/normal_form.hpp"

#include <algorithm>
#include <utility>

namespace planecubic {
namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Floor division for cpp_int (which truncates toward zero).
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row_target += factor * row_source
void add_row(IntMatrix& m, std::size_t target, std::size_t source,
             const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += factor * m(source, c);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source,
             const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) += factor * m(r, source);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

// Applies the unimodular 2x2 transform [[p, q], [r, s]] to rows i, j.
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& p,
                  const Integer& q, const Integer& r, const Integer& s) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer a = m(i, c);
    Integer b = m(j, c);
    m(i, c) = p * a + q * b;
    m(j, c) = r * a + s * b;
  }
}

// g = x*a + y*b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x,
                  Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quotient * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal()) r += (x != 0);
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& g) {
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();
  IntMatrix d = g;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = abs_int(d(i, j));
          if (!found || a < best) {
            best = a;
            pr = i;
            pc = j;
            found = true;
          }
        }
      if (!found) break;
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer f = floor_div(d(i, t), d(t, t));
        add_row(d, i, t, -f);
        add_row(u, i, t, -f);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer f = floor_div(d(t, j), d(t, t));
        add_col(d, j, t, -f);
        add_col(v, j, t, -f);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, Integer(1));
            add_row(u, t, i, Integer(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(v), std::move(d)};
}

IntMatrix row_hermite_form(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Integer g, x, y;
      extended_gcd(m(pivot_row, c), m(i, c), g, x, y);
      Integer a = m(pivot_row, c) / g;
      Integer b = m(i, c) / g;
      // [[x, y], [-b, a]] has determinant x*a + y*b = 1.
      combine_rows(m, pivot_row, i, x, y, -b, a);
    }
    if (m(pivot_row, c) == 0) continue;
    if (m(pivot_row, c) < 0) negate_row(m, pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer f = floor_div(m(i, c), m(pivot_row, c));
      add_row(m, i, pivot_row, -f);
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  IntMatrix out(pivot_row, cols);
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) {
    std::vector<std::vector<Integer>> basis;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> e(n);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const SmithDecomposition snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  // D is diagonal with its nonzero entries first, so m·x = 0 iff
  // (V⁻¹x)_j = 0 for j < r: the trailing columns of V span the kernel.
  IntMatrix raw(n - r, n);
  for (std::size_t k = r; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) raw(k - r, i) = snf.v(i, k);
  const IntMatrix h = row_hermite_form(raw);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t i = 0; i < h.rows(); ++i) basis.push_back(h.row(i));
  return basis;
}

RationalMatrix rational_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::kNotSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorKind::kDegenerate, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

}  // namespace planecubic
