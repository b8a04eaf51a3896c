#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace planecubic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coordinates of a lattice element in the lattice basis.
using LatticeVector = std::vector<Integer>;
/// Coordinates of an element of L ⊗ Q (e.g. a dual-lattice generator).
using RationalVector = std::vector<Rational>;

enum class ErrorKind {
  // precondition failures (bad input)
  kNotSquare,
  kNotSymmetric,
  kDimensionMismatch,
  kDegenerate,
  kNotFiniteIndex,
  kOddLattice,
  kGroupTooLarge,
  kCondition5Violated,
  kNotPositiveDefinite,
  kWrongRank,
  kBadEpsilon,
  kSignatureViolation,
  kZeroD,
  kParseError,
  kWrongVariable,
  kNotHomogeneous,
  kPatternViolation,
  kWrongSize,
  kNotCubic,
  kNoPlane,
  kHalfIntegerCoefficient,
  kBadPrime,
  kPrimeTooLarge,
  kFieldMismatch,
  kDegenerateForm,
  // internal consistency failure
  kInvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by the caller's input rather than by a broken
/// internal invariant.
bool is_precondition(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Dense row-major matrix. Used with Integer and Rational entries.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw Error(ErrorKind::kNotSquare, "ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a matrix from nested rows; throws kNotSquare on ragged input.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) {
        throw Error(ErrorKind::kNotSquare, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorKind::kDimensionMismatch, "matrix product shapes");
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Reduces x into [0, m) for a positive rational modulus m.
Rational mod_rational(const Rational& x, const Rational& m);

/// "r/s" (or "r" when s = 1).
std::string to_string(const Rational& x);

/// Floor of a rational as an Integer.
Integer floor_rational(const Rational& x);

}  // namespace planecubic
