#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planecubic/types.hpp"

namespace planecubic {

/// Coefficient field: the rationals (characteristic 0) or F_p, p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(); }
  /// Throws kBadPrime unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// "Q" or "Fp:<p>". Throws kParseError / kBadPrime.
  static Field parse(std::string_view text);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  std::string name() const;

  /// Canonical representative: unchanged over Q, an integer in [0, p) over F_p.
  /// Throws kBadPrime when a denominator vanishes mod p.
  Rational normalize(const Rational& x) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field() = default;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

enum class VariableSet {
  kPlane,    // X0, X1, X2
  kAmbient,  // Z1, Z2, Z3, X0, X1, X2
};

const std::vector<std::string>& variable_names(VariableSet set);
std::size_t variable_count(VariableSet set);

using Exponents = std::vector<unsigned>;

/// A homogeneous form. Terms are kept in lexicographic order with the first
/// declared variable largest (graded lex, since all terms share the degree);
/// zero coefficients are never stored.
class Form {
 public:
  using Terms = std::map<Exponents, Rational, std::greater<Exponents>>;

  Form(VariableSet variables, unsigned degree, Field field);

  static Form monomial(VariableSet variables, const Exponents& exponents,
                       const Rational& coefficient, Field field);
  /// The degree-1 form consisting of one variable.
  static Form variable(VariableSet variables, std::size_t index, Field field);

  VariableSet variables() const noexcept { return variables_; }
  unsigned degree() const noexcept { return degree_; }
  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of a monomial (zero if absent).
  Rational coefficient(const Exponents& exponents) const;

  /// Adds c·x^e. Throws kNotHomogeneous, kDimensionMismatch.
  void add_term(const Exponents& exponents, const Rational& coefficient);

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend Form operator*(const Rational& c, const Form& f);

  /// ∂/∂(variable index); the result has degree − 1 (degree 0 stays 0).
  Form derivative(std::size_t index) const;

  /// Re-expresses a plane form in the ambient variables.
  Form lift_to_ambient() const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  void require_compatible(const Form& other) const;

  VariableSet variables_;
  unsigned degree_;
  Field field_;
  Terms terms_;
};

/// Canonical text: terms in graded lex order joined by + / -, coefficient 1
/// omitted, "0" for the zero form. Over F_p coefficients are in [0, p).
std::string serialize_form(const Form& form);

/// Grammar: signed terms joined by + or -; a term is an optional integer or
/// integer/integer coefficient times variables with optional ^exponent, '*'
/// optional, whitespace ignored. The zero form takes zero_degree.
/// Throws kParseError (with position), kWrongVariable, kNotHomogeneous.
Form parse_form(std::string_view text, VariableSet variables, Field field,
                std::optional<unsigned> zero_degree = std::nullopt);

}  // namespace planecubic
