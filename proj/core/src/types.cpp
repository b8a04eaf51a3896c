#include "planecubic/types.hpp"

namespace planecubic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kDegenerate: return "Degenerate";
    case ErrorKind::kNotFiniteIndex: return "NotFiniteIndex";
    case ErrorKind::kOddLattice: return "OddLattice";
    case ErrorKind::kGroupTooLarge: return "GroupTooLarge";
    case ErrorKind::kCondition5Violated: return "Condition5Violated";
    case ErrorKind::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::kWrongRank: return "WrongRank";
    case ErrorKind::kBadEpsilon: return "BadEpsilon";
    case ErrorKind::kSignatureViolation: return "SignatureViolation";
    case ErrorKind::kZeroD: return "ZeroD";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kWrongVariable: return "WrongVariable";
    case ErrorKind::kNotHomogeneous: return "NotHomogeneous";
    case ErrorKind::kPatternViolation: return "PatternViolation";
    case ErrorKind::kWrongSize: return "WrongSize";
    case ErrorKind::kNotCubic: return "NotCubic";
    case ErrorKind::kNoPlane: return "NoPlane";
    case ErrorKind::kHalfIntegerCoefficient: return "HalfIntegerCoefficient";
    case ErrorKind::kBadPrime: return "BadPrime";
    case ErrorKind::kPrimeTooLarge: return "PrimeTooLarge";
    case ErrorKind::kFieldMismatch: return "FieldMismatch";
    case ErrorKind::kDegenerateForm: return "DegenerateForm";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_precondition(ErrorKind kind) {
  return kind != ErrorKind::kInvariantViolation;
}

Rational mod_rational(const Rational& x, const Rational& m) {
  Rational r = x - m * Rational(floor_rational(x / m));
  return r;
}

Integer floor_rational(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  Integer q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

std::string to_string(const Rational& x) {
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

}  // namespace planecubic
