#include "planecubic/detrep.hpp"

#include <numeric>

namespace planecubic {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Determinant of the sub-matrix on `rows` × (columns with mask bit clear).
Form cofactor_det(const FormMatrix& m, std::size_t row, std::uint32_t used_columns,
                  const Field& field) {
  const std::size_t n = m.size();
  if (row == n) return Form::monomial(VariableSet::kPlane, {0, 0, 0}, 1, field);
  std::optional<Form> total;
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (used_columns & (1u << col)) continue;
    Form term = m(row, col) * cofactor_det(m, row + 1, used_columns | (1u << col), field);
    if (sign < 0) term = -term;
    sign = -sign;
    if (total) {
      *total += term;
    } else {
      total = std::move(term);
    }
  }
  return *total;
}

struct CompiledTerm {
  std::uint64_t coefficient;
  Exponents exponents;
};

struct CompiledForm {
  std::vector<CompiledTerm> terms;
  unsigned degree = 0;
};

std::uint64_t reduce_mod(const Rational& c, std::uint64_t p) {
  Integer num = numerator(c) % p;
  Integer den = denominator(c) % p;
  if (num < 0) num += p;
  if (den == 0) {
    throw Error(ErrorKind::kBadPrime,
                "coefficient " + to_string(c) + " is not " + std::to_string(p) + "-integral");
  }
  // Fermat inverse of the denominator.
  std::uint64_t inv = 1;
  std::uint64_t base = den.convert_to<std::uint64_t>();
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return num.convert_to<std::uint64_t>() * inv % p;
}

CompiledForm compile(const Form& form, std::uint64_t p) {
  if (form.field().is_prime_field() && form.field().characteristic() != p) {
    throw Error(ErrorKind::kBadPrime, "form over " + form.field().name() +
                                          " cannot be reduced mod " + std::to_string(p));
  }
  CompiledForm out;
  out.degree = form.degree();
  for (const auto& [e, c] : form.terms()) {
    const std::uint64_t r = reduce_mod(c, p);
    if (r != 0) out.terms.push_back({r, e});
  }
  return out;
}

class PointEvaluator {
 public:
  PointEvaluator(std::size_t variables, unsigned max_degree, std::uint64_t p)
      : p_(p), max_degree_(max_degree), powers_(variables * (max_degree + 1)) {}

  void load(const ProjectivePoint& point) {
    for (std::size_t i = 0; i < point.size(); ++i) {
      std::uint64_t* row = &powers_[i * (max_degree_ + 1)];
      row[0] = 1;
      for (unsigned e = 1; e <= max_degree_; ++e) row[e] = row[e - 1] * point[i] % p_;
    }
  }

  std::uint64_t evaluate(const CompiledForm& form) const {
    std::uint64_t total = 0;
    for (const auto& t : form.terms) {
      std::uint64_t v = t.coefficient;
      for (std::size_t i = 0; i < t.exponents.size() && v; ++i)
        if (t.exponents[i]) v = v * powers_[i * (max_degree_ + 1) + t.exponents[i]] % p_;
      total += v;
      if (total >= p_) total -= p_;
    }
    return total;
  }

 private:
  std::uint64_t p_;
  unsigned max_degree_;
  std::vector<std::uint64_t> powers_;
};

// F together with its partials, reduced mod p.
struct SingularityTest {
  std::vector<CompiledForm> polys;
  unsigned max_degree = 0;

  SingularityTest(const Form& form, std::uint64_t p) {
    polys.push_back(compile(form, p));
    for (std::size_t i = 0; i < variable_count(form.variables()); ++i)
      polys.push_back(compile(form.derivative(i), p));
    max_degree = std::max(form.degree(), 1u);
  }

  bool singular_at(PointEvaluator& eval, const ProjectivePoint& point) const {
    eval.load(point);
    for (const auto& poly : polys)
      if (eval.evaluate(poly) != 0) return false;
    return true;
  }
};

void require_prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorKind::kBadPrime, std::to_string(p) + " is not a prime below 2^31");
  }
}

ScanResult scan(const Form& form, std::uint64_t p) {
  const SingularityTest test(form, p);
  if (test.polys.front().terms.empty()) {
    throw Error(ErrorKind::kBadPrime, "form vanishes identically mod " + std::to_string(p));
  }
  const std::size_t n = variable_count(form.variables());
  PointEvaluator eval(n, test.max_degree, p);
  ScanResult result;
  for (const auto& point : projective_points(n, p)) {
    ++result.points_scanned;
    if (test.singular_at(eval, point)) {
      result.smooth = false;
      result.witness = point;
      break;
    }
  }
  return result;
}

}  // namespace

unsigned FormMatrix::pattern_degree(std::size_t size, std::size_t i, std::size_t j) {
  const std::size_t last = size - 1;
  if (i == last && j == last) return 3;
  if (i == last || j == last) return 2;
  return 1;
}

FormMatrix::FormMatrix(std::size_t size, std::vector<Form> entries)
    : size_(size),
      field_(entries.empty() ? Field::rationals() : entries.front().field()),
      entries_(std::move(entries)) {
  if (size_ == 0 || size_ > 16 || entries_.size() != size_ * size_) {
    throw Error(ErrorKind::kWrongSize, "form matrix needs size*size entries, size in 1..16");
  }
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) {
      validate_entry(i, j, (*this)(i, j));
      if (j > i && !((*this)(i, j) == (*this)(j, i))) {
        throw Error(ErrorKind::kNotSymmetric,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                        std::to_string(j) + "," + std::to_string(i) + ") differ");
      }
    }
}

FormMatrix FormMatrix::zero(std::size_t size, Field field) {
  std::vector<Form> entries;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      entries.emplace_back(VariableSet::kPlane, pattern_degree(size, i, j), field);
  return FormMatrix(size, std::move(entries));
}

void FormMatrix::validate_entry(std::size_t i, std::size_t j, const Form& form) const {
  if (form.variables() != VariableSet::kPlane) {
    throw Error(ErrorKind::kWrongVariable, "matrix entries must be forms in X0, X1, X2");
  }
  if (!(form.field() == field_)) {
    throw Error(ErrorKind::kFieldMismatch, "matrix entries over different fields");
  }
  const unsigned want = pattern_degree(size_, i, j);
  if (form.degree() != want) {
    throw Error(ErrorKind::kPatternViolation,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                    std::to_string(form.degree()) + ", expected " + std::to_string(want));
  }
}

void FormMatrix::set(std::size_t i, std::size_t j, const Form& form) {
  if (i >= size_ || j >= size_) throw Error(ErrorKind::kWrongSize, "index out of range");
  validate_entry(i, j, form);
  entries_[i * size_ + j] = form;
  entries_[j * size_ + i] = form;
}

Form det_form_matrix(const FormMatrix& m) {
  return cofactor_det(m, 0, 0, m.field());
}

Form build_cubic(const FormMatrix& m) {
  if (m.size() != 4) throw Error(ErrorKind::kWrongSize, "the cubic fourfold needs a 4x4 matrix");
  const Field& field = m.field();
  Form cubic(VariableSet::kAmbient, 3, field);
  auto z = [&](std::size_t i) { return Form::variable(VariableSet::kAmbient, i, field); };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) cubic += z(i) * z(j) * m(i, j).lift_to_ambient();
  for (std::size_t i = 0; i < 3; ++i) cubic += Rational(2) * (z(i) * m(i, 3).lift_to_ambient());
  cubic += m(3, 3).lift_to_ambient();
  return cubic;
}

bool contains_plane(const Form& cubic) {
  if (cubic.variables() != VariableSet::kAmbient) {
    throw Error(ErrorKind::kWrongVariable, "plane test needs a form in Z1..Z3, X0..X2");
  }
  for (const auto& [e, c] : cubic.terms())
    if (e[3] + e[4] + e[5] == 0) return false;
  return true;
}

FormMatrix quadric_gram(const Form& cubic) {
  if (cubic.variables() != VariableSet::kAmbient || cubic.degree() != 3) {
    throw Error(ErrorKind::kNotCubic, "expected a cubic in Z1..Z3, X0..X2");
  }
  if (cubic.field().characteristic() == 2) {
    throw Error(ErrorKind::kHalfIntegerCoefficient, "off-diagonal halving is undefined in characteristic 2");
  }
  if (!contains_plane(cubic)) {
    throw Error(ErrorKind::kNoPlane, "cubic does not contain X0 = X1 = X2 = 0");
  }
  const Field& field = cubic.field();
  FormMatrix m = FormMatrix::zero(4, field);
  std::vector<Form> acc;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) acc.push_back(m(i, j));
  auto add = [&](std::size_t i, std::size_t j, const Exponents& x, const Rational& c) {
    acc[i * 4 + j].add_term(x, c);
    if (i != j) acc[j * 4 + i].add_term(x, c);
  };
  const Rational half(1, 2);
  for (const auto& [e, c] : cubic.terms()) {
    const Exponents x{e[3], e[4], e[5]};
    std::vector<std::size_t> zs;
    for (std::size_t i = 0; i < 3; ++i)
      for (unsigned k = 0; k < e[i]; ++k) zs.push_back(i);
    if (zs.size() == 2) {
      if (zs[0] == zs[1]) {
        add(zs[0], zs[0], x, c);
      } else {
        add(zs[0], zs[1], x, c * half);
      }
    } else if (zs.size() == 1) {
      add(zs[0], 3, x, c * half);
    } else {
      add(3, 3, x, c);
    }
  }
  return FormMatrix(4, std::move(acc));
}

Form discriminant_curve(const Form& cubic) {
  return det_form_matrix(quadric_gram(cubic));
}

std::vector<ProjectivePoint> projective_points(std::size_t n, std::uint64_t p) {
  std::vector<ProjectivePoint> points;
  for (std::size_t lead = 0; lead < n; ++lead) {
    ProjectivePoint point(n, 0);
    point[lead] = 1;
    const std::size_t free = n - lead - 1;
    while (true) {
      points.push_back(point);
      // Odometer over the trailing coordinates, last one fastest.
      std::size_t k = free;
      while (k > 0) {
        std::uint64_t& digit = point[lead + k];
        if (++digit < p) break;
        digit = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return points;
}

bool is_singular_point(const Form& form, const ProjectivePoint& point, std::uint64_t p) {
  require_prime(p);
  if (point.size() != variable_count(form.variables())) {
    throw Error(ErrorKind::kDimensionMismatch, "point has the wrong number of coordinates");
  }
  const SingularityTest test(form, p);
  PointEvaluator eval(point.size(), test.max_degree, p);
  ProjectivePoint reduced = point;
  for (auto& x : reduced) x %= p;
  return test.singular_at(eval, reduced);
}

ScanResult smooth_plane_curve_fp(const Form& form, std::uint64_t p) {
  require_prime(p);
  if (form.variables() != VariableSet::kPlane) {
    throw Error(ErrorKind::kWrongVariable, "plane curve scan needs a form in X0, X1, X2");
  }
  return scan(form, p);
}

ScanResult smooth_fourfold_fp(const Form& form, std::uint64_t p, std::uint64_t prime_cap) {
  require_prime(p);
  if (p > prime_cap) {
    throw Error(ErrorKind::kPrimeTooLarge,
                "p = " + std::to_string(p) + " exceeds the scan cap " + std::to_string(prime_cap));
  }
  if (form.variables() != VariableSet::kAmbient) {
    throw Error(ErrorKind::kWrongVariable, "fourfold scan needs a form in Z1..Z3, X0..X2");
  }
  return scan(form, p);
}

}  // namespace planecubic
