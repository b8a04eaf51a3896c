#include "planecubic/form.hpp"

#include <cctype>
#include <numeric>

namespace planecubic {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::uint64_t mod_u64(const Integer& x, std::uint64_t p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::kBadPrime, std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:" && text.size() > 3) {
    std::uint64_t p = 0;
    for (char ch : text.substr(3)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || p > (std::uint64_t{1} << 40)) {
        throw Error(ErrorKind::kParseError, "bad field '" + std::string(text) + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return prime(p);
  }
  throw Error(ErrorKind::kParseError, "field must be \"Q\" or \"Fp:<prime>\", got '" +
                                          std::string(text) + "'");
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Rational Field::normalize(const Rational& x) const {
  if (p_ == 0) return x;
  const std::uint64_t num = mod_u64(numerator(x), p_);
  const std::uint64_t den = mod_u64(denominator(x), p_);
  if (den == 0) {
    throw Error(ErrorKind::kBadPrime, "denominator of " + to_string(x) +
                                          " vanishes mod " + std::to_string(p_));
  }
  return Rational(Integer(num * pow_mod(den, p_ - 2, p_) % p_));
}

const std::vector<std::string>& variable_names(VariableSet set) {
  static const std::vector<std::string> plane{"X0", "X1", "X2"};
  static const std::vector<std::string> ambient{"Z1", "Z2", "Z3", "X0", "X1", "X2"};
  return set == VariableSet::kPlane ? plane : ambient;
}

std::size_t variable_count(VariableSet set) { return variable_names(set).size(); }

Form::Form(VariableSet variables, unsigned degree, Field field)
    : variables_(variables), degree_(degree), field_(field) {}

Form Form::monomial(VariableSet variables, const Exponents& exponents,
                    const Rational& coefficient, Field field) {
  Form f(variables, total_degree(exponents), field);
  f.add_term(exponents, coefficient);
  return f;
}

Form Form::variable(VariableSet variables, std::size_t index, Field field) {
  Exponents e(variable_count(variables));
  e.at(index) = 1;
  return monomial(variables, e, 1, field);
}

Rational Form::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (exponents.size() != variable_count(variables_)) {
    throw Error(ErrorKind::kDimensionMismatch, "exponent vector length");
  }
  if (total_degree(exponents) != degree_) {
    throw Error(ErrorKind::kNotHomogeneous,
                "term of degree " + std::to_string(total_degree(exponents)) +
                    " in a form of degree " + std::to_string(degree_));
  }
  const Rational c = field_.normalize(coefficient);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second = field_.normalize(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Form::require_compatible(const Form& other) const {
  if (variables_ != other.variables_) {
    throw Error(ErrorKind::kWrongVariable, "forms over different variable sets");
  }
  if (!(field_ == other.field_)) {
    throw Error(ErrorKind::kFieldMismatch, field_.name() + " vs " + other.field_.name());
  }
}

Form Form::operator-() const {
  Form out(variables_, degree_, field_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

Form& Form::operator+=(const Form& other) {
  require_compatible(other);
  if (other.degree_ != degree_) {
    throw Error(ErrorKind::kNotHomogeneous,
                "adding forms of degree " + std::to_string(degree_) + " and " +
                    std::to_string(other.degree_));
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Form& Form::operator-=(const Form& other) { return *this += -other; }

Form operator*(const Form& a, const Form& b) {
  a.require_compatible(b);
  Form out(a.variables_, a.degree_ + b.degree_, a.field_);
  Exponents e(variable_count(a.variables_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Form operator*(const Rational& c, const Form& f) {
  Form out(f.variables_, f.degree_, f.field_);
  for (const auto& [e, x] : f.terms_) out.add_term(e, c * x);
  return out;
}

Form Form::derivative(std::size_t index) const {
  if (index >= variable_count(variables_)) {
    throw Error(ErrorKind::kDimensionMismatch, "variable index out of range");
  }
  Form out(variables_, degree_ == 0 ? 0 : degree_ - 1, field_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    out.add_term(d, c * e[index]);
  }
  return out;
}

Form Form::lift_to_ambient() const {
  if (variables_ == VariableSet::kAmbient) return *this;
  Form out(VariableSet::kAmbient, degree_, field_);
  for (const auto& [e, c] : terms_) out.add_term({0, 0, 0, e[0], e[1], e[2]}, c);
  return out;
}

std::string serialize_form(const Form& form) {
  if (form.is_zero()) return "0";
  const auto& names = variable_names(form.variables());
  std::string out;
  bool first = true;
  for (const auto& [e, c] : form.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + "*" + mono;
    }
  }
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, VariableSet variables, Field field)
      : text_(text), variables_(variables), field_(field),
        names_(variable_names(variables)) {}

  Form parse(std::optional<unsigned> zero_degree) {
    struct Term {
      Exponents exponents;
      Rational coefficient;
      std::size_t position;
    };
    std::vector<Term> terms;
    skip_space();
    bool expect_term = true;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    while (expect_term) {
      const std::size_t start = pos_;
      auto [exponents, coefficient] = parse_term();
      if (negative) coefficient = -coefficient;
      terms.push_back({std::move(exponents), std::move(coefficient), start});
      skip_space();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'", pos_ - 1);
      negative = op == '-';
      skip_space();
    }

    std::optional<unsigned> degree;
    for (const auto& t : terms) {
      if (t.coefficient == 0) continue;
      const unsigned d = total_degree(t.exponents);
      if (!degree) {
        degree = d;
      } else if (*degree != d) {
        throw Error(ErrorKind::kNotHomogeneous,
                    "term at position " + std::to_string(t.position) + " has degree " +
                        std::to_string(d) + ", expected " + std::to_string(*degree));
      }
    }
    Form form(variables_, degree.value_or(zero_degree.value_or(0)), field_);
    for (const auto& t : terms)
      if (t.coefficient != 0) form.add_term(t.exponents, t.coefficient);
    return form;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw Error(ErrorKind::kParseError,
                message + " at position " + std::to_string(at) + " in '" + std::string(text_) + "'");
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<Exponents, Rational> parse_term() {
    Exponents exponents(names_.size());
    Rational coefficient = 1;
    bool have_content = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_integer();
      skip_space();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        den = parse_integer();
        if (den == 0) fail("zero denominator", at);
      }
      coefficient = Rational(num, den);
      have_content = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable", pos_);
      }
    }
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      ++pos_;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      std::size_t index = names_.size();
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) index = i;
      if (index == names_.size()) {
        throw Error(ErrorKind::kWrongVariable,
                    "'" + name + "' at position " + std::to_string(start) +
                        " is not one of the declared variables");
      }
      unsigned power = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        const Integer p = parse_integer();
        if (p > 1000) fail("exponent too large", at);
        power = p.convert_to<unsigned>();
      }
      exponents[index] += power;
      have_content = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable", pos_);
      }
    }
    if (!have_content) fail("expected a term", pos_);
    return {std::move(exponents), std::move(coefficient)};
  }

  std::string_view text_;
  VariableSet variables_;
  Field field_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, VariableSet variables, Field field,
                std::optional<unsigned> zero_degree) {
  return FormParser(text, variables, field).parse(zero_degree);
}

}  // namespace planecubic
