#include "planecubic/io.hpp"

#include <cctype>
#include <limits>

namespace planecubic::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::kParseError, what); }

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string text_from_json(const Json& j) {
  if (!j.is_string()) bad("expected a string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>())
                                  : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!is_integer_text(s)) bad("'" + s + "' is not an integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  bad("expected an integer, got " + j.dump());
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

LatticeVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  LatticeVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

std::vector<LatticeVector> vectors_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of integer arrays");
  std::vector<LatticeVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

Json to_json(const Lattice& lattice) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) rows.push_back(to_json(lattice.gram().row(i)));
  return Json{{"gram", rows}};
}

Lattice lattice_from_json(const Json& j) {
  const Json& rows = j.is_object() ? (j.contains("gram") ? j.at("gram") : Json()) : j;
  if (!rows.is_array()) bad("lattice JSON needs a \"gram\" array");
  std::vector<std::vector<Integer>> nested;
  for (const auto& row : rows) nested.push_back(vector_from_json(row));
  for (const auto& row : nested)
    if (row.size() != nested.size()) throw Error(ErrorKind::kNotSquare, "Gram matrix must be square");
  return Lattice(IntMatrix::from_rows(nested));
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || Integer(den) == 0) {
    bad("'" + text + "' is not a rational r/s");
  }
  return Rational(Integer(num[0] == '+' ? num.substr(1) : num), Integer(den));
}

Json to_json(const FiniteQuadraticForm& form) {
  Json orders = Json::array();
  Json q = Json::array();
  Json b = Json::array();
  for (std::size_t i = 0; i < form.generator_count(); ++i) {
    orders.push_back(to_json(form.orders()[i]));
    q.push_back(to_string(form.q_values()[i]));
    Json row = Json::array();
    for (std::size_t k = 0; k < form.generator_count(); ++k)
      row.push_back(to_string(form.b_values()(i, k)));
    b.push_back(row);
  }
  return Json{{"orders", orders}, {"q", q}, {"b", b}};
}

FiniteQuadraticForm finite_form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("orders") || !j.contains("q") || !j.contains("b")) {
    bad("finite form JSON needs \"orders\", \"q\" and \"b\"");
  }
  std::vector<Integer> orders = vector_from_json(j.at("orders"));
  if (!j.at("q").is_array() || j.at("q").size() != orders.size()) {
    bad("\"q\" must list one value per generator");
  }
  std::vector<Rational> q;
  for (const auto& x : j.at("q")) q.push_back(rational_from_string(text_from_json(x)));
  const std::size_t r = orders.size();
  if (!j.at("b").is_array() || j.at("b").size() != r) bad("\"b\" must be an r x r table");
  RationalMatrix b(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = j.at("b")[i];
    if (!row.is_array() || row.size() != r) bad("\"b\" must be an r x r table");
    for (std::size_t k = 0; k < r; ++k) b(i, k) = rational_from_string(text_from_json(row[k]));
  }
  try {
    return FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
  } catch (const Error& e) {
    bad(std::string("inconsistent finite form: ") + e.what());
  }
}

Json to_json(const MarkedFourfold& m) {
  Json out = to_json(m.lattice());
  out["h2"] = to_json(m.h2());
  out["p"] = to_json(m.p());
  return out;
}

MarkedFourfold marked_from_json(const Json& j) {
  Lattice lattice = lattice_from_json(j);
  if (j.is_object() && (j.contains("h2") || j.contains("p"))) {
    if (!j.contains("h2") || !j.contains("p")) bad("marked lattice needs both \"h2\" and \"p\"");
    return MarkedFourfold(std::move(lattice), vector_from_json(j.at("h2")),
                          vector_from_json(j.at("p")));
  }
  return MarkedFourfold::standard(std::move(lattice));
}

Json to_json(const FormMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(serialize_form(m(i, k)));
    entries.push_back(row);
  }
  return Json{{"size", m.size()}, {"field", m.field().name()}, {"entries", entries}};
}

FormMatrix form_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) bad("form matrix JSON needs \"entries\"");
  const Field field = Field::parse(j.contains("field") ? text_from_json(j.at("field")) : "Q");
  const Json& rows = j.at("entries");
  if (!rows.is_array()) bad("\"entries\" must be an array of rows");
  const std::size_t n = rows.size();
  if (j.contains("size") && integer_from_json(j.at("size")) != n) {
    throw Error(ErrorKind::kWrongSize, "\"size\" disagrees with the number of rows");
  }
  std::vector<Form> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw Error(ErrorKind::kWrongSize, "entries must form a square table");
    }
    for (std::size_t k = 0; k < n; ++k) {
      entries.push_back(parse_form(text_from_json(rows[i][k]), VariableSet::kPlane, field,
                                   FormMatrix::pattern_degree(n, i, k)));
    }
  }
  return FormMatrix(n, std::move(entries));
}

Json to_json(const ConditionReport& report) {
  Json conditions = Json::array();
  for (std::size_t i = 0; i < report.conditions.size(); ++i) {
    conditions.push_back({{"condition", i + 1},
                          {"pass", report.conditions[i].pass},
                          {"evidence", report.conditions[i].evidence}});
  }
  Json out{{"conditions", conditions},
           {"all_pass", report.all_pass()},
           {"outside_rank3_scope", report.outside_rank3_scope}};
  if (report.complement) {
    out["complement"] = to_json(report.complement->lattice);
    Json basis = Json::array();
    for (const auto& v : report.complement->basis) basis.push_back(to_json(v));
    out["complement"]["basis"] = basis;
  }
  if (report.milgram_residue) out["milgram_residue"] = *report.milgram_residue;
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace planecubic::io
