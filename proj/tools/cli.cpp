#include "planecubic/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "planecubic/enumerate.hpp"
#include "planecubic/io.hpp"
#include "repro.hpp"

namespace planecubic::cli {
namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string gram, file, matrix, form, field = "Q", vec, vectors;
  std::string norm, a, b, c, d, dns;
  int eps = 0;
  std::uint64_t prime = 0;
};

struct Report {
  Json inputs = Json::object();
  Json result;
  std::string human;
  Json citations;
  int exit_code = 0;
};

std::string format_vector(const LatticeVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::string format_gram(const Lattice& l) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < l.rank(); ++i) {
    out << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < l.rank(); ++j) out << (j ? "," : "") << l(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Inline JSON when the value starts with '[' or '{', otherwise a file path.
Json json_argument(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (value[first] == '[' || value[first] == '{')) {
    return io::parse(value);
  }
  return io::parse(read_file(value));
}

Integer integer_argument(const std::string& text, const std::string& name) {
  if (text.empty()) throw UsageError("missing --" + name);
  return io::integer_from_json(Json(text));
}

class Context {
 public:
  Context(const CLI::App& app, const Options& options, const RunConfig& config)
      : app_(app), options_(options), config_(config) {}

  const RunConfig& config() const { return config_; }
  bool given(const std::string& flag) const { return app_.count(flag) > 0; }

  Json lattice_json(Report& report) const {
    if (given("--gram") && given("--file")) throw UsageError("give either --gram or --file");
    if (!given("--gram") && !given("--file")) throw UsageError("missing --gram or --file");
    const Json j = given("--gram") ? json_argument(options_.gram) : io::parse(read_file(options_.file));
    report.inputs["lattice"] = j.is_object() ? j : Json{{"gram", j}};
    return j;
  }

  Lattice lattice(Report& report) const {
    const Lattice l = io::lattice_from_json(lattice_json(report));
    report.inputs["lattice"] = io::to_json(l);
    return l;
  }

  MarkedFourfold marked(Report& report) const {
    const MarkedFourfold m = io::marked_from_json(lattice_json(report));
    report.inputs["lattice"] = io::to_json(m);
    return m;
  }

  std::optional<LatticeVector> vec(Report& report) const {
    if (!given("--vec")) return std::nullopt;
    LatticeVector v = io::vector_from_json(json_argument(options_.vec));
    report.inputs["vec"] = io::to_json(v);
    return v;
  }

  LatticeVector required_vec(Report& report) const {
    auto v = vec(report);
    if (!v) throw UsageError("missing --vec");
    return *v;
  }

  std::vector<LatticeVector> vectors(Report& report) const {
    if (!given("--vectors")) throw UsageError("missing --vectors");
    auto vs = io::vectors_from_json(json_argument(options_.vectors));
    Json list = Json::array();
    for (const auto& v : vs) list.push_back(io::to_json(v));
    report.inputs["vectors"] = list;
    return vs;
  }

  Integer integer(const std::string& name, const std::string& text, Report& report) const {
    const Integer x = integer_argument(text, name);
    report.inputs[name] = io::to_json(x);
    return x;
  }

  std::uint64_t prime(Report& report) const {
    if (!given("--prime")) throw UsageError("missing --prime");
    report.inputs["prime"] = options_.prime;
    return options_.prime;
  }

  FormMatrix matrix(Report& report) const {
    if (given("--matrix") && given("--file")) throw UsageError("give either --matrix or --file");
    if (!given("--matrix") && !given("--file")) throw UsageError("missing --matrix or --file");
    return record(io::form_matrix_from_json(given("--matrix") ? json_argument(options_.matrix)
                                                              : io::parse(read_file(options_.file))),
                  report);
  }

  // A form given by --form, a matrix by --matrix, or either one in --file.
  std::variant<FormMatrix, Form> form_or_matrix(VariableSet variables, Report& report) const {
    const int sources = given("--matrix") + given("--form") + given("--file");
    if (sources != 1) throw UsageError("give exactly one of --form, --matrix, --file");
    if (given("--matrix")) return matrix(report);
    if (given("--form")) return record(parse_form(options_.form, variables, Field::parse(options_.field)), report);
    const std::string text = read_file(options_.file);
    Json j;
    try {
      j = io::parse(text);
    } catch (const Error&) {
      return record(parse_form(text, variables, Field::parse(options_.field)), report);
    }
    if (j.is_object() && j.contains("entries")) return record(io::form_matrix_from_json(j), report);
    if (j.is_object() && j.contains("form") && j.at("form").is_string()) {
      const std::string field =
          j.contains("field") && j.at("field").is_string() ? j.at("field").get<std::string>() : options_.field;
      return record(parse_form(j.at("form").get<std::string>(), variables, Field::parse(field)), report);
    }
    throw Error(ErrorKind::kParseError, "file holds neither a form nor a form matrix");
  }

  Form form(VariableSet variables, Report& report) const {
    auto x = form_or_matrix(variables, report);
    if (std::holds_alternative<FormMatrix>(x)) throw UsageError("expected a form, got a matrix");
    return std::get<Form>(x);
  }

  const Options& options() const { return options_; }

 private:
  static FormMatrix record(FormMatrix m, Report& report) {
    report.inputs["matrix"] = io::to_json(m);
    return m;
  }
  static Form record(Form f, Report& report) {
    report.inputs["form"] = serialize_form(f);
    report.inputs["field"] = f.field().name();
    return f;
  }

  const CLI::App& app_;
  const Options& options_;
  const RunConfig& config_;
};

using Handler = std::function<Report(const Context&)>;

struct Command {
  std::string group;
  std::string name;
  std::string claim;
  Handler handler;
};

Json vectors_json(const std::vector<LatticeVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(io::to_json(v));
  return out;
}

std::string vectors_human(const std::vector<LatticeVector>& vs, const std::string& what) {
  std::ostringstream out;
  out << vs.size() << ' ' << what << " (up to sign)";
  for (const auto& v : vs) out << '\n' << format_vector(v);
  return out.str();
}

Json scan_json(const ScanResult& r) {
  return {{"smooth", r.smooth},
          {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
          {"points_scanned", r.points_scanned}};
}

std::string scan_human(const ScanResult& r) {
  std::ostringstream out;
  if (r.smooth) {
    out << "smooth mod p (" << r.points_scanned << " points scanned)";
  } else {
    out << "singular at (";
    for (std::size_t i = 0; i < r.witness->size(); ++i) out << (i ? ":" : "") << (*r.witness)[i];
    out << ") after " << r.points_scanned << " points";
  }
  return out.str();
}

Json matrix_entries_json(const FormMatrix& m) { return io::to_json(m); }

std::string matrix_human(const FormMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? "\n" : "") << '[';
    for (std::size_t k = 0; k < m.size(); ++k) out << (k ? ", " : "") << serialize_form(m(i, k));
    out << ']';
  }
  return out.str();
}

Form as_cubic(const std::variant<FormMatrix, Form>& x) {
  return std::holds_alternative<FormMatrix>(x) ? build_cubic(std::get<FormMatrix>(x)) : std::get<Form>(x);
}

Report from_suite(const Suite& suite) {
  Report r;
  r.result = suite.result_json();
  std::ostringstream out;
  for (const auto& c : suite.checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.claim << '\n';
  out << (suite.all_pass() ? "all checks pass" : "some checks FAIL");
  r.human = out.str();
  r.citations = suite.citations();
  r.exit_code = suite.all_pass() ? 0 : 1;
  return r;
}

std::vector<Command> commands() {
  std::vector<Command> list;
  auto add = [&](std::string group, std::string name, std::string claim, Handler h) {
    list.push_back({std::move(group), std::move(name), std::move(claim), std::move(h)});
  };

  add("lat", "disc", "d(L) is the determinant of the Gram matrix", [](const Context& ctx) {
    Report r;
    const Integer d = discriminant(ctx.lattice(r));
    r.result = io::to_json(d);
    r.human = d.str();
    return r;
  });
  add("lat", "sig", "signature from an exact congruence diagonalization", [](const Context& ctx) {
    Report r;
    const Signature s = signature(ctx.lattice(r));
    r.result = {{"plus", s.plus}, {"minus", s.minus}, {"zero", s.zero}};
    r.human = "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")" +
              (s.zero ? " with " + std::to_string(s.zero) + " null directions" : "");
    return r;
  });
  add("lat", "even", "L is even iff every diagonal Gram entry is even", [](const Context& ctx) {
    Report r;
    const bool even = is_even(ctx.lattice(r));
    r.result = even;
    r.human = even ? "even" : "odd";
    return r;
  });
  add("lat", "discgroup", "A_L = L*/L with the induced finite quadratic form", [](const Context& ctx) {
    Report r;
    const Lattice l = ctx.lattice(r);
    const DiscriminantGroup g = discriminant_group(l);
    Json factors = Json::array();
    std::ostringstream human;
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
      factors.push_back(io::to_json(g.invariant_factors[i]));
      human << (i ? " x " : "") << "Z/" << g.invariant_factors[i];
    }
    if (g.invariant_factors.empty()) human << "trivial";
    human << " (order " << g.order() << ")";
    r.result = {{"invariant_factors", factors}, {"order", io::to_json(g.order())}, {"form", nullptr}};
    if (is_even(l)) {
      const FiniteQuadraticForm q = discriminant_form(l);
      r.result["form"] = io::to_json(q);
      human << "\nq on generators:";
      for (const auto& x : q.q_values()) human << ' ' << to_string(x);
    }
    r.human = human.str();
    return r;
  });
  add("lat", "milgram", "sign(L) = sign(q_L) mod 8", [](const Context& ctx) {
    Report r;
    const Lattice l = ctx.lattice(r);
    const int sigma = milgram_signature(discriminant_form(l), ctx.config().enumeration_cap);
    const Signature s = signature(l);
    const int direct = ((static_cast<int>(s.plus) - static_cast<int>(s.minus)) % 8 + 8) % 8;
    r.result = {{"milgram_residue", sigma}, {"signature_mod_8", direct}, {"agree", sigma == direct}};
    r.human = "sign(q_L) = " + std::to_string(sigma) + " mod 8, s+ - s- = " + std::to_string(direct) +
              " mod 8" + (sigma == direct ? "" : " (DISAGREE)");
    if (sigma != direct) throw Error(ErrorKind::kInvariantViolation, "Milgram formula failed: " + r.human);
    return r;
  });
  add("lat", "complement", "orthogonal complement as a primitive sublattice", [](const Context& ctx) {
    Report r;
    const Lattice l = ctx.lattice(r);
    const Complement c = orthogonal_complement(l, ctx.vectors(r));
    r.result = {{"basis", vectors_json(c.basis)}, {"gram", io::to_json(c.lattice).at("gram")}};
    std::ostringstream human;
    human << "Gram " << format_gram(c.lattice) << "\nbasis";
    for (const auto& v : c.basis) human << ' ' << format_vector(v);
    r.human = human.str();
    return r;
  });
  add("lat", "index", "[L : L'] squared is d(L')/d(L)", [](const Context& ctx) {
    Report r;
    const Lattice l = ctx.lattice(r);
    const Integer index = sublattice_index(l, ctx.vectors(r));
    r.result = io::to_json(index);
    r.human = index.str();
    return r;
  });

  add("enum", "norm", "complete list of vectors of a given norm", [](const Context& ctx) {
    Report r;
    const Lattice l = ctx.lattice(r);
    const Integer n = ctx.integer("norm", ctx.options().norm, r);
    const auto vs = vectors_of_norm(l, n);
    r.result = {{"count", vs.size()}, {"vectors", vectors_json(vs)}};
    r.human = vectors_human(vs, "vectors of norm " + n.str());
    return r;
  });
  add("enum", "shortroots", "short roots are norm-2 vectors of A0", [](const Context& ctx) {
    Report r;
    Lattice l = ctx.lattice(r);
    if (auto a = ctx.vec(r)) l = orthogonal_complement(l, {*a}).lattice;
    const auto vs = short_roots(l);
    r.result = {{"count", vs.size()}, {"vectors", vectors_json(vs)}};
    r.human = vectors_human(vs, "short roots");
    return r;
  });
  add("enum", "longroots", "long roots are norm-6 vectors of A0 divisible by 3 in the chosen sense",
      [](const Context& ctx) {
        Report r;
        const Lattice l = ctx.lattice(r);
        const auto a = ctx.vec(r);
        const LongRootScope scope = ctx.config().long_root_variant;
        r.inputs["long_root_variant"] = std::string(to_string(scope));
        std::vector<LatticeVector> vs;
        if (!a) {
          if (scope != LongRootScope::kAgainstComplement) {
            throw UsageError("long-root variant '" + std::string(to_string(scope)) +
                             "' needs the ambient lattice and --vec a");
          }
          vs = long_roots(l);
        } else {
          const Complement c = orthogonal_complement(l, {*a});
          switch (scope) {
            case LongRootScope::kCoset: vs = long_roots_in_coset(l, *a, c.basis); break;
            case LongRootScope::kAgainstComplement: vs = long_roots(c.lattice); break;
            case LongRootScope::kAgainstAmbient: vs = long_roots_against_ambient(l, c.basis); break;
          }
        }
        r.result = {{"count", vs.size()}, {"vectors", vectors_json(vs)}};
        r.human = vectors_human(vs, "long roots");
        return r;
      });
  add("enum", "isotropic", "a binary even form is isotropic iff b^2 - 4ac is a square",
      [](const Context& ctx) {
        Report r;
        const IsotropicResult iso = isotropic_exists(ctx.lattice(r));
        r.result = {{"exists", iso.exists},
                    {"witness", iso.witness ? io::to_json(*iso.witness) : Json(nullptr)}};
        r.human = iso.exists ? "isotropic, witness " + format_vector(*iso.witness) : "anisotropic";
        return r;
      });

  add("fourfold", "delta", "delta(T) = T.(H^2 - P)", [](const Context& ctx) {
    Report r;
    const MarkedFourfold m = ctx.marked(r);
    const Integer d = delta(m, ctx.required_vec(r));
    r.result = io::to_json(d);
    r.human = d.str();
    return r;
  });
  add("fourfold", "oddelta", "a cycle with odd delta makes the fourfold trivially rational",
      [](const Context& ctx) {
        Report r;
        const OddDelta odd = exists_odd_delta(ctx.marked(r));
        r.result = {{"exists", odd.exists},
                    {"basis_index", odd.basis_index ? Json(*odd.basis_index) : Json(nullptr)}};
        r.human = odd.exists ? "odd delta on basis vector e" + std::to_string(*odd.basis_index + 1)
                             : "delta is even on A(X)";
        return r;
      });
  add("fourfold", "trivrat", "rank 3: trivially rational iff d(A(X)) is odd", [](const Context& ctx) {
    Report r;
    const bool t = is_trivially_rational_rank3(ctx.lattice(r));
    r.result = t;
    r.human = t ? "trivially rational" : "not trivially rational";
    return r;
  });
  add("fourfold", "formula", "det[[3,2,a],[2,4,c],[a,c,b]] = -4a^2 + 8b + 4ca - 3c^2",
      [](const Context& ctx) {
        Report r;
        const Integer a = ctx.integer("a", ctx.options().a, r);
        const Integer b = ctx.integer("b", ctx.options().b, r);
        const Integer c = ctx.integer("c", ctx.options().c, r);
        const Integer det = rk2_discriminant(a, b, c);
        const Integer closed = rk2_discriminant_closed_form(a, b, c);
        if (det != closed) throw Error(ErrorKind::kInvariantViolation, "closed form disagrees with det");
        r.result = {{"det", io::to_json(det)}, {"odd", det % 2 != 0}, {"c_odd", c % 2 != 0}};
        r.human = det.str() + (det % 2 != 0 ? " (odd)" : " (even)");
        return r;
      });
  add("fourfold", "nsax", "|d(A(X))| = 4^(eps-1) |d(NS(S))|", [](const Context& ctx) {
    Report r;
    const Integer dns = ctx.integer("dns", ctx.options().dns, r);
    if (!ctx.given("--eps")) throw UsageError("missing --eps");
    r.inputs["eps"] = ctx.options().eps;
    const Integer d = ns_to_ax_disc(dns, ctx.options().eps);
    r.result = io::to_json(d);
    r.human = d.str();
    return r;
  });
  add("fourfold", "family", "S_(d,c) with d even gives fourfolds that are not trivially rational",
      [](const Context& ctx) {
        Report r;
        const FamilyParams params{ctx.integer("d", ctx.options().d, r), ctx.integer("c", ctx.options().c, r)};
        const Lattice ns = build_L_dc(params);
        const Signature s = signature(ns);
        const FamilyVerdict verdict = classify_family(params);
        r.result = {{"gram", io::to_json(ns).at("gram")},
                    {"even", is_even(ns)},
                    {"signature", {s.plus, s.minus}},
                    {"discriminant", io::to_json(discriminant(ns))},
                    {"verdict", std::string(to_string(verdict))}};
        r.human = "NS Gram " + format_gram(ns) + ", d = " + discriminant(ns).str() + ": " +
                  std::string(to_string(verdict));
        return r;
      });
  add("fourfold", "mayanskiy", "lattice conditions 1-6 for the existence of a cubic fourfold",
      [](const Context& ctx) {
        Report r;
        const Lattice l = ctx.lattice(r);
        LatticeVector a(l.rank());
        if (auto v = ctx.vec(r)) {
          a = *v;
        } else if (!a.empty()) {
          a[0] = 1;
        }
        MayanskiyOptions options;
        options.long_root_scope = ctx.config().long_root_variant;
        options.enumeration_cap = ctx.config().enumeration_cap;
        r.inputs["long_root_variant"] = std::string(to_string(options.long_root_scope));
        const ConditionReport report = mayanskiy_check(l, a, options);
        r.result = io::to_json(report);
        std::ostringstream human;
        human << "a = " << format_vector(a) << ", long roots: " << to_string(options.long_root_scope);
        for (std::size_t i = 0; i < report.conditions.size(); ++i) {
          const auto& c = report.conditions[i];
          human << "\n" << (c.pass ? "PASS" : "FAIL") << " condition " << i + 1;
          if (i == 2 || i == 3) human << " [Mayanskiy conditions 3/4 (adopted definitions)]";
          human << ": " << c.evidence;
        }
        if (report.outside_rank3_scope) human << "\nnote: rank " << l.rank() << " is outside the rank-3 scope";
        r.human = human.str();
        return r;
      });
  add("fourfold", "pfaffian", "a pfaffian fourfold needs a norm-10 class pairing 4 with H^2",
      [](const Context& ctx) {
        Report r;
        const PfaffianResult pf = pfaffian_obstruction(ctx.marked(r));
        Json candidates = Json::array();
        std::ostringstream human;
        human << (pf.obstructed ? "not pfaffian: no norm-10 vectors" : "no obstruction; norm-10 candidates:");
        for (const auto& c : pf.candidates) {
          candidates.push_back({{"tau", io::to_json(c.tau)}, {"h2", io::to_json(c.with_h2)},
                                {"p", io::to_json(c.with_p)}, {"matches_shape", c.matches_shape}});
          human << "\n" << format_vector(c.tau) << " tau.H^2 = " << c.with_h2 << " tau.P = " << c.with_p
                << (c.matches_shape ? " (matches)" : "");
        }
        r.result = {{"obstructed", pf.obstructed}, {"candidates", candidates}};
        r.human = human.str();
        return r;
      });

  add("detrep", "det", "the discriminant sextic is det M", [](const Context& ctx) {
    Report r;
    const Form d = det_form_matrix(ctx.matrix(r));
    r.result = serialize_form(d);
    r.human = serialize_form(d);
    return r;
  });
  add("detrep", "build", "a 4x4 patterned M defines a cubic fourfold containing a plane",
      [](const Context& ctx) {
        Report r;
        const Form f = build_cubic(ctx.matrix(r));
        r.result = serialize_form(f);
        r.human = serialize_form(f);
        return r;
      });
  add("detrep", "gram", "a cubic containing the plane is a quadric bundle over P^2", [](const Context& ctx) {
    Report r;
    const FormMatrix m = quadric_gram(ctx.form(VariableSet::kAmbient, r));
    r.result = matrix_entries_json(m);
    r.human = matrix_human(m);
    return r;
  });
  add("detrep", "disccurve", "the discriminant curve of the quadric bundle is a sextic",
      [](const Context& ctx) {
        Report r;
        const Form c = discriminant_curve(as_cubic(ctx.form_or_matrix(VariableSet::kAmbient, r)));
        r.result = serialize_form(c);
        r.human = serialize_form(c);
        return r;
      });
  add("detrep", "smoothcurve", "smoothness of the reduction of a plane curve mod p",
      [](const Context& ctx) {
        Report r;
        const auto x = ctx.form_or_matrix(VariableSet::kPlane, r);
        const Form f = std::holds_alternative<FormMatrix>(x) ? det_form_matrix(std::get<FormMatrix>(x))
                                                             : std::get<Form>(x);
        const ScanResult s = smooth_plane_curve_fp(f, ctx.prime(r));
        r.result = scan_json(s);
        r.human = scan_human(s);
        return r;
      });
  add("detrep", "smoothfourfold", "smoothness of the reduction of a cubic fourfold mod p",
      [](const Context& ctx) {
        Report r;
        const Form f = as_cubic(ctx.form_or_matrix(VariableSet::kAmbient, r));
        const ScanResult s = smooth_fourfold_fp(f, ctx.prime(r), ctx.config().scan_prime_cap);
        r.result = scan_json(s);
        r.human = scan_human(s);
        return r;
      });

  add("repro", "exe", "", [](const Context& ctx) { return from_suite(repro_exe(ctx.config())); });
  add("repro", "p369", "", [](const Context& ctx) { return from_suite(repro_p369(ctx.config())); });
  add("repro", "mainteo", "", [](const Context& ctx) { return from_suite(repro_mainteo(ctx.config())); });
  return list;
}

}  // namespace

std::string grammar() {
  return "usage: planecubic <group> <command> [options]\n"
         "  lat {disc|sig|even|discgroup|milgram|complement|index}\n"
         "  enum {norm|shortroots|longroots|isotropic}\n"
         "  fourfold {delta|oddelta|trivrat|formula|nsax|family|mayanskiy|pfaffian}\n"
         "  detrep {det|build|gram|disccurve|smoothcurve|smoothfourfold}\n"
         "  repro {exe|p369|mainteo}\n"
         "inputs: --gram JSON|path, --file path, --matrix JSON|path, --form TEXT [--field Q|Fp:p],\n"
         "        --vec JSON, --vectors JSON, --norm N, --a/--b/--c/--d N, --dns N --eps 1|2, --prime p\n"
         "config: --output human|json, --enum-cap N, --scan-prime-cap P,\n"
         "        --long-root-variant coset|against-A0|against-A\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice and polynomial checks for cubic fourfolds containing a plane", "planecubic"};
  app.fallthrough();
  app.require_subcommand(1);

  Options options;
  RunConfig config;
  std::string output = "human";
  std::string variant = "coset";
  app.add_option("--gram", options.gram, "Gram matrix as JSON, or a JSON file path");
  app.add_option("--file", options.file, "JSON (or form text) input file");
  app.add_option("--matrix", options.matrix, "form matrix as JSON, or a JSON file path");
  app.add_option("--form", options.form, "form text");
  app.add_option("--field", options.field, "Q or Fp:<prime>");
  app.add_option("--vec", options.vec, "vector as JSON");
  app.add_option("--vectors", options.vectors, "list of vectors as JSON");
  app.add_option("--norm", options.norm, "target norm");
  app.add_option("--a", options.a);
  app.add_option("--b", options.b);
  app.add_option("--c", options.c);
  app.add_option("--d", options.d);
  app.add_option("--dns", options.dns, "discriminant of NS(S)");
  app.add_option("--eps", options.eps, "1 or 2");
  app.add_option("--prime", options.prime, "prime for the smoothness scan");
  app.add_option("--output", output)->check(CLI::IsMember({"human", "json"}));
  app.add_option("--enum-cap", config.enumeration_cap, "max group order for Gauss sums")
      ->check(CLI::PositiveNumber);
  app.add_option("--scan-prime-cap", config.scan_prime_cap, "max p for the P^5 scan")
      ->check(CLI::PositiveNumber);
  app.add_option("--long-root-variant", variant)
      ->check(CLI::IsMember({"coset", "against-A0", "against-A"}));

  const std::vector<Command> table = commands();
  std::vector<std::pair<CLI::App*, const Command*>> leaves;
  std::map<std::string, CLI::App*> groups;
  for (const auto& cmd : table) {
    CLI::App*& group = groups[cmd.group];
    if (!group) {
      group = app.add_subcommand(cmd.group);
      group->fallthrough();
      group->require_subcommand(1);
    }
    leaves.emplace_back(group->add_subcommand(cmd.name, cmd.claim), &cmd);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << grammar();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << grammar();
    return 2;
  }
  config.output = output == "json" ? OutputMode::kJson : OutputMode::kHuman;
  config.long_root_variant = variant == "against-A0"  ? LongRootScope::kAgainstComplement
                             : variant == "against-A" ? LongRootScope::kAgainstAmbient
                                                      : LongRootScope::kCoset;

  const Command* selected = nullptr;
  for (const auto& [sub, cmd] : leaves)
    if (sub->parsed()) selected = cmd;
  if (!selected) {
    err << "error: no command given\n" << grammar();
    return 2;
  }

  const Context ctx(app, options, config);
  Report report;
  try {
    report = selected->handler(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << grammar();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_precondition(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (config.output == OutputMode::kJson) {
    const Json citations = report.citations.is_null() ? Json::array({selected->claim}) : report.citations;
    const Json doc{{"command", selected->group + " " + selected->name},
                   {"inputs", report.inputs},
                   {"result", report.result},
                   {"citations", citations}};
    out << doc.dump(2) << "\n";
  } else {
    out << report.human << "\n";
  }
  return report.exit_code;
}

}  // namespace planecubic::cli
