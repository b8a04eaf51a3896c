#include "repro.hpp"

#include "planecubic/enumerate.hpp"

namespace planecubic::cli {
namespace {

using io::Json;

const Lattice& a_exe() {
  static const Lattice l(IntMatrix{{3, 1, 4}, {1, 3, 4}, {4, 4, 12}});
  return l;
}

const Lattice& a_369() {
  static const Lattice l(IntMatrix{{3, 1, 4}, {1, 3, 2}, {4, 2, 10}});
  return l;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(io::to_json(m.row(i)));
  return rows;
}

Json factors_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(io::to_json(x));
  return out;
}

Check existence_conditions(const Lattice& lattice, const RunConfig& config, std::string claim) {
  MayanskiyOptions options;
  options.long_root_scope = config.long_root_variant;
  options.enumeration_cap = config.enumeration_cap;
  const ConditionReport report = mayanskiy_check(lattice, {1, 0, 0}, options);
  Json detail = io::to_json(report);
  detail["long_root_variant"] = std::string(to_string(config.long_root_variant));
  return {"existence conditions 1-6", report.all_pass() && report.milgram_residue == 0,
          std::move(detail), std::move(claim)};
}

}  // namespace

bool Suite::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json Suite::result_json() const {
  Json list = Json::array();
  for (const auto& c : checks) list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", name}, {"checks", list}, {"all_pass", all_pass()}};
}

Json Suite::citations() const {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(c.claim);
  return out;
}

std::optional<IntMatrix> rank2_isometry(const Lattice& from, const Lattice& to, int box) {
  if (from.rank() != 2 || to.rank() != 2) throw Error(ErrorKind::kWrongRank, "isometry search is rank 2");
  for (int p = -box; p <= box; ++p)
    for (int q = -box; q <= box; ++q)
      for (int r = -box; r <= box; ++r)
        for (int s = -box; s <= box; ++s) {
          if (p * s - q * r != 1 && p * s - q * r != -1) continue;
          const IntMatrix u{{p, q}, {r, s}};
          if (u.transposed() * from.gram() * u == to.gram()) return u;
        }
  return std::nullopt;
}

Suite repro_exe(const RunConfig& config) {
  Suite suite{"exe", {}};
  const Lattice& a = a_exe();

  const Integer d = discriminant(a);
  suite.checks.push_back({"discriminant", d == 32, io::to_json(d),
                          "the lattice [[3,1,4],[1,3,4],[4,4,12]] has discriminant 32"});

  const Complement complement = orthogonal_complement(a, {{1, 0, 0}});
  const Lattice expected(IntMatrix{{24, 24}, {24, 28}});
  const auto iso = complement.lattice.rank() == 2 ? rank2_isometry(complement.lattice, expected, 5)
                                                  : std::nullopt;
  Json cdetail = io::to_json(complement.lattice);
  cdetail["basis"] = Json::array();
  for (const auto& v : complement.basis) cdetail["basis"].push_back(io::to_json(v));
  cdetail["isometry_to_reference"] = iso ? matrix_json(*iso) : Json(nullptr);
  suite.checks.push_back({"complement of a", iso.has_value(), std::move(cdetail),
                          "a^perp has Gram [[24,24],[24,28]] up to change of basis, so it is even"});

  const DiscriminantGroup group = discriminant_group(a);
  const std::vector<Integer> factors{4, 8};
  suite.checks.push_back({"discriminant group", group.invariant_factors == factors,
                          factors_json(group.invariant_factors),
                          "the discriminant group is Z/4 x Z/8"});

  suite.checks.push_back(existence_conditions(
      a, config, "the six lattice conditions hold with a = (1,0,0), sign(q) = 0 mod 8"));

  const auto tens = vectors_of_norm(a, 10);
  suite.checks.push_back({"no norm-10 vectors", tens.empty(), static_cast<std::uint64_t>(tens.size()),
                          "no class of square 10 exists, so the fourfold is not pfaffian"});

  const bool trivial = is_trivially_rational_rank3(a);
  suite.checks.push_back({"not trivially rational", !trivial, trivial,
                          "even discriminant 32 means not trivially rational"});
  return suite;
}

Suite repro_p369(const RunConfig& config) {
  Suite suite{"p369", {}};
  const Lattice& a = a_369();

  const Integer d = discriminant(a);
  suite.checks.push_back({"discriminant", d == 36, io::to_json(d),
                          "the lattice [[3,1,4],[1,3,2],[4,2,10]] has discriminant 36"});

  const Integer ax = ns_to_ax_disc(-9, 2);
  suite.checks.push_back({"NS to A(X) discriminant", ax == 36, io::to_json(ax),
                          "d(NS(S)) = -9 with a nontrivial Brauer class gives |d(A(X))| = 36"});

  bool all_isotropic = true;
  Json witnesses = Json::array();
  for (int t = -3; t <= 3; ++t) {
    const Lattice ns(IntMatrix{{0, 3}, {3, 2 * t}});
    const IsotropicResult r = isotropic_exists(ns);
    const bool ok = r.exists && r.witness && norm(ns, *r.witness) == 0;
    all_isotropic = all_isotropic && ok;
    witnesses.push_back({{"t", t}, {"witness", r.witness ? io::to_json(*r.witness) : Json(nullptr)}});
  }
  suite.checks.push_back({"isotropic NS(S)", all_isotropic, std::move(witnesses),
                          "NS(S) = [[0,3],[3,2t]] contains a class of square 0"});

  const OddDelta odd = exists_odd_delta(MarkedFourfold::standard(a));
  suite.checks.push_back({"no odd delta", !odd.exists, odd.exists,
                          "no cycle T has odd T.(H^2 - P)"});

  const bool trivial = is_trivially_rational_rank3(a);
  suite.checks.push_back({"not trivially rational", !trivial, trivial,
                          "even discriminant 36 means not trivially rational"});

  suite.checks.push_back(existence_conditions(
      a, config, "a cubic fourfold with this lattice exists"));

  const PfaffianResult pf = pfaffian_obstruction(MarkedFourfold::standard(a));
  bool shape = false;
  Json candidates = Json::array();
  for (const auto& c : pf.candidates) {
    shape = shape || c.matches_shape;
    candidates.push_back({{"tau", io::to_json(c.tau)}, {"h2", io::to_json(c.with_h2)},
                          {"p", io::to_json(c.with_p)}, {"matches_shape", c.matches_shape}});
  }
  suite.checks.push_back({"pfaffian not excluded", !pf.obstructed && shape, std::move(candidates),
                          "the general member of this lattice type is pfaffian"});
  return suite;
}

Suite repro_mainteo(const RunConfig&) {
  Suite suite{"mainteo", {}};

  const MarkedFourfold rk2 = MarkedFourfold::standard(Lattice(IntMatrix{{3, 1}, {1, 3}}));
  const Integer dp = delta(rk2, rk2.p());
  const Integer dh = delta(rk2, rk2.h2());
  const Lattice hq = sublattice(rk2.lattice(), {rk2.h2(), rk2.q()});
  const bool delta_ok = dp == -2 && dh == 2 && hq == Lattice(IntMatrix{{3, 2}, {2, 4}});
  suite.checks.push_back({"delta values", delta_ok,
                          {{"delta_P", io::to_json(dp)}, {"delta_H2", io::to_json(dh)},
                           {"gram_H2_Q", matrix_json(hq.gram())}},
                          "delta(P) = -2, delta(H^2) = 2 and <H^2, Q> = [[3,2],[2,4]]"});

  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  for (int a = -20; a <= 20; ++a)
    for (int b = -20; b <= 20; ++b)
      for (int c = -20; c <= 20; ++c) {
        ++cases;
        const Integer det = rk2_discriminant(a, b, c);
        const bool formula = det == rk2_discriminant_closed_form(a, b, c);
        const bool parity = (det % 2 != 0) == (c % 2 != 0);
        if (!formula || !parity) ++mismatches;
      }
  suite.checks.push_back({"rank-3 discriminant formula", mismatches == 0,
                          {{"cases", cases}, {"mismatches", mismatches}},
                          "det[[3,2,a],[2,4,c],[a,c,b]] = -4a^2 + 8b + 4ca - 3c^2, odd iff c is odd"});

  std::uint64_t family = 0;
  std::uint64_t bad = 0;
  for (int d = -10; d <= 10; ++d) {
    if (d == 0) continue;
    for (int c = -10; c <= 10; ++c) {
      if (4 * c - d * d >= 0) continue;
      ++family;
      const FamilyParams params{d, c};
      const Lattice ns = build_L_dc(params);
      const bool ok = is_even(ns) && signature(ns) == Signature{1, 1, 0} &&
                      (classify_family(params) == FamilyVerdict::kNotTriviallyRational) ==
                          (d % 2 == 0) &&
                      (discriminant(ns) % 2 == 0) == (d % 2 == 0);
      if (!ok) ++bad;
    }
  }
  suite.checks.push_back({"double plane family", bad == 0,
                          {{"cases", family}, {"failures", bad}},
                          "for S_(d,c) with d even the associated fourfolds are not trivially rational"});
  return suite;
}

}  // namespace planecubic::cli
