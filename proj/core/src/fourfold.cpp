#include "planecubic/fourfold.hpp"

#include <sstream>

#include "planecubic/enumerate.hpp"

namespace planecubic {
namespace {

std::string format_vector(const LatticeVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::string format_gram(const Lattice& lattice) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    out << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < lattice.rank(); ++j) out << (j ? "," : "") << lattice(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

LatticeVector to_ambient(const std::vector<LatticeVector>& basis, const LatticeVector& v,
                         std::size_t ambient_rank) {
  LatticeVector out(ambient_rank);
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t c = 0; c < ambient_rank; ++c) out[c] += v[k] * basis[k][c];
  return out;
}

LatticeVector unit(std::size_t n, std::size_t i) {
  LatticeVector e(n);
  e[i] = 1;
  return e;
}

}  // namespace

MarkedFourfold::MarkedFourfold(Lattice lattice, LatticeVector h2, LatticeVector p)
    : lattice_(std::move(lattice)), h2_(std::move(h2)), p_(std::move(p)) {
  if (h2_.size() != lattice_.rank() || p_.size() != lattice_.rank()) {
    throw Error(ErrorKind::kDimensionMismatch, "marked classes must match the lattice rank");
  }
  if (!is_positive_definite(lattice_)) {
    throw Error(ErrorKind::kNotPositiveDefinite, "A(X) must be positive definite");
  }
  if (norm(lattice_, h2_) != 3 || norm(lattice_, p_) != 3 ||
      bilinear(lattice_, h2_, p_) != 1) {
    throw Error(ErrorKind::kInvariantViolation,
                "marking must satisfy h2^2 = 3, p^2 = 3, h2.p = 1");
  }
}

LatticeVector MarkedFourfold::q() const {
  LatticeVector q(h2_.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = h2_[i] - p_[i];
  return q;
}

MarkedFourfold MarkedFourfold::standard(Lattice lattice) {
  const std::size_t n = lattice.rank();
  if (n < 2) throw Error(ErrorKind::kWrongRank, "a marked lattice has rank >= 2");
  return MarkedFourfold(std::move(lattice), unit(n, 0), unit(n, 1));
}

Integer delta(const MarkedFourfold& m, const LatticeVector& t) {
  return bilinear(m.lattice(), t, m.q());
}

OddDelta exists_odd_delta(const MarkedFourfold& m) {
  const LatticeVector along_q = pairing_row(m.lattice(), m.q());
  for (std::size_t i = 0; i < along_q.size(); ++i)
    if (along_q[i] % 2 != 0) return {true, i};
  return {};
}

bool is_trivially_rational_rank3(const Lattice& lattice) {
  if (lattice.rank() != 3) throw Error(ErrorKind::kWrongRank, "criterion applies to rank 3");
  return discriminant(lattice) % 2 != 0;
}

bool is_trivially_rational_rank3(const MarkedFourfold& m) {
  return is_trivially_rational_rank3(m.lattice());
}

Integer rk2_discriminant(const Integer& a, const Integer& b, const Integer& c) {
  return determinant(IntMatrix{{3, 2, a}, {2, 4, c}, {a, c, b}});
}

Integer rk2_discriminant_closed_form(const Integer& a, const Integer& b, const Integer& c) {
  return -4 * a * a + 8 * b + 4 * c * a - 3 * c * c;
}

Integer ns_to_ax_disc(const Integer& d_ns, int epsilon) {
  if (epsilon != 1 && epsilon != 2) {
    throw Error(ErrorKind::kBadEpsilon, "epsilon must be 1 or 2, got " + std::to_string(epsilon));
  }
  const Integer magnitude = d_ns < 0 ? Integer(-d_ns) : d_ns;
  return epsilon == 2 ? Integer(4 * magnitude) : magnitude;
}

Lattice build_L_dc(const FamilyParams& params) {
  if (params.d == 0) throw Error(ErrorKind::kZeroD, "d must be nonzero");
  if (4 * params.c - params.d * params.d >= 0) {
    throw Error(ErrorKind::kSignatureViolation,
                "4c - d^2 = " + Integer(4 * params.c - params.d * params.d).str() +
                    " must be negative for signature (1,1)");
  }
  return Lattice(IntMatrix{{2, params.d}, {params.d, 2 * params.c}});
}

std::string_view to_string(FamilyVerdict verdict) {
  switch (verdict) {
    case FamilyVerdict::kNotTriviallyRational: return "NotTriviallyRational";
    case FamilyVerdict::kUndetermined: return "Undetermined";
  }
  return "Unknown";
}

FamilyVerdict classify_family(const FamilyParams& params) {
  const Lattice ns = build_L_dc(params);
  // d(NS) = 4c − d² is even iff d is even; the rank-3 A(X) then has even
  // discriminant.
  const bool even_disc = discriminant(ns) % 2 == 0;
  if (even_disc != (params.d % 2 == 0)) {
    throw Error(ErrorKind::kInvariantViolation, "discriminant parity disagrees with d");
  }
  return even_disc ? FamilyVerdict::kNotTriviallyRational : FamilyVerdict::kUndetermined;
}

std::string_view to_string(LongRootScope scope) {
  switch (scope) {
    case LongRootScope::kCoset: return "coset";
    case LongRootScope::kAgainstComplement: return "against-A0";
    case LongRootScope::kAgainstAmbient: return "against-A";
  }
  return "unknown";
}

bool ConditionReport::all_pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

ConditionReport mayanskiy_check(const Lattice& lattice, const LatticeVector& a,
                                const MayanskiyOptions& options) {
  const std::size_t n = lattice.rank();
  if (n < 2) throw Error(ErrorKind::kWrongRank, "condition check needs rank >= 2");
  if (a.size() != n) throw Error(ErrorKind::kDimensionMismatch, "a must match the lattice rank");
  if (!is_positive_definite(lattice)) {
    throw Error(ErrorKind::kNotPositiveDefinite, "A(X) must be positive definite");
  }

  ConditionReport report;
  report.outside_rank3_scope = n != 3;
  auto& [c1, c2, c3, c4, c5, c6] = report.conditions;

  const Integer a_norm = norm(lattice, a);
  c1 = {a_norm == 3, "b(a,a) = " + a_norm.str()};

  Complement complement = orthogonal_complement(lattice, {a});
  const Lattice& a0 = complement.lattice;
  c2.pass = is_even(a0);
  c2.evidence = "A0 Gram " + format_gram(a0) + (c2.pass ? " is even" : " has an odd diagonal entry");

  if (c2.pass) {
    const auto shorts = short_roots(a0);
    c3.pass = shorts.empty();
    c3.evidence = c3.pass ? "no norm-2 vectors in A0"
                          : "short root " + format_vector(to_ambient(complement.basis, shorts.front(), n)) +
                                " (" + std::to_string(shorts.size()) + " up to sign)";

    std::vector<LatticeVector> longs;
    std::string scope;
    switch (options.long_root_scope) {
      case LongRootScope::kCoset:
        longs = long_roots_in_coset(lattice, a, complement.basis);
        scope = "norm-6 vectors v with (v +- a)/3 in A";
        break;
      case LongRootScope::kAgainstComplement:
        longs = long_roots(a0);
        scope = "norm-6 vectors with pairings against A0 divisible by 3";
        break;
      case LongRootScope::kAgainstAmbient:
        longs = long_roots_against_ambient(lattice, complement.basis);
        scope = "norm-6 vectors with pairings against A divisible by 3";
        break;
    }
    c4.pass = longs.empty();
    c4.evidence = c4.pass ? "no " + scope
                          : "long root " + format_vector(to_ambient(complement.basis, longs.front(), n)) +
                                " (" + std::to_string(longs.size()) + " up to sign)";
  } else {
    c3 = {false, "not evaluated: A0 is odd"};
    c4 = {false, "not evaluated: A0 is odd"};
  }

  const std::size_t bad = first_condition5_failure(lattice, a);
  c5.pass = bad == n;
  c5.evidence = c5.pass ? "b(a,e)^2 - b(e,e) even on every basis vector"
                        : "odd on basis vector e" + std::to_string(bad + 1);

  if (!c5.pass) {
    c6 = {false, "not evaluated: form undefined on A_A"};
  } else {
    try {
      const FiniteQuadraticForm q = mayanskiy_q(lattice, a);
      const int sigma = milgram_signature(q, options.enumeration_cap);
      report.milgram_residue = sigma;
      std::ostringstream orders;
      for (std::size_t i = 0; i < q.orders().size(); ++i) orders << (i ? "x" : "") << "Z/" << q.orders()[i];
      c6.pass = sigma == 0;
      c6.evidence = "sign(q) = " + std::to_string(sigma) + " mod 8 on A_A = " +
                    (q.orders().empty() ? std::string("0") : orders.str());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInvariantViolation) throw;
      c6 = {false, e.what()};
    }
  }
  report.complement = std::move(complement);
  return report;
}

PfaffianResult pfaffian_obstruction(const MarkedFourfold& m) {
  if (m.lattice().rank() != 3) {
    throw Error(ErrorKind::kWrongRank, "pfaffian check applies to rank 3");
  }
  PfaffianResult result;
  for (auto& tau : vectors_of_norm(m.lattice(), 10)) {
    Integer with_h2 = bilinear(m.lattice(), tau, m.h2());
    Integer with_p = bilinear(m.lattice(), tau, m.p());
    if (with_h2 < 0) {
      for (auto& x : tau) x = -x;
      with_h2 = -with_h2;
      with_p = -with_p;
    }
    const bool matches = with_h2 == 4;
    result.candidates.push_back({std::move(tau), std::move(with_h2), std::move(with_p), matches});
  }
  result.obstructed = result.candidates.empty();
  return result;
}

}  // namespace planecubic
