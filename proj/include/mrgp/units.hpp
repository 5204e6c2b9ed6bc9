#pragma once

// Unit group of O_K for K = Q or quadratic: torsion, fundamental unit of a
// real quadratic field (continued fractions), and multiplicative orders of
// units modulo an element.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mrgp/field.hpp"
#include "mrgp/integer.hpp"

namespace mrgp {

struct UnitGroupDesc {
  int torsion_order = 2;
  QuadInt torsion_generator;
  std::optional<QuadInt> fundamental_unit;
  std::optional<int> fundamental_unit_norm;
};

/// One step of the continued fraction of a reduced quadratic irrational
/// (P + sqrt D) / Q together with the unit q_i * alpha + q_{i-1} it yields.
struct CfStep {
  Int partial_quotient;
  Int P;
  Int Q;
  QuadInt unit_candidate;
};

namespace detail {

// alpha = (P0 + sqrt D) / Q0 with Z + Z alpha = O_K and alpha reduced
// (alpha > 1, -1 < sigma(alpha) < 0), written as shift + w.
struct ReducedGenerator {
  Int P0;
  Int Q0;
  Int shift;
};

inline ReducedGenerator reduced_generator(const QuadField& f) {
  const Int s = isqrt(Int(f.d()));
  if (f.basis() == BasisMode::omega_sqrt) return {s, 1, s};
  // largest odd P0 < sqrt D keeps sigma(alpha) in (-1, 0)
  const Int p0 = int_divides(2, s) ? Int(s - 1) : s;
  return {p0, 2, Int((p0 - 1) / 2)};
}

// Walks one full period of the expansion. The last entry's unit_candidate is
// the fundamental unit; earlier candidates are the partial convergent units.
inline std::vector<CfStep> continued_fraction_period(const QuadField& f) {
  const ReducedGenerator g = reduced_generator(f);
  const Int D(f.d());
  const Int s = isqrt(D);
  Int P = g.P0;
  Int Q = g.Q0;
  Int q_prev = 0;  // q_{-1}
  Int q_prev2 = 1; // q_{-2}
  std::vector<CfStep> steps;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 10'000'000) throw MathError(ErrorKind::internal, "continued fraction period not found");
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), Int(P + s).get_mpz_t(), Q.get_mpz_t());
    Int q_cur = a * q_prev + q_prev2;
    // unit = q_i * alpha + q_{i-1}, alpha = shift + w
    QuadInt unit(f, q_prev + q_cur * g.shift, q_cur);
    Int P_next = a * Q - P;
    Int Q_next = (D - P_next * P_next) / Q;
    steps.push_back({a, P, Q, unit});
    q_prev2 = q_prev;
    q_prev = q_cur;
    P = std::move(P_next);
    Q = std::move(Q_next);
    if (P == g.P0 && Q == g.Q0) break;
  }
  return steps;
}

}  // namespace detail

/// The least unit > 1 of a real quadratic field.
inline QuadInt fundamental_unit(const QuadField& f) {
  if (!f.is_real()) throw MathError(ErrorKind::not_real_quadratic, f.name() + " is not real quadratic");
  return detail::continued_fraction_period(f).back().unit_candidate;
}

inline std::vector<CfStep> continued_fraction_period(const QuadField& f) {
  if (!f.is_real()) throw MathError(ErrorKind::not_real_quadratic, f.name() + " is not real quadratic");
  return detail::continued_fraction_period(f);
}

inline UnitGroupDesc unit_group(const QuadField& f) {
  UnitGroupDesc g{2, from_integer(f, -1), std::nullopt, std::nullopt};
  if (f.is_imaginary() && f.d() == -1) {
    g.torsion_order = 4;
    g.torsion_generator = omega(f);  // i
  } else if (f.is_imaginary() && f.d() == -3) {
    g.torsion_order = 6;
    g.torsion_generator = omega(f);  // (1 + sqrt(-3)) / 2
  } else if (f.is_real()) {
    QuadInt eps = fundamental_unit(f);
    g.fundamental_unit_norm = static_cast<int>(norm(eps).get_si());
    g.fundamental_unit = std::move(eps);
  }
  return g;
}

inline bool negative_pell_solvable(const QuadField& f) {
  if (!f.is_real()) throw MathError(ErrorKind::not_real_quadratic, f.name() + " is not real quadratic");
  return norm(fundamental_unit(f)) == -1;
}

inline std::vector<QuadInt> torsion_units(const QuadField& f) {
  const UnitGroupDesc g = unit_group(f);
  std::vector<QuadInt> out;
  QuadInt z = from_integer(f, 1);
  for (int l = 0; l < g.torsion_order; ++l) {
    out.push_back(z);
    z *= g.torsion_generator;
  }
  return out;
}

/// u^{-1} for a unit u: sigma(u) * N(u).
inline QuadInt unit_inverse(const QuadInt& u) {
  const Int n = norm(u);
  if (n != 1 && n != -1) throw MathError(ErrorKind::not_units, to_string(u) + " is not a unit");
  if (u.field().is_rational()) return u;
  return conjugate(u) * n;
}

/// u^e for any integer e (u a unit when e < 0).
inline QuadInt unit_pow(const QuadInt& u, const Int& e) {
  if (e >= 0) return pow(u, e.get_ui());
  return pow(unit_inverse(u), Int(-e).get_ui());
}

namespace detail {

// Coordinates reduced into [0, n). Congruence mod any m with m | n is kept.
inline QuadInt reduce_coords(const QuadInt& x, const Int& n) {
  return QuadInt(x.field(), mod_floor(x.p(), n), x.field().is_rational() ? Int(0) : mod_floor(x.q(), n));
}

inline QuadInt pow_reduced(QuadInt base, Int e, const Int& n) {
  base = reduce_coords(base, n);
  QuadInt r = from_integer(base.field(), 1);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = reduce_coords(r * base, n);
    e >>= 1;
    if (e > 0) base = reduce_coords(base * base, n);
  }
  return r;
}

inline bool congruent_one(const QuadInt& x, const QuadInt& m) { return divides(m, x - Int(1)); }

inline void add_factors(std::map<Int, unsigned>& acc, const Int& n, unsigned times = 1) {
  for (const auto& [p, e] : factor_integer(n)) acc[p] += e * times;
}

}  // namespace detail

/// Least n >= 1 with m | u^n - 1. Returns 1 when m is a unit.
///
/// Computed from a multiple of the exponent of (O_K / N(m) O_K)^*: for each
/// p^e || |N(m)| that group has order p^{2(e-1)} |(O_K/p)^*|, and
/// |(O_K/p)^*| divides (p-1)^2 (p+1) p whatever the splitting of p. Prime
/// factors are then stripped while u^{L/r} stays congruent to 1.
inline Int unit_order_mod(const QuadInt& u, const QuadInt& m) {
  if (m.is_zero()) throw MathError(ErrorKind::zero_modulus, "unit order modulo zero");
  if (u.field() != m.field()) throw MathError(ErrorKind::field_mismatch, u.field().name() + " vs " + m.field().name());
  if (!is_unit(u)) throw MathError(ErrorKind::not_units, to_string(u) + " is not a unit");
  if (is_unit(m)) return 1;
  const bool rational = u.field().is_rational();
  const Int n = abs_int(norm(m));

  std::map<Int, unsigned> multiple;
  for (const auto& [p, e] : factor_integer(n)) {
    if (rational) {
      multiple[p] += e - 1;
      detail::add_factors(multiple, p - 1);
    } else {
      multiple[p] += 2 * e - 1;
      detail::add_factors(multiple, p - 1, 2);
      detail::add_factors(multiple, p + 1);
    }
  }
  Int order = 1;
  for (const auto& [r, e] : multiple) order *= pow_int(r, e);

  if (!detail::congruent_one(detail::pow_reduced(u, order, n), m))
    throw MathError(ErrorKind::internal, "group exponent bound failed for " + to_string(u));
  for (const auto& [r, e] : multiple) {
    for (unsigned k = 0; k < e; ++k) {
      const Int trial = order / r;
      if (!detail::congruent_one(detail::pow_reduced(u, trial, n), m)) break;
      order = trial;
    }
  }
  return order;
}

/// Same quantity by stepping through u, u^2, ... with coordinates reduced
/// mod |N(m)|. Throws once `cap` steps pass without reaching 1.
inline Int unit_order_mod_by_iteration(const QuadInt& u, const QuadInt& m, std::uint64_t cap = 1'000'000) {
  if (m.is_zero()) throw MathError(ErrorKind::zero_modulus, "unit order modulo zero");
  if (!is_unit(u)) throw MathError(ErrorKind::not_units, to_string(u) + " is not a unit");
  if (is_unit(m)) return 1;
  const Int n = abs_int(norm(m));
  const QuadInt step = detail::reduce_coords(u, n);
  QuadInt x = step;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (detail::congruent_one(x, m)) return Int(static_cast<unsigned long>(k));
    x = detail::reduce_coords(x * step, n);
  }
  throw MathError(ErrorKind::internal, "unit order exceeds iteration cap");
}

}  // namespace mrgp
