#pragma once

// Norm equations |N(t)| = n solved up to units, and the candidate set M of
// the integral-points algorithm.

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <vector>

#include "mrgp/field.hpp"
#include "mrgp/integer.hpp"
#include "mrgp/units.hpp"

namespace mrgp {

struct NormClassRep {
  QuadInt element;
  Int norm_value;
};

/// Order used for every list of class representatives: |norm|, then norm
/// sign, then coordinates.
inline bool rep_less(const QuadInt& a, const QuadInt& b) {
  const Int na = norm(a);
  const Int nb = norm(b);
  const Int aa = abs_int(na);
  const Int ab = abs_int(nb);
  if (aa != ab) return aa < ab;
  if (na != nb) return na < nb;
  return std::tie(a.p(), a.q()) < std::tie(b.p(), b.q());
}

/// The distinguished associate of t (t != 0).
///
/// Real quadratic: the associate with positive embedding in
/// [sqrt|N(t)|, sqrt|N(t)| * eps). Rational and imaginary: the lexicographically
/// least (p, q) among associates with p > 0, or p = 0 and q > 0.
inline QuadInt canonical_associate(const QuadInt& t, const UnitGroupDesc& units) {
  if (t.is_zero()) throw MathError(ErrorKind::division_by_zero, "zero has no associate class");
  const QuadField& f = t.field();
  if (!f.is_real()) {
    std::optional<QuadInt> best;
    QuadInt z = from_integer(f, 1);
    for (int l = 0; l < units.torsion_order; ++l) {
      QuadInt y = z * t;
      z *= units.torsion_generator;
      if (!(y.p() > 0 || (y.p() == 0 && y.q() > 0))) continue;
      if (!best || std::tie(y.p(), y.q()) < std::tie(best->p(), best->q())) best = std::move(y);
    }
    return *best;
  }

  const QuadInt& eps = *units.fundamental_unit;
  const QuadInt eps_inv = unit_inverse(eps);
  const Int n = abs_int(norm(t));
  QuadInt x = real_sign(t) < 0 ? -t : t;

  // jump close to the target window, then settle with exact comparisons
  const double log_eps = log_abs_embeddings(eps).first;
  const double target = 0.5 * log_abs(n) + 0.5 * log_eps;
  const double k = std::round((log_abs_embeddings(x).first - target) / log_eps);
  if (k > 0.5) x *= pow(eps_inv, static_cast<unsigned long>(k));
  else if (k < -0.5) x *= pow(eps, static_cast<unsigned long>(-k));

  auto below_floor = [&](const QuadInt& v) { return real_sign(v * v - n) < 0; };
  while (below_floor(x)) x *= eps;
  for (QuadInt down = x * eps_inv; !below_floor(down); down = x * eps_inv) x = std::move(down);
  return x;
}

inline QuadInt canonical_associate(const QuadInt& t) { return canonical_associate(t, unit_group(t.field())); }

namespace detail {

inline std::vector<NormClassRep> finalize_reps(std::vector<QuadInt> raw, const UnitGroupDesc& units) {
  std::vector<QuadInt> canon;
  canon.reserve(raw.size());
  for (const QuadInt& x : raw) canon.push_back(canonical_associate(x, units));
  std::sort(canon.begin(), canon.end(), rep_less);
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<NormClassRep> out;
  out.reserve(canon.size());
  for (QuadInt& x : canon) {
    Int nv = norm(x);
    out.push_back({std::move(x), std::move(nv)});
  }
  return out;
}

// All x = p + q w with N(x) = n (n signed), |q| <= q_bound.
inline std::vector<QuadInt> norm_solutions_in_strip(const QuadField& f, const Int& n, const Int& q_bound) {
  std::vector<QuadInt> out;
  const Int D(f.d());
  const bool half = f.basis() == BasisMode::omega_half;
  for (Int q = -q_bound; q <= q_bound; ++q) {
    // sqrt basis: p^2 = n + D q^2;  half basis: (2p + q)^2 = 4n + D q^2
    const Int rhs = half ? Int(4 * n + D * q * q) : Int(n + D * q * q);
    if (rhs < 0 || !is_perfect_square(rhs)) continue;
    const Int r = isqrt(rhs);
    for (int sign : {1, -1}) {
      if (sign == -1 && r == 0) continue;
      const Int v = sign * r;
      if (half) {
        const Int twice_p = v - q;
        if (!int_divides(2, twice_p)) continue;
        out.emplace_back(f, Int(twice_p / 2), q);
      } else {
        out.emplace_back(f, v, q);
      }
    }
  }
  return out;
}

}  // namespace detail

/// One canonical representative per unit class of {t : N(t) = n}.
inline std::vector<NormClassRep> solve_norm_equation(const QuadField& f, const Int& n, const UnitGroupDesc& units) {
  if (n == 0) throw MathError(ErrorKind::zero_coefficient, "norm equation with n = 0");
  if (f.is_rational()) return detail::finalize_reps({from_integer(f, n)}, units);
  if (f.is_imaginary()) {
    if (n < 0) return {};
    // positive definite: |D| q^2 <= 4 n bounds q in either basis
    const Int q_bound = isqrt(Int(4 * n / Int(-f.d()))) + 1;
    return detail::finalize_reps(detail::norm_solutions_in_strip(f, n, q_bound), units);
  }
  // Each class has an associate x > 0 with x, |sigma x| <= sqrt(|n| eps), so
  // |q| <= 2 sqrt(|n| eps / D) (the factor 2 covers the half basis).
  const double eps = std::exp(log_abs_embeddings(*units.fundamental_unit).first);
  const double bound = 2.0 * std::sqrt(std::fabs(n.get_d()) * eps / static_cast<double>(f.d()));
  const Int q_bound = Int(std::ceil(bound)) + 2;
  return detail::finalize_reps(detail::norm_solutions_in_strip(f, n, q_bound), units);
}

inline std::vector<NormClassRep> solve_norm_equation(const QuadField& f, const Int& n) {
  return solve_norm_equation(f, n, unit_group(f));
}

/// Classes of t with N(t) | N(a) * delta0^(4 * degree). When |delta0| > 1,
/// classes not divisible by delta0 are dropped: the curve parametrization
/// needs delta0 | t * eta, and units are coprime to delta0.
inline std::vector<NormClassRep> compute_M(const QuadField& f, const QuadInt& a, const Int& delta0,
                                           const UnitGroupDesc& units) {
  if (a.is_zero()) throw MathError(ErrorKind::zero_coefficient, "a = 0");
  if (delta0 == 0) throw MathError(ErrorKind::zero_coefficient, "delta0 = 0");
  const Int bound = norm(a) * pow_int(delta0, 4 * static_cast<unsigned long>(f.degree()));
  const QuadInt delta0_elt = from_integer(f, delta0);
  const bool prune = abs_int(delta0) != 1;
  std::vector<QuadInt> all;
  for (const Int& m : integer_divisors(bound)) {
    for (const Int& signed_m : {m, Int(-m)}) {
      for (NormClassRep& r : solve_norm_equation(f, signed_m, units)) {
        if (prune && !divides(delta0_elt, r.element)) continue;
        all.push_back(std::move(r.element));
      }
    }
  }
  return detail::finalize_reps(std::move(all), units);
}

inline std::vector<NormClassRep> compute_M(const QuadField& f, const QuadInt& a, const Int& delta0) {
  return compute_M(f, a, delta0, unit_group(f));
}

}  // namespace mrgp
