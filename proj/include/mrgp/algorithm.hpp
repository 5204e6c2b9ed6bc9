#pragma once

// Integral points on the quartic  c Y^4 - d X Y^3 + b Y^2 + a = 0  over O_K,
// and the Markoff-Rosenberger triples in geometric progression they encode:
// (X, Y) <-> (X, X Y, X Y^2).
//
// The points are parametrized by psi(U, V) = ((c U^4 + b V^2 U^2 + a V^4) / (d U^3 V), U / V)
// with V = delta0 and U = t * eta * eps^(tau z), t running over classes of
// bounded norm and eta over units passing an integrality filter.

#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "mrgp/field.hpp"
#include "mrgp/norm_solve.hpp"
#include "mrgp/units.hpp"

namespace mrgp {

/// Coefficients of a x^2 + b y^2 + c z^2 = d x y z. a, c, d must be nonzero.
class MRCoefficients {
 public:
  MRCoefficients(QuadInt a, QuadInt b, QuadInt c, QuadInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const QuadField& f = a_.field();
    if (b_.field() != f || c_.field() != f || d_.field() != f)
      throw MathError(ErrorKind::field_mismatch, "coefficients must share a field");
    if (a_.is_zero()) throw MathError(ErrorKind::zero_coefficient, "a = 0");
    if (c_.is_zero()) throw MathError(ErrorKind::zero_coefficient, "c = 0");
    if (d_.is_zero()) throw MathError(ErrorKind::zero_coefficient, "d = 0");
  }

  static MRCoefficients from_integers(const QuadField& f, const Int& a, const Int& b, const Int& c, const Int& d) {
    return MRCoefficients(from_integer(f, a), from_integer(f, b), from_integer(f, c), from_integer(f, d));
  }

  const QuadField& field() const { return a_.field(); }
  const QuadInt& a() const { return a_; }
  const QuadInt& b() const { return b_; }
  const QuadInt& c() const { return c_; }
  const QuadInt& d() const { return d_; }

  /// (a, b, c, d) all rational integers.
  bool is_rational() const {
    return a_.is_rational_integer() && b_.is_rational_integer() && c_.is_rational_integer() &&
           d_.is_rational_integer();
  }

 private:
  QuadInt a_, b_, c_, d_;
};

/// F(X, Y) = c Y^4 - d X Y^3 + b Y^2 + a
inline QuadInt curve_value(const MRCoefficients& k, const QuadInt& x, const QuadInt& y) {
  const QuadInt y2 = y * y;
  const QuadInt y3 = y2 * y;
  return k.c() * y2 * y2 - k.d() * x * y3 + k.b() * y2 + k.a();
}

/// a x^2 + b y^2 + c z^2 - d x y z
inline QuadInt equation_value(const MRCoefficients& k, const QuadInt& x, const QuadInt& y, const QuadInt& z) {
  return k.a() * x * x + k.b() * y * y + k.c() * z * z - k.d() * x * y * z;
}

struct CurvePoint {
  QuadInt x;
  QuadInt y;

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) { return p.x == q.x && p.y == q.y; }
};

inline bool point_less(const CurvePoint& a, const CurvePoint& b) {
  return std::tie(a.y.q(), a.y.p(), a.x.q(), a.x.p()) < std::tie(b.y.q(), b.y.p(), b.x.q(), b.x.p());
}

inline CurvePoint make_curve_point(const MRCoefficients& k, QuadInt x, QuadInt y) {
  if (!curve_value(k, x, y).is_zero())
    throw MathError(ErrorKind::internal, "(" + to_string(x) + ", " + to_string(y) + ") is not on the curve");
  return {std::move(x), std::move(y)};
}

struct GPTriple {
  QuadInt x, y, z;
  QuadInt alpha;  // = x
  QuadInt beta;   // common ratio

  friend bool operator==(const GPTriple& a, const GPTriple& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

inline bool triple_less(const GPTriple& a, const GPTriple& b) {
  return std::tie(a.y.q(), a.y.p(), a.x.q(), a.x.p(), a.z.q(), a.z.p()) <
         std::tie(b.y.q(), b.y.p(), b.x.q(), b.x.p(), b.z.q(), b.z.p());
}

/// (alpha, alpha beta, alpha beta^2); checks the equation exactly.
inline GPTriple make_triple(const MRCoefficients& k, const QuadInt& alpha, const QuadInt& beta) {
  if (alpha.is_zero()) throw MathError(ErrorKind::internal, "trivial triple (alpha = 0)");
  QuadInt y = alpha * beta;
  QuadInt z = y * beta;
  if (!equation_value(k, alpha, y, z).is_zero())
    throw MathError(ErrorKind::internal, "triple fails the Markoff-Rosenberger equation");
  return {alpha, std::move(y), std::move(z), alpha, beta};
}

inline GPTriple triple_from_point(const MRCoefficients& k, const CurvePoint& pt) { return make_triple(k, pt.x, pt.y); }

/// Reverse of the bijection: (x, z / y). Requires y != 0.
inline CurvePoint point_from_triple(const GPTriple& t) { return {t.x, exact_div(t.z, t.y)}; }

namespace detail {
inline Int rational_or_norm(const QuadInt& x) { return x.is_rational_integer() ? x.p() : norm(x); }
}  // namespace detail

/// delta0 = gcd(f(c), f(d)), f(x) = x for rational integers and N(x) otherwise.
inline Int compute_delta0(const MRCoefficients& k) {
  const Int g = gcd_int(detail::rational_or_norm(k.c()), detail::rational_or_norm(k.d()));
  if (g == 0) throw MathError(ErrorKind::zero_coefficient, "c or d is zero");
  return g;
}

/// Order of the fundamental unit modulo delta0 * d * t^3 (1 for rank-0
/// fields and for unit moduli).
inline Int compute_tau(const QuadField& f, const Int& delta0, const QuadInt& d, const QuadInt& t) {
  if (f.unit_rank() == 0) return 1;
  const QuadInt m = from_integer(f, delta0) * d * t * t * t;
  return unit_order_mod(fundamental_unit(f), m);
}

/// Smallest modulus that already governs the integrality filter. Writing
/// t = delta0 s, the filter reduces to  d s^3 | c s^4 eta^4 + b s^2 eta^2 + a,
/// so its eps-exponent period divides the order of eps modulo d s^3, which in
/// turn divides compute_tau's order modulo delta0^4 d s^3.
inline Int family_period(const MRCoefficients& k, const Int& delta0, const QuadInt& t, const UnitGroupDesc& units) {
  if (!units.fundamental_unit) return 1;
  const QuadInt s = exact_div(t, from_integer(k.field(), delta0));
  return unit_order_mod(*units.fundamental_unit, k.d() * s * s * s);
}

/// eta = zeta^torsion_index * eps^eps_exponent
struct HUnit {
  int torsion_index;
  Int eps_exponent;
  QuadInt value;
};

/// Units eta = zeta^l eps^j, 0 <= l < k, 0 <= j < tau, with psi(t eta, delta0)
/// integral: delta0 | t eta and d (t eta)^3 delta0 | c (t eta)^4 + b delta0^2 (t eta)^2 + a delta0^4.
/// The scan runs on coordinates reduced mod |N(delta0 d t^3)|; only hits are
/// raised to exact powers.
inline std::vector<HUnit> compute_H(const MRCoefficients& k, const Int& delta0, const QuadInt& t, const Int& tau,
                                    const UnitGroupDesc& units) {
  const QuadField& f = k.field();
  std::vector<HUnit> out;
  const QuadInt delta0_elt = from_integer(f, delta0);
  if (!divides(delta0_elt, t)) return out;
  const QuadInt m = delta0_elt * k.d() * t * t * t;
  const Int n = abs_int(norm(m));
  const bool unit_modulus = n == 1;
  const QuadInt d2 = from_integer(f, delta0 * delta0);
  const QuadInt d4 = d2 * d2;
  auto passes = [&](const QuadInt& eta) {
    if (unit_modulus) return true;
    const QuadInt s = detail::reduce_coords(t * eta, n);
    const QuadInt s2 = detail::reduce_coords(s * s, n);
    const QuadInt value = k.c() * s2 * s2 + k.b() * d2 * s2 + k.a() * d4;
    return divides(m, detail::reduce_coords(value, n));
  };

  const std::uint64_t steps = units.fundamental_unit ? tau.get_ui() : 1;
  const QuadInt one = from_integer(f, 1);
  QuadInt zeta_l = one;
  for (int l = 0; l < units.torsion_order; ++l) {
    QuadInt eta = unit_modulus ? zeta_l : detail::reduce_coords(zeta_l, n);
    const QuadInt step =
        units.fundamental_unit ? (unit_modulus ? *units.fundamental_unit : detail::reduce_coords(*units.fundamental_unit, n))
                               : one;
    for (std::uint64_t j = 0; j < steps; ++j) {
      if (passes(eta)) {
        QuadInt exact = zeta_l;
        if (units.fundamental_unit && j > 0) exact *= pow(*units.fundamental_unit, j);
        out.push_back({l, Int(static_cast<unsigned long>(j)), std::move(exact)});
      }
      if (j + 1 < steps) eta = unit_modulus ? eta * step : detail::reduce_coords(eta * step, n);
    }
    zeta_l *= units.torsion_generator;
  }
  return out;
}

inline std::vector<HUnit> compute_H(const MRCoefficients& k, const Int& delta0, const QuadInt& t, const Int& tau) {
  return compute_H(k, delta0, t, tau, unit_group(k.field()));
}

/// psi(U, V); throws NotIntegral when either coordinate leaves O_K.
inline CurvePoint psi_map(const MRCoefficients& k, const QuadInt& u, const QuadInt& v) {
  if (u.is_zero() || v.is_zero()) throw MathError(ErrorKind::division_by_zero, "psi needs U, V != 0");
  const QuadInt u2 = u * u;
  const QuadInt v2 = v * v;
  const QuadInt num = k.c() * u2 * u2 + k.b() * v2 * u2 + k.a() * v2 * v2;
  const QuadInt den = k.d() * u2 * u * v;
  auto x = detail::try_divide(num, den);
  auto y = detail::try_divide(u, v);
  if (!x || !y) throw MathError(ErrorKind::not_integral, "psi(" + to_string(u) + ", " + to_string(v) + ") is not integral");
  return make_curve_point(k, *std::move(x), *std::move(y));
}

/// { psi(t * eta * eps^(tau z), delta0) : z in Z }
struct SolutionFamily {
  MRCoefficients coeffs;
  QuadInt t;
  QuadInt eta;
  Int delta0;
  Int tau;
  std::optional<QuadInt> generator;
  int torsion_index = 0;
  Int eps_exponent;

  /// t * eta * eps^(tau z)
  QuadInt parameter(long z) const {
    QuadInt u = t * eta;
    if (generator && z != 0) u *= unit_pow(*generator, tau * z);
    return u;
  }
};

inline std::vector<CurvePoint> materialize_family(const SolutionFamily& fam, long z_lo, long z_hi) {
  std::vector<CurvePoint> out;
  if (z_lo > z_hi) return out;
  const QuadInt v = from_integer(fam.coeffs.field(), fam.delta0);
  QuadInt u = fam.parameter(z_lo);
  const std::optional<QuadInt> step =
      fam.generator ? std::optional<QuadInt>(pow(*fam.generator, fam.tau.get_ui())) : std::nullopt;
  for (long z = z_lo; z <= z_hi; ++z) {
    out.push_back(psi_map(fam.coeffs, u, v));
    if (step) u *= *step;
  }
  return out;
}

struct SolutionSet {
  QuadField field;
  std::vector<CurvePoint> finite_points;
  std::vector<SolutionFamily> families;
  bool is_finite = true;
};

struct SolveOptions {
  /// Test hook: return false to drop an element of H(t).
  std::function<bool(const QuadInt& t, const HUnit& eta)> keep_h;
};

inline SolutionSet solve(const MRCoefficients& k, const SolveOptions& opts = {}) {
  const QuadField& f = k.field();
  const UnitGroupDesc units = unit_group(f);
  const Int delta0 = compute_delta0(k);
  const QuadInt delta0_elt = from_integer(f, delta0);

  SolutionSet out{f, {}, {}, true};
  for (const NormClassRep& rep : compute_M(f, k.a(), delta0, units)) {
    const QuadInt& t = rep.element;
    if (!divides(delta0_elt, t)) continue;
    // s^2 | a is forced by the filter for every eta
    const QuadInt s = exact_div(t, delta0_elt);
    if (!divides(s * s, k.a())) continue;
    const Int tau = family_period(k, delta0, t, units);
    for (HUnit& h : compute_H(k, delta0, t, tau, units)) {
      if (opts.keep_h && !opts.keep_h(t, h)) continue;
      if (units.fundamental_unit) {
        out.families.push_back({k, t, h.value, delta0, tau, units.fundamental_unit, h.torsion_index, h.eps_exponent});
      } else {
        out.finite_points.push_back(psi_map(k, t * h.value, delta0_elt));
      }
    }
  }
  std::sort(out.finite_points.begin(), out.finite_points.end(), point_less);
  out.finite_points.erase(std::unique(out.finite_points.begin(), out.finite_points.end()), out.finite_points.end());
  out.is_finite = out.families.empty() || f.unit_rank() == 0;
  return out;
}

/// Triples (x, y, z) and (-x, y, -z) of one family, as eta runs over {+-eta}.
struct TripleFamily {
  SolutionFamily base;
  bool joint_sign = true;

  std::vector<GPTriple> materialize(long z_lo, long z_hi) const {
    std::vector<GPTriple> out;
    for (const CurvePoint& pt : materialize_family(base, z_lo, z_hi)) {
      if (pt.x.is_zero()) continue;
      out.push_back(triple_from_point(base.coeffs, pt));
      if (joint_sign) out.push_back(triple_from_point(base.coeffs, CurvePoint{-pt.x, -pt.y}));
    }
    return out;
  }
};

struct GPResult {
  QuadField field;
  std::vector<GPTriple> finite_triples;
  std::vector<TripleFamily> families;
  bool is_finite = true;
};

/// Applies (X, Y) -> (X, XY, XY^2), dropping X = 0. Families whose eta differ
/// only by sign are merged into one TripleFamily.
inline GPResult triples_from_points(const MRCoefficients& k, const SolutionSet& sols) {
  GPResult out{sols.field, {}, {}, sols.is_finite};
  for (const CurvePoint& pt : sols.finite_points)
    if (!pt.x.is_zero()) out.finite_triples.push_back(triple_from_point(k, pt));
  std::sort(out.finite_triples.begin(), out.finite_triples.end(), triple_less);

  std::vector<bool> used(sols.families.size(), false);
  for (std::size_t i = 0; i < sols.families.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const SolutionFamily& fam = sols.families[i];
    bool paired = false;
    for (std::size_t j = i + 1; j < sols.families.size(); ++j) {
      const SolutionFamily& other = sols.families[j];
      if (!used[j] && other.t == fam.t && other.eta == -fam.eta && other.tau == fam.tau) {
        used[j] = true;
        paired = true;
        break;
      }
    }
    // keep the eta with torsion index 0 (positive sign) as the base
    out.families.push_back({fam, paired});
  }
  return out;
}

}  // namespace mrgp
