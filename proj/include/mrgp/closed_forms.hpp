#pragma once

// Closed-form descriptions of the geometric-progression solution sets for
// the cases where they are known explicitly. Each one is independent of the
// general algorithm and serves as a fast path and as a cross-check.

#include <string>
#include <vector>

#include "mrgp/algorithm.hpp"
#include "mrgp/field.hpp"
#include "mrgp/units.hpp"

namespace mrgp {

enum class Finiteness { finite, infinite_if_nonempty, infinite };

inline std::string_view finiteness_name(Finiteness f) {
  switch (f) {
    case Finiteness::finite: return "FINITE";
    case Finiteness::infinite_if_nonempty: return "INFINITE_IF_NONEMPTY";
    case Finiteness::infinite: return "INFINITE";
  }
  return "?";
}

struct FinitenessVerdict {
  Finiteness verdict;
  std::string reason;
};

/// Finite exactly over Q and imaginary quadratic fields (the unit group is
/// finite there). Over a real quadratic field the set is infinite as soon as
/// it has one point; d | a + b + c supplies that point (U = V = 1).
inline FinitenessVerdict classify_finiteness(const MRCoefficients& k) {
  const QuadField& f = k.field();
  if (f.is_rational()) return {Finiteness::finite, "K = Q: finitely many integral points"};
  if (f.is_imaginary()) return {Finiteness::finite, "K imaginary quadratic: finite unit group"};
  if (divides(k.d(), k.a() + k.b() + k.c()))
    return {Finiteness::infinite, "K real quadratic and d divides a + b + c"};
  return {Finiteness::infinite_if_nonempty, "K real quadratic: infinite iff a non-singular integral point exists"};
}

namespace detail {
inline void push_signed_pair(std::vector<GPTriple>& out, const MRCoefficients& k, const QuadInt& alpha,
                             const QuadInt& beta) {
  out.push_back(make_triple(k, alpha, beta));
  out.push_back(make_triple(k, -alpha, -beta));
}

inline void sort_unique(std::vector<GPTriple>& v) {
  std::sort(v.begin(), v.end(), triple_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}
}  // namespace detail

/// Over Z: for u > 0 with u^2 | a and d u^3 | c u^4 + b u^2 + a, the pair
/// (+-g, u g, +-u^2 g) with g = (c u^4 + b u^2 + a) / (d u^3). Triples with
/// g = 0 are the trivial solution and are left out.
inline std::vector<GPTriple> rational_gp(const Int& a, const Int& b, const Int& c, const Int& d) {
  const QuadField q = QuadField::rational();
  const MRCoefficients k = MRCoefficients::from_integers(q, a, b, c, d);
  std::vector<GPTriple> out;
  for (Int u = 1; u * u <= abs_int(a); ++u) {
    const Int u2 = u * u;
    if (!int_divides(u2, a)) continue;
    const Int num = c * u2 * u2 + b * u2 + a;
    const Int den = d * u2 * u;
    if (!int_divides(den, num)) continue;
    const Int g = num / den;
    if (g == 0) continue;
    // (g, u g, u^2 g) = alpha (1, u, u^2) and its joint-sign partner
    out.push_back(make_triple(k, from_integer(q, g), from_integer(q, u)));
    out.push_back(make_triple(k, from_integer(q, -g), from_integer(q, -u)));
  }
  detail::sort_unique(out);
  return out;
}

/// (1,1,1,d) over Q(sqrt -D), d > 0: (+-3, 3, +-3) for d = 1, (+-1, 1, +-1)
/// for d = 3, nothing otherwise; plus (+-i, -1, -+i) when (d, D) = (1, 1).
inline std::vector<GPTriple> imaginary_quadratic_markoff(const Int& d, std::int64_t D) {
  if (D <= 0) throw MathError(ErrorKind::invalid_d, "D must be positive");
  if (d <= 0) throw MathError(ErrorKind::invalid_d, "d must be positive");
  const QuadField f = make_field(-D);
  const MRCoefficients k = MRCoefficients::from_integers(f, 1, 1, 1, d);
  std::vector<GPTriple> out;
  const QuadInt one = from_integer(f, 1);
  if (d == 1) detail::push_signed_pair(out, k, from_integer(f, 3), one);
  if (d == 3) detail::push_signed_pair(out, k, one, one);
  if (d == 1 && D == 1) detail::push_signed_pair(out, k, omega(f), omega(f));  // (i, -1, -i)
  detail::sort_unique(out);
  return out;
}

/// One family of (1,1,1,d) over a real quadratic field: gamma = eps^(n z + k),
/// beta = (gamma + gamma^-1 + gamma^-3) / d, members (+-beta, beta gamma, +-beta gamma^2).
struct MarkoffFamily {
  QuadField field;
  Int d;
  QuadInt epsilon;
  Int n;
  Int k;

  QuadInt gamma(long z) const { return unit_pow(epsilon, n * z + k); }

  GPTriple member(long z, int sign = 1) const {
    const QuadInt g = gamma(z);
    const QuadInt gi = unit_inverse(g);
    const QuadInt beta = exact_div(g + gi + gi * gi * gi, from_integer(field, d));
    const MRCoefficients coeffs = MRCoefficients::from_integers(field, 1, 1, 1, d);
    return sign > 0 ? make_triple(coeffs, beta, g) : make_triple(coeffs, -beta, -g);
  }

  std::vector<GPTriple> materialize(long z_lo, long z_hi) const {
    std::vector<GPTriple> out;
    for (long z = z_lo; z <= z_hi; ++z) {
      out.push_back(member(z, 1));
      out.push_back(member(z, -1));
    }
    return out;
  }
};

struct RealQuadraticMarkoff {
  QuadField field;
  QuadInt epsilon;
  Int n;                     // order of eps modulo d
  std::vector<Int> H;        // k in [0, n) with d | eps^4k + eps^2k + 1
  std::vector<MarkoffFamily> families;
};

/// (1,1,1,d) over Q(sqrt D), D > 0. k ranges over [0, n): k = n only repeats
/// the k = 0 family shifted by one step in z.
inline RealQuadraticMarkoff real_quadratic_markoff(const Int& d, std::int64_t D) {
  if (D <= 0) throw MathError(ErrorKind::invalid_d, "D must be positive");
  if (d <= 0) throw MathError(ErrorKind::invalid_d, "d must be positive");
  const QuadField f = make_field(D);
  const QuadInt eps = fundamental_unit(f);
  const QuadInt d_elt = from_integer(f, d);
  const Int n = unit_order_mod(eps, d_elt);
  RealQuadraticMarkoff out{f, eps, n, {}, {}};

  const Int modulus = abs_int(norm(d_elt));
  const QuadInt eps2 = detail::reduce_coords(eps * eps, modulus);
  QuadInt g2 = from_integer(f, 1);  // eps^(2k) mod d
  for (Int k = 0; k < n; ++k) {
    const QuadInt value = g2 * g2 + g2 + Int(1);
    if (divides(d_elt, detail::reduce_coords(value, modulus))) {
      out.H.push_back(k);
      out.families.push_back({f, d, eps, n, k});
    }
    g2 = detail::reduce_coords(g2 * eps2, modulus);
  }
  return out;
}

/// a, d units: every unit u yields (g_u, u g_u, u^2 g_u), g_u = d^-1 (c u + b u^-1 + a u^-3).
struct UnitCoefficientFamily {
  MRCoefficients coeffs;
  UnitGroupDesc units;

  /// g_u = 0 gives the trivial triple; returns nullopt then.
  std::optional<GPTriple> member(const QuadInt& u) const {
    const QuadInt ui = unit_inverse(u);
    const QuadInt g = exact_div(coeffs.c() * u + coeffs.b() * ui + coeffs.a() * ui * ui * ui, coeffs.d());
    if (g.is_zero()) return std::nullopt;
    return make_triple(coeffs, g, u);
  }

  /// Members for u = zeta^l eps^m, every l, m in [m_lo, m_hi] (m = 0 only on rank-0 fields).
  std::vector<GPTriple> materialize(long m_lo, long m_hi) const {
    std::vector<GPTriple> out;
    if (!units.fundamental_unit) {
      m_lo = 0;
      m_hi = 0;
    }
    QuadInt zeta = from_integer(coeffs.field(), 1);
    for (int l = 0; l < units.torsion_order; ++l) {
      for (long m = m_lo; m <= m_hi; ++m) {
        QuadInt u = zeta;
        if (units.fundamental_unit) u *= unit_pow(*units.fundamental_unit, Int(m));
        if (auto t = member(u)) out.push_back(*std::move(t));
      }
      zeta *= units.torsion_generator;
    }
    return out;
  }
};

inline UnitCoefficientFamily unit_coefficient_gp(const MRCoefficients& k) {
  if (!is_unit(k.a()) || !is_unit(k.d())) throw MathError(ErrorKind::not_units, "a and d must be units");
  return {k, unit_group(k.field())};
}

}  // namespace mrgp
