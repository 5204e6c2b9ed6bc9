#pragma once

// Brute-force ground truth. Everything here works straight from the
// definitions (scan Y, divide for X) and shares nothing with the unit-group
// and norm-equation machinery of the solver.
//
// Height of an element = max(|p|, |q|) in the {1, w} basis.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "mrgp/algorithm.hpp"
#include "mrgp/field.hpp"

namespace mrgp {

namespace detail {

// Calls visit(Y) for every nonzero Y of height <= bound whose norm satisfies
// N(Y)^2 | N(a). That is necessary for a point: d Y^3 divides
// c Y^4 + b Y^2 + a, so Y^2 | a.
template <class Visit>
void scan_candidates(const MRCoefficients& k, std::int64_t bound, Visit&& visit) {
  const QuadField& f = k.field();
  const Int na = abs_int(f.is_rational() ? k.a().p() : norm(k.a()));
  const Int r = isqrt(na);
  using i128 = __int128;
  const i128 r128 = r.fits_slong_p() ? static_cast<i128>(r.get_si()) : std::numeric_limits<std::int64_t>::max();
  const bool na_small = na.fits_slong_p();
  const i128 na128 = na_small ? static_cast<i128>(na.get_si()) : 0;
  const bool half = f.basis() == BasisMode::omega_half;
  const i128 w2c = f.is_rational() ? 0 : static_cast<i128>(f.w2_const().get_si());

  const std::int64_t q_lim = f.is_rational() ? 0 : bound;
  for (std::int64_t q = -q_lim; q <= q_lim; ++q) {
    const i128 qq = static_cast<i128>(q) * q;
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (p == 0 && q == 0) continue;
      i128 n;
      if (f.is_rational()) n = p;
      else if (half) n = static_cast<i128>(p) * p + static_cast<i128>(p) * q - w2c * qq;
      else n = static_cast<i128>(p) * p - w2c * qq;
      const i128 an = n < 0 ? -n : n;
      if (an > r128) continue;
      if (na_small) {
        if (na128 % (an * an) != 0) continue;
      } else {
        const Int n2 = Int(static_cast<long>(an)) * static_cast<long>(an);
        if (!int_divides(n2, na)) continue;
      }
      visit(QuadInt(f, Int(static_cast<long>(p)), Int(static_cast<long>(q))));
    }
  }
}

// X = (c Y^4 + b Y^2 + a) / (d Y^3) when integral.
inline std::optional<QuadInt> solve_for_x(const MRCoefficients& k, const QuadInt& y) {
  const QuadInt y2 = y * y;
  return try_divide(k.c() * y2 * y2 + k.b() * y2 + k.a(), k.d() * y2 * y);
}

}  // namespace detail

/// All (X, Y) with heights <= bound on  c Y^4 - d X Y^3 + b Y^2 + a = 0.
inline std::vector<CurvePoint> brute_force_curve_points(const MRCoefficients& k, std::int64_t height_bound) {
  std::vector<CurvePoint> out;
  const Int hb(static_cast<long>(height_bound));
  detail::scan_candidates(k, height_bound, [&](const QuadInt& y) {
    auto x = detail::solve_for_x(k, y);
    if (x && height(*x) <= hb) out.push_back(make_curve_point(k, *x, y));
  });
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

/// All (alpha, alpha beta, alpha beta^2) with alpha != 0 and alpha, beta of
/// height <= bound, where alpha^2 (c beta^4 - d alpha beta^3 + b beta^2 + a) = 0.
inline std::vector<GPTriple> brute_force_triples(const MRCoefficients& k, std::int64_t height_bound) {
  std::vector<GPTriple> out;
  const Int hb(static_cast<long>(height_bound));
  detail::scan_candidates(k, height_bound, [&](const QuadInt& beta) {
    auto alpha = detail::solve_for_x(k, beta);
    if (!alpha || alpha->is_zero() || height(*alpha) > hb) return;
    out.push_back(make_triple(k, *alpha, beta));
  });
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

/// Solver points with both coordinates of height <= bound. Families are
/// walked outward from z = 0 in both directions until the parameter is past
/// its minimum and its larger conjugate already forces the height over the bound.
inline std::vector<CurvePoint> solver_points_in_box(const SolutionSet& sols, const Int& bound) {
  std::vector<CurvePoint> out;
  for (const CurvePoint& pt : sols.finite_points)
    if (height(pt.x) <= bound && height(pt.y) <= bound) out.push_back(pt);

  const double log_bound = log_abs(bound);
  for (const SolutionFamily& fam : sols.families) {
    const QuadField& f = fam.coeffs.field();
    const double log_w = std::log(1.0 + std::sqrt(static_cast<double>(f.d())));
    const QuadInt v = from_integer(f, fam.delta0);
    const QuadInt step = pow(*fam.generator, fam.tau.get_ui());
    const QuadInt step_inv = unit_inverse(step);
    for (int dir : {1, -1}) {
      QuadInt u = fam.t * fam.eta;
      if (dir < 0) u *= step_inv;
      for (long guard = 0; guard < 100000; ++guard) {
        const QuadInt y = exact_div(u, v);
        if (height(y) <= bound) {
          const CurvePoint pt = psi_map(fam.coeffs, u, v);
          if (height(pt.x) <= bound) out.push_back(pt);
        } else {
          const auto [lx, lsx] = log_abs_embeddings(y);
          const bool growing = dir > 0 ? lx >= lsx : lsx >= lx;
          if (growing && std::max(lx, lsx) - log_w > log_bound + 1e-9) break;
        }
        u *= dir > 0 ? step : step_inv;
      }
    }
  }
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct OracleReport {
  std::vector<CurvePoint> missing;  // found by the oracle, not by the solver
  std::vector<CurvePoint> extra;    // emitted by the solver, not found by the oracle
  std::size_t solver_count = 0;
  std::size_t oracle_count = 0;

  bool empty() const { return missing.empty() && extra.empty(); }
};

inline OracleReport compare(const SolutionSet& solver_output, std::vector<CurvePoint> oracle_output,
                            const Int& height_bound) {
  std::vector<CurvePoint> mine = solver_points_in_box(solver_output, height_bound);
  std::sort(oracle_output.begin(), oracle_output.end(), point_less);
  OracleReport r;
  r.solver_count = mine.size();
  r.oracle_count = oracle_output.size();
  std::set_difference(oracle_output.begin(), oracle_output.end(), mine.begin(), mine.end(),
                      std::back_inserter(r.missing), point_less);
  std::set_difference(mine.begin(), mine.end(), oracle_output.begin(), oracle_output.end(),
                      std::back_inserter(r.extra), point_less);
  return r;
}

/// Solver triples inside the (alpha, beta) box, for comparison with brute_force_triples.
inline std::vector<GPTriple> solver_triples_in_box(const MRCoefficients& k, const SolutionSet& sols, const Int& bound) {
  std::vector<GPTriple> out;
  for (const CurvePoint& pt : solver_points_in_box(sols, bound))
    if (!pt.x.is_zero()) out.push_back(triple_from_point(k, pt));
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

}  // namespace mrgp
