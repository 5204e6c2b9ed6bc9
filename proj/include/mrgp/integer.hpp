#pragma once

// Rational-integer helpers shared by the quadratic-field code.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mrgp {

using Int = mpz_class;

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Floor remainder, always in [0, |m|).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool int_divides(const Int& m, const Int& x) {
  return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Natural log of |n| for arbitrarily large n (n != 0).
inline double log_abs(const Int& n) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

/// Prime factorization of |n| by trial division. Adequate for the desk-scale
/// moduli this library works with (cofactors below ~10^14 after small primes).
inline std::map<Int, unsigned> factor_integer(const Int& n) {
  std::map<Int, unsigned> out;
  Int m = abs_int(n);
  if (m <= 1) return out;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (int_divides(p, m)) {
      m /= p;
      ++e;
    }
    if (e) out[p] += e;
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (Int p = 5; p * p <= m; p += 6) {
    strip(p);
    Int p2 = p + 2;
    strip(p2);
  }
  if (m > 1) out[m] += 1;
  return out;
}

/// All positive divisors of |n|, ascending. n must be nonzero.
inline std::vector<Int> integer_divisors(const Int& n) {
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline bool is_squarefree(std::int64_t d) {
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

}  // namespace mrgp
