#pragma once

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mrgp/mrgp.hpp"

namespace mrgp::test {

inline QuadField F(std::int64_t d) { return d == 1 ? make_rational_field() : make_field(d); }

inline QuadInt E(const QuadField& f, long p, long q = 0) { return QuadInt(f, Int(p), Int(q)); }

inline MRCoefficients K(std::int64_t D, long a, long b, long c, long d) {
  return MRCoefficients::from_integers(F(D), a, b, c, d);
}

using Key = std::tuple<std::string, std::string, std::string, std::string, std::string, std::string>;

inline Key key(const GPTriple& t) {
  return {t.x.p().get_str(), t.x.q().get_str(), t.y.p().get_str(),
          t.y.q().get_str(), t.z.p().get_str(), t.z.q().get_str()};
}

inline std::set<Key> keys(const std::vector<GPTriple>& v) {
  std::set<Key> s;
  for (const GPTriple& t : v) s.insert(key(t));
  return s;
}

/// Triple from text, e.g. T(f, "3", "3", "3").
inline GPTriple T(const MRCoefficients& k, const std::string& x, const std::string& y, const std::string& z) {
  const QuadField& f = k.field();
  const QuadInt X = parse_element(f, x);
  const QuadInt Y = parse_element(f, y);
  const QuadInt Z = parse_element(f, z);
  const QuadInt beta = exact_div(Y, X);
  GPTriple t = make_triple(k, X, beta);
  if (!(t.z == Z)) throw std::logic_error("not a geometric progression: " + x + ", " + y + ", " + z);
  return t;
}

inline std::set<Key> solve_triples_finite(const MRCoefficients& k) {
  const GPResult r = triples_from_points(k, solve(k));
  return keys(r.finite_triples);
}

}  // namespace mrgp::test
