// General algorithm on a few coefficient sets, with a brute-force check in a small box.

#include <iostream>

#include "mrgp/mrgp.hpp"

namespace {

void show(const mrgp::MRCoefficients& k) {
  using namespace mrgp;
  const SolutionSet sols = solve(k);
  const GPResult gp = triples_from_points(k, sols);
  std::cout << k.field().name() << "  (" << to_string(k.a()) << ", " << to_string(k.b()) << ", "
            << to_string(k.c()) << ", " << to_string(k.d()) << ")\n";
  std::cout << "  " << finiteness_name(classify_finiteness(k).verdict) << "\n";
  for (const GPTriple& t : gp.finite_triples)
    std::cout << "  (" << to_sqrt_string(t.x) << ", " << to_sqrt_string(t.y) << ", " << to_sqrt_string(t.z) << ")\n";
  for (const TripleFamily& fam : gp.families) {
    std::cout << "  family t = " << to_string(fam.base.t) << ", eta = " << to_sqrt_string(fam.base.eta)
              << ", tau = " << fam.base.tau << "\n";
    for (const GPTriple& t : fam.materialize(0, 0))
      std::cout << "    (" << to_sqrt_string(t.x) << ", " << to_sqrt_string(t.y) << ", " << to_sqrt_string(t.z)
                << ")\n";
  }
  const OracleReport rep = compare(sols, brute_force_curve_points(k, 300), 300);
  std::cout << "  brute force, height 300: " << rep.oracle_count << " points, "
            << (rep.empty() ? "agrees" : "DISAGREES") << "\n";
}

}  // namespace

int main() {
  using namespace mrgp;
  show(MRCoefficients::from_integers(make_rational_field(), 4, 1, 1, 1));
  show(MRCoefficients::from_integers(make_field(-1), 1, 1, 1, 1));
  show(MRCoefficients::from_integers(make_field(2), 1, 1, 5, 5));
  show(MRCoefficients::from_integers(make_field(3), 1, 1, 5, 5));
}
