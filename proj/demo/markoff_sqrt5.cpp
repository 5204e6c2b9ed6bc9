// Markoff triples in geometric progression over Q(sqrt 5), x^2 + y^2 + z^2 = 3xyz.

#include <iostream>

#include "mrgp/mrgp.hpp"

int main() {
  using namespace mrgp;
  const RealQuadraticMarkoff r = real_quadratic_markoff(3, 5);
  std::cout << "eps = " << to_sqrt_string(r.epsilon) << ", order mod 3 = " << r.n << "\n";
  std::cout << "H =";
  for (const Int& k : r.H) std::cout << " " << k;
  std::cout << "\n";

  // gamma = eps^(4z): alternate between the k = 0 and k = 4 families
  for (long z = 0; z <= 4; ++z) {
    const long e = 4 * z;
    for (const MarkoffFamily& fam : r.families) {
      if (e % 8 != fam.k.get_si()) continue;
      const GPTriple t = fam.member(e / 8, 1);
      std::cout << z << "  (" << to_sqrt_string(t.x) << ", " << to_sqrt_string(t.y) << ", " << to_sqrt_string(t.z)
                << ")\n";
    }
  }
}
