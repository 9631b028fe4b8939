// Writes a few integers as combinations of four consecutive tetrahedral
// numbers and decomposes them into sums of platonic numbers.

#include "platonic/platonic.hpp"

#include <iostream>

int main() {
  using namespace platonic;

  for (int m : {1, 0, -5, 2024}) {
    const Representation r = represent_tetrahedral(m);
    const auto values = r.values();
    std::cout << m << " = " << r.coefficients[0] << "*" << values[0];
    for (int j = 1; j < 4; ++j) {
      const int c = r.coefficients[j];
      std::cout << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c) << "*" << values[j];
    }
    std::cout << "\n";
  }

  const Pool pool = platonic_pool(200);
  for (int m : {104, 119, 155}) {
    if (auto w = min_term_decomposition(m, pool, 5)) {
      std::cout << m << " =";
      for (std::size_t i = 0; i < w->terms.size(); ++i) {
        std::cout << (i ? " + " : " ") << w->terms[i].value;
      }
      std::cout << "\n";
    }
  }
}
