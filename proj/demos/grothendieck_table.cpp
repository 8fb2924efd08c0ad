// Grothendieck polynomials of S_3 by divided differences, cross-checked
// against the subword-complex route, with the reduced pipe dreams drawn.

#include <iostream>

#include "swc/coxeter.hpp"
#include "swc/grothendieck.hpp"

using namespace swc;

int main() {
  const int n = 3;
  coxeter::SymmetricGroup s3(n);

  auto single = groth::grothendieck_table(n, /*use_y=*/false);
  auto doubled = groth::grothendieck_table(n, /*use_y=*/true);

  for (const auto& [w, g] : single) {
    std::cout << "w = " << s3.to_string(w) << "\n"
              << "  single: " << g.to_text() << "\n"
              << "  double: " << doubled.at(w).to_text() << "\n";
    auto via_complex = groth::grothendieck_from_complex(n, w, false,
                                                        groth::KMethod::Absorbable);
    std::cout << "  subword-complex route agrees: "
              << (via_complex == g ? "yes" : "NO") << "\n";
    auto dreams = groth::pipe_dreams(n, w);
    std::cout << "  reduced pipe dreams (" << dreams.size() << "):\n";
    for (const auto& pd : dreams) {
      for (int r = 1; r <= n; ++r) {
        std::cout << "    ";
        for (int c = 1; c <= n; ++c) std::cout << (pd.is_crossing(r, c) ? "+" : "·");
        std::cout << "\n";
      }
      std::cout << "\n";
    }
  }

  std::cout << "top polynomial closed forms:\n"
            << "  single: " << groth::grothendieck_top(n, false).to_text() << "\n"
            << "  double: " << groth::grothendieck_top(n, true).to_text() << "\n";
  return 0;
}
