// Prints the closed-form lc next to the size of the best slicing for a
// range of grids, and re-checks each slicing certificate.
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "slg/slg.hpp"

int main(int argc, char** argv) {
  const std::size_t limit = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;
  std::cout << std::setw(5) << "cols" << std::setw(6) << "rows" << std::setw(6) << "lc"
            << std::setw(18) << "case" << std::setw(19) << "slicing" << std::setw(5) << "|A|"
            << std::setw(5) << "|R|" << "  certificate\n";
  for (std::size_t n = 2; n <= limit; ++n) {
    for (std::size_t m = 2; m <= n; ++m) {
      const slg::GridSpec spec{n, m};
      const auto f = slg::lc_grid_formula(n, m);
      const auto s = slg::best_slicing(spec);
      const bool ok = slg::verify_slicing(slg::grid(spec), s).all_passed();
      std::cout << std::setw(5) << n << std::setw(6) << m << std::setw(6) << f.r << std::setw(18)
                << slg::to_string(f.formula_case) << std::setw(19) << slg::to_string(s.orientation)
                << std::setw(5) << s.a.size() << std::setw(5) << s.removed.size() << "  "
                << (ok ? "ok" : "FAILED") << '\n';
    }
  }
}
