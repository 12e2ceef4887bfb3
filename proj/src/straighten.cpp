#include "tabhom/straighten.hpp"

namespace tabhom {

long long weight(const Tableau& a) {
  long long w = 0;
  for (std::size_t i = 0; i < a.num_rows(); ++i) w += static_cast<long long>(i + 1) * a.row(i).sum();
  return w;
}

Tableau row_window(const Tableau& a, std::size_t l) {
  require(l + 1 < a.num_rows(), "row window out of range");
  return Tableau({a.row(l), a.row(l + 1)});
}

std::optional<std::size_t> violating_window(const Tableau& a, WindowChoice choice) {
  std::optional<std::size_t> found;
  for (std::size_t l = 0; l + 1 < a.num_rows(); ++l) {
    if (!is_semistandard(row_window(a, l))) {
      found = l;
      if (choice == WindowChoice::topmost) break;
    }
  }
  return found;
}

LinComb semistandardize(const Tableau& a, StraightenOptions options) {
  return Straightener(options).semistandardize(a);
}

LinComb semistandardize_lincomb(const LinComb& c, StraightenOptions options) {
  return Straightener(options).semistandardize(c);
}

}  // namespace tabhom
