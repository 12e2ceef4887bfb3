#include "tabhom/quantum.hpp"

#include "tabhom/errors.hpp"

#include <mutex>
#include <vector>

namespace tabhom {

LaurentPoly quantum_int(int n) {
  require(n >= 0, "quantum_int: n must be nonnegative");
  LaurentPoly p;
  for (int i = 0; i < n; ++i) p.add_scaled(LaurentPoly(1), i, 1);
  return p;
}

LaurentPoly quantum_factorial(int n) {
  require(n >= 0, "quantum_factorial: n must be nonnegative");
  LaurentPoly p(1);
  for (int i = 2; i <= n; ++i) p *= quantum_int(i);
  return p;
}

namespace {

struct BinomialTable {
  std::mutex mutex;
  // rows[n][r] for 0 <= r <= n
  std::vector<std::vector<LaurentPoly>> rows{{LaurentPoly(1)}};
};

BinomialTable& binomial_table() {
  static BinomialTable table;
  return table;
}

}  // namespace

LaurentPoly quantum_binomial(int n, int r) {
  require(n >= 0, "quantum_binomial: n must be nonnegative");
  if (r < 0 || r > n) return {};
  auto& table = binomial_table();
  std::lock_guard lock(table.mutex);
  auto& rows = table.rows;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const int m = static_cast<int>(rows.size());
    std::vector<LaurentPoly> row(static_cast<std::size_t>(m) + 1);
    row[0] = LaurentPoly(1);
    row[static_cast<std::size_t>(m)] = LaurentPoly(1);
    for (int k = 1; k < m; ++k) {
      LaurentPoly b = prev[static_cast<std::size_t>(k - 1)];
      b.add_scaled(prev[static_cast<std::size_t>(k)], k, 1);
      row[static_cast<std::size_t>(k)] = std::move(b);
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

}  // namespace tabhom
