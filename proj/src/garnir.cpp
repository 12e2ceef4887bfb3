#include "tabhom/garnir.hpp"

#include "tabhom/errors.hpp"
#include "tabhom/quantum.hpp"

#include <algorithm>

namespace tabhom {

GarnirDatum::GarnirDatum(Multiset r, Multiset s, Multiset t, int m)
    : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)), m_(m) {
  require(m_ >= 1, "Garnir datum: m must be positive");
  require(s_.size() > m_, "Garnir datum: need |S| > m");
  require(r_.size() <= m_, "Garnir datum: need |R| <= m");
  require(m_ >= n() - m_, "Garnir datum: (m, n-m) must be a partition");
}

std::vector<Split> enumerate_splits(const GarnirDatum& d) {
  std::vector<Split> out;
  for_each_submultiset(d.s(), d.first_row_share(),
                       [&](const Multiset& u) { out.push_back({u, d.s() - u}); });
  return out;
}

Tableau build_tableau(const GarnirDatum& d, const Split& s) {
  return Tableau(d.shape(), {d.r() + s.u, d.t() + s.v});
}

LaurentPoly split_coefficient(const GarnirDatum& d, const Split& s) {
  const int k = std::max({d.r().max_value(), d.s().max_value(), d.t().max_value()});
  LaurentPoly c(1);
  long long exponent = 0;
  for (int i = 1; i <= k; ++i) {
    const int ri = d.r().count(i), ti = d.t().count(i);
    const int ui = s.u.count(i), vi = s.v.count(i);
    if (ri && ui) c *= quantum_binomial(ri + ui, ri);
    if (ti && vi) c *= quantum_binomial(ti + vi, ti);
    for (int j = i + 1; j <= k; ++j)
      exponent += static_cast<long long>(d.r().count(j)) * ui +
                  static_cast<long long>(ti) * s.v.count(j);
  }
  return c.shift(static_cast<int>(exponent));
}

LinComb garnir_relation(const GarnirDatum& d) {
  LinComb rel(d.shape(), d.type());
  for (const auto& s : enumerate_splits(d)) rel.add(build_tableau(d, s), split_coefficient(d, s));
  return rel;
}

namespace {

void require_two_row_candidate(const Tableau& a) {
  require(a.num_rows() <= 2, "two-row straightening needs at most two rows, got shape " +
                                 a.shape().to_string());
  require(a.shape().is_partition(), "shape " + a.shape().to_string() + " is not a partition");
  require(!is_semistandard(a), "tableau " + a.to_string() + " is already semistandard");
}

}  // namespace

GarnirDatum straightening_datum(const Tableau& a, ColumnChoice column) {
  require_two_row_candidate(a);
  const auto upper = a.row(0).entries();
  const auto lower = a.row(1).entries();
  std::size_t col = lower.size();
  for (std::size_t c = 0; c < lower.size(); ++c) {
    if (upper[c] >= lower[c]) {
      col = c;
      if (column == ColumnChoice::leftmost) break;
    }
  }
  const int j = upper[col];
  return GarnirDatum(a.row(0).below(j), a.row(0).at_least(j) + a.row(1).at_most(j),
                     a.row(1).above(j), a.row(0).size());
}

LinComb two_row_straighten_step(const Tableau& a, ColumnChoice column) {
  const GarnirDatum d = straightening_datum(a, column);
  LinComb rel = garnir_relation(d);
  // A = A[U0,V0] carries coefficient 1 by the choice of R, S, T.
  if (rel.coefficient(a) != LaurentPoly(1))
    throw std::logic_error("Garnir relation for " + a.to_string() +
                           " does not contain the tableau with coefficient 1");
  rel -= LinComb::single(a);
  return -rel;
}

}  // namespace tabhom
