#pragma once

#include "tabhom/laurent_poly.hpp"
#include "tabhom/lincomb.hpp"
#include "tabhom/multiset.hpp"
#include "tabhom/tableau.hpp"

#include <vector>

namespace tabhom {

/// Input of the two-row Garnir-type relation: multisets R, S, T and the
/// first-row length m of the shape (m, n-m), where n = |R|+|S|+|T|.
/// Validated on construction: |S| > m, |R| <= m and m >= n-m.
class GarnirDatum {
 public:
  GarnirDatum(Multiset r, Multiset s, Multiset t, int m);

  const Multiset& r() const { return r_; }
  const Multiset& s() const { return s_; }
  const Multiset& t() const { return t_; }
  int m() const { return m_; }
  int n() const { return r_.size() + s_.size() + t_.size(); }
  /// |U| for every split.
  int first_row_share() const { return m_ - r_.size(); }
  Partition shape() const { return Partition{m_, n() - m_}; }
  Composition type() const { return Composition((r_ + s_ + t_).counts()); }

 private:
  Multiset r_, s_, t_;
  int m_;
};

/// S = U + V with |U| = m - |R|.
struct Split {
  Multiset u;
  Multiset v;
  bool operator==(const Split&) const = default;
};

/// Every split of S, ordered by U.
std::vector<Split> enumerate_splits(const GarnirDatum& d);

/// Rows R + U over T + V.
Tableau build_tableau(const GarnirDatum& d, const Split& s);

/// prod_i [R_i+U_i, R_i] [T_i+V_i, T_i] * q^(sum_{i<j} R_j U_i + T_i V_j)
LaurentPoly split_coefficient(const GarnirDatum& d, const Split& s);

/// sum over splits of split_coefficient * A[U,V]; vanishes on the Specht
/// module.
LinComb garnir_relation(const GarnirDatum& d);

enum class ColumnChoice { leftmost, rightmost };

/// The datum used to straighten a non-semistandard two-row tableau at its
/// chosen violating column i with j = A(1,i):
///   R = {k in A^1 : k < j}, S = {k in A^1 : k >= j} + {k in A^2 : k <= j},
///   T = {k in A^2 : k > j}.
GarnirDatum straightening_datum(const Tableau& a, ColumnChoice column = ColumnChoice::leftmost);

/// Expresses A as minus the remaining terms of its Garnir relation.  Every
/// output tableau has a strictly smaller first-row sum than A.
LinComb two_row_straighten_step(const Tableau& a, ColumnChoice column = ColumnChoice::leftmost);

}  // namespace tabhom
