#pragma once

#include "tabhom/composition.hpp"
#include "tabhom/multiset.hpp"
#include "tabhom/permutation.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tabhom {

/// Row-standard tableau: each row is a multiset, read in weakly increasing
/// order.  The shape is the sequence of row sizes (interior empty rows are
/// allowed, trailing empty rows are dropped) and the type counts the
/// entries equal to 1, 2, ....
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<Multiset> rows);
  /// Throws PreconditionError unless row sizes match `shape`.
  Tableau(const Composition& shape, std::vector<Multiset> rows);

  Composition shape() const;
  Composition type() const;
  Multiset content() const;

  const std::vector<Multiset>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  /// Row i, 0-based; empty past the end.
  const Multiset& row(std::size_t i) const;
  int size() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  /// Row by row, in Multiset ordering.
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

  std::size_t hash() const;
  /// "1 2 2 3 4 / 1 3 3 3"
  std::string to_string() const;

 private:
  std::vector<Multiset> rows_;
};

/// Entries along successive rows, i.e. entry at each position of t^mu.
std::vector<int> reading_word(const Tableau& a);

/// Columns strictly increase.  Requires a partition shape.
bool is_semistandard(const Tableau& a);

/// The permutation 1_A: t^la 1_A is the row-standard la-tableau in which i
/// lies in row r iff position i of t^mu holds r in A.
Permutation perm_1A(const Tableau& a);

/// sum_{g<h} sum_{i<j} A^g_j A^h_i
long long length_1A(const Tableau& a);

/// t^mu w_mu = t_mu (row reading to column reading).
Permutation w_mu(const Partition& mu);

/// (A^1_1, A^1_2, ..., A^2_1, ...) with one slot per value of the type.
Composition row_reading_composition(const Tableau& a);
/// (A^1_1, A^2_1, ..., A^1_2, A^2_2, ...)
Composition column_reading_composition(const Tableau& a);

/// All row-standard tableaux of the given shape and type, ordered
/// lexicographically row by row.
std::vector<Tableau> enumerate_row_standard(const Composition& shape, const Composition& type);
void for_each_row_standard(const Composition& shape, const Composition& type,
                           const std::function<void(const Tableau&)>& f);

/// The semistandard subsequence of enumerate_row_standard(shape, type).
std::vector<Tableau> enumerate_semistandard(const Partition& shape, const Composition& type);

/// Number of i's for each i in a composition-indexed type, as a multiset.
Multiset content_of_type(const Composition& type);

}  // namespace tabhom

template <>
struct std::hash<tabhom::Tableau> {
  std::size_t operator()(const tabhom::Tableau& t) const noexcept { return t.hash(); }
};
