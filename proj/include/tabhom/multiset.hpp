#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tabhom {

/// Finite multiset of positive integers, stored as a multiplicity vector
/// (index v-1 holds the number of v's, no trailing zeros).
class Multiset {
 public:
  Multiset() = default;
  /// From entries, in any order.
  Multiset(std::initializer_list<int> entries);
  static Multiset from_entries(std::span<const int> entries);
  /// counts[v-1] is the multiplicity of v.
  static Multiset from_counts(std::vector<int> counts);

  int count(int value) const {
    return value >= 1 && static_cast<std::size_t>(value) <= counts_.size()
               ? counts_[static_cast<std::size_t>(value) - 1]
               : 0;
  }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int max_value() const { return static_cast<int>(counts_.size()); }
  const std::vector<int>& counts() const { return counts_; }
  /// Entries in weakly increasing order.
  std::vector<int> entries() const;
  long long sum() const;

  bool contains(const Multiset& sub) const;

  // Sub-multisets by value threshold.
  Multiset below(int j) const;     // {k : k < j}
  Multiset at_most(int j) const;   // {k : k <= j}
  Multiset at_least(int j) const;  // {k : k >= j}
  Multiset above(int j) const;     // {k : k > j}

  /// Disjoint union: multiplicities add.
  Multiset& operator+=(const Multiset& other);
  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }
  /// Difference; requires contains(b).
  friend Multiset operator-(const Multiset& a, const Multiset& b);

  friend bool operator==(const Multiset&, const Multiset&) = default;
  /// Lexicographic on the weakly increasing entry sequences.
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);

  std::size_t hash() const;
  /// "{1,2,2}"
  std::string to_string() const;

 private:
  void trim();

  std::vector<int> counts_;
  int size_ = 0;
};

/// Calls f(sub) for every sub-multiset of `avail` with the given size, in
/// increasing order of Multiset's ordering.
void for_each_submultiset(const Multiset& avail, int size,
                          const std::function<void(const Multiset&)>& f);

std::vector<Multiset> submultisets(const Multiset& avail, int size);

}  // namespace tabhom

template <>
struct std::hash<tabhom::Multiset> {
  std::size_t operator()(const tabhom::Multiset& m) const noexcept { return m.hash(); }
};
