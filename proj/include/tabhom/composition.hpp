#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tabhom {

/// Finite sequence of nonnegative integers.  Trailing zeros are kept as
/// given but ignored by equality.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int total() const { return total_; }
  bool is_partition() const;

  Composition stripped() const;
  /// Sum of the first i parts, i.e. the 0-based start of block i.
  int offset(std::size_t i) const;
  /// Only meaningful for partitions.
  Composition conjugate() const;

  /// "(5,4)"
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// A composition with weakly decreasing parts.
class Partition : public Composition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws PreconditionError unless parts weakly decrease.
  explicit Partition(const Composition& c);
};

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// All compositions of n with exactly `parts` nonnegative parts.
std::vector<Composition> weak_compositions(int n, int parts);

/// All compositions of n with strictly positive parts.
std::vector<Composition> compositions_of(int n);

}  // namespace tabhom
