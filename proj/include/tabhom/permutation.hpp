#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tabhom {

/// Permutation of {1..n} in one-line form: images()[i-1] is the image of i.
///
/// Permutations act on the right, so products read left to right:
/// (a * b)(i) = b(a(i)).  With this convention w * s_i swaps the values i
/// and i+1 in the one-line form, and l(w s_i) > l(w) iff i occurs before
/// i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// s_i = (i i+1) in S_n.
  static Permutation simple(int n, int i);
  /// Inverse of packed().
  static Permutation unpack(std::uint64_t code, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// Coxeter length = number of inversions.
  int length() const;
  bool is_identity() const;
  /// A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}, obtained
  /// by repeatedly stripping right descents.
  std::vector<int> reduced_word() const;

  /// Four bits per image (n <= 16).
  std::uint64_t packed() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

  /// "[1,4,5,2,6,3]"
  std::string to_string() const;
  /// Disjoint cycles without fixed points, e.g. "(2 4)(3 5 6)"; "()" for the identity.
  std::string cycle_string() const;

 private:
  std::vector<int> images_;
};

/// Number of pairs i < j with w(i) > w(j).
int inversions(const Permutation& w);

}  // namespace tabhom
