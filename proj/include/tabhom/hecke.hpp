#pragma once

#include "tabhom/composition.hpp"
#include "tabhom/laurent_poly.hpp"
#include "tabhom/permutation.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tabhom {

/// Element of the Iwahori-Hecke algebra H_n in the standard basis T_w,
/// with (T_i - q)(T_i + 1) = 0.  Sparse; zero coefficients are never
/// stored.  Degree is limited to 16.
class HeckeElem {
 public:
  explicit HeckeElem(int n = 0) : n_(n) {}
  static HeckeElem unit(int n);

  int degree() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  LaurentPoly coefficient(const Permutation& w) const;
  void add_term(const Permutation& w, const LaurentPoly& c);
  /// Terms sorted by permutation.
  std::vector<std::pair<Permutation, LaurentPoly>> sorted_terms() const;

  /// Right multiplication by T_i: T_w T_i = T_{w s_i} if l(w s_i) > l(w),
  /// otherwise (q-1) T_w + q T_{w s_i}.
  HeckeElem& mul_right_gen(int i);
  /// Right multiplication by T_{i_1} ... T_{i_k}.
  HeckeElem& mul_right_word(std::span<const int> word);

  HeckeElem& operator+=(const HeckeElem& other);
  HeckeElem& operator-=(const HeckeElem& other);
  HeckeElem& operator*=(const LaurentPoly& scalar);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(HeckeElem a, const LaurentPoly& s) { return a *= s; }
  friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  // Keyed by the packed one-line form of w^{-1}: right multiplication by
  // s_i then swaps nibbles i-1 and i, and l(w s_i) > l(w) iff nibble i-1
  // is smaller.
  using Key = std::uint64_t;
  static Key key_of(const Permutation& w);
  static Permutation perm_of(Key k, int n);
  void accumulate(Key k, const LaurentPoly& c, int shift, int sign);

  int n_;
  std::unordered_map<Key, LaurentPoly> terms_;
};

/// The anti-involution T_w -> T_{w^{-1}}; turns left multiplication into
/// right multiplication.
HeckeElem star(const HeckeElem& h);

/// T_w, built from a reduced word of w.
HeckeElem t_of_perm(const Permutation& w);

/// Bilinear product in H_n.
HeckeElem mul(const HeckeElem& a, const HeckeElem& b);

/// The standard Young subgroup W_la, as permutations of {1..n}.
std::vector<Permutation> young_subgroup(const Composition& lambda);

/// x_la = sum_{w in W_la} T_w
HeckeElem x_elem(const Composition& lambda);
/// y_la = sum_{w in W_la} (-q)^{-l(w)} T_w
HeckeElem y_elem(const Composition& lambda);

/// D_nu intersect W_mu: elements d of W_mu with d(i) < d(i+1) whenever i and
/// i+1 share a block of nu.  Requires nu to refine mu blockwise.
std::vector<Permutation> coset_reps(const Composition& nu, const Composition& mu);
/// D_la, the minimal right coset representatives of W_la in S_n.
std::vector<Permutation> distinguished_reps(const Composition& lambda);

/// Spanning tree of a prefix-closed set of permutations: each non-identity
/// element d hangs below d s_i for one right descent i of d.
struct GeneratorTree {
  std::size_t root = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> children;
};
/// Throws PreconditionError unless `reps` contains the identity and is
/// closed under removing right descents.
GeneratorTree generator_tree(const std::vector<Permutation>& reps);

/// v * sum_{d in tree} T_d, one generator step per element.  V is any
/// right H_n-module type offering mul_right_gen, += and *= LaurentPoly.
template <typename V>
V right_multiply_tree(const V& v, const GeneratorTree& tree) {
  V out = v;
  out *= LaurentPoly();
  std::function<void(std::size_t, const V&)> visit = [&](std::size_t node, const V& value) {
    out += value;
    for (const auto& [child, gen] : tree.children[node]) {
      V next = value;
      next.mul_right_gen(gen);
      visit(child, next);
    }
  };
  visit(tree.root, v);
  return out;
}

/// v * sum_{w in W_la} c(w) T_w with c(w) = 1 (x_la) or (-q)^{-l(w)} (y_la),
/// as a product of one coset factor per block and size, each of the form
/// sum_k c_k T_{a+j-1} T_{a+j-2} ... T_{a+j-k}.
template <typename V>
V right_multiply_young(V v, const Composition& lambda, bool alternating) {
  for (std::size_t b = 0; b < lambda.length(); ++b) {
    const int a = lambda.offset(b);
    for (int j = 2; j <= lambda[b]; ++j) {
      V acc = v;
      V g = v;
      for (int k = 1; k < j; ++k) {
        g.mul_right_gen(a + j - k);
        V term = g;
        if (alternating) term *= LaurentPoly::monomial(k % 2 ? -1 : 1, -k);
        acc += term;
      }
      v = std::move(acc);
    }
  }
  return v;
}

/// h * x_la and h * y_la.
HeckeElem right_multiply_x(HeckeElem h, const Composition& lambda);
HeckeElem right_multiply_y(HeckeElem h, const Composition& lambda);

/// h * sum_{d in reps} T_d, for a prefix-closed set such as D_nu cap W_mu.
HeckeElem right_multiply_sum(const HeckeElem& h, const std::vector<Permutation>& reps);

}  // namespace tabhom
