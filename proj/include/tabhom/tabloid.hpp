#pragma once

#include "tabhom/composition.hpp"
#include "tabhom/hecke.hpp"
#include "tabhom/laurent_poly.hpp"
#include "tabhom/lincomb.hpp"
#include "tabhom/permutation.hpp"
#include "tabhom/tableau.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace tabhom {

/// The tabloid basis {x_la T_d : d in D_la} of M^la, indexed by words f of
/// content la: f(x) is the row of t^la holding d^{-1}(x).  Words are packed
/// four bits per letter, first letter most significant, so index order is
/// lexicographic order.
class WordBasis {
 public:
  using Word = std::uint64_t;

  explicit WordBasis(const Composition& lambda);

  const Composition& type() const { return type_; }
  int degree() const { return n_; }
  std::size_t size() const { return words_.size(); }

  Word word(std::size_t idx) const { return words_[idx]; }
  /// Letter at position x (1-based), a 0-based row of t^la.
  int letter(Word w, int x) const { return static_cast<int>((w >> (4 * (n_ - x))) & 0xF); }
  Word pack(std::span<const int> letters) const;
  /// Throws PreconditionError for a word of the wrong content.
  std::size_t index(Word w) const;
  /// The sorted word, i.e. d = 1.
  std::size_t identity_index() const { return 0; }

  /// Index of the word with positions i, i+1 swapped.
  std::size_t partner(int i, std::size_t idx) const { return partner_[static_cast<std::size_t>(i - 1)][idx]; }
  /// Sign of f(i) - f(i+1).
  int compare(int i, std::size_t idx) const { return cmp_[static_cast<std::size_t>(i - 1)][idx]; }

  /// The distinguished representative d for a word, and back.
  Permutation rep(std::size_t idx) const;
  std::size_t index_of_rep(const Permutation& d) const;

 private:
  Composition type_;
  int n_;
  std::vector<Word> words_;
  std::vector<std::vector<std::uint32_t>> partner_;
  std::vector<std::vector<signed char>> cmp_;
};

/// Shared, thread-safe cache of bases keyed by stripped type.
std::shared_ptr<const WordBasis> word_basis(const Composition& lambda);

/// Dense coordinate vector in the tabloid basis of M^la, with the right
/// action of H_n.
class ModuleVector {
 public:
  ModuleVector() = default;
  explicit ModuleVector(std::shared_ptr<const WordBasis> basis);
  /// x_la
  static ModuleVector generator(const Composition& lambda);

  const WordBasis& basis() const { return *basis_; }
  const std::shared_ptr<const WordBasis>& basis_ptr() const { return basis_; }
  int degree() const { return basis_->degree(); }
  const std::vector<LaurentPoly>& coords() const { return coords_; }
  const LaurentPoly& operator[](std::size_t idx) const { return coords_[idx]; }
  LaurentPoly& operator[](std::size_t idx) { return coords_[idx]; }
  bool is_zero() const;
  std::size_t support_size() const;

  /// v * T_i
  ModuleVector& mul_right_gen(int i);
  ModuleVector& mul_right_word(std::span<const int> word);

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  ModuleVector& operator*=(const LaurentPoly& scalar);
  /// this += scalar * other
  ModuleVector& add_scaled(const ModuleVector& other, const LaurentPoly& scalar);
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

 private:
  void require_same_basis(const ModuleVector& other) const;

  std::shared_ptr<const WordBasis> basis_;
  std::vector<LaurentPoly> coords_;
};

/// x_la T_d for d in D_la.
ModuleVector tabloid(const Composition& lambda, const Permutation& d);

/// x_mu phi_A in M^la: every word whose block for row g of t^mu has
/// content A^g, with coefficient 1.
ModuleVector hom_image(const Tableau& a);

/// v * T_{1_B} * sum_{d in D_nu cap W_mu} T_d, with nu the row reading of B.
/// If v = x_ka phi_C for C of shape type(B), the result is x_mu phi_B phi_C.
ModuleVector compose_after(const ModuleVector& v, const Tableau& b);

/// v * T_{w_mu} * y_{mu'}
ModuleVector specht_image(ModuleVector v, const Partition& mu);

/// sum_A c_A x_mu phi_A
ModuleVector comb_image(const LinComb& c);

/// Writes v in the basis {x_mu phi_A : A row-standard of shape mu}:
/// the coefficient of phi_A is read at the sorted arrangement of A, and
/// the expansion is checked exactly.  Throws MembershipError otherwise.
LinComb hom_coordinates(const ModuleVector& v, const Composition& mu);

/// Whether sum_A c_A phi_A vanishes on S^mu, computed in M^la.
bool specht_check_tabloid(const LinComb& c);

/// Coordinates of an element of M^la given in H_n, and back.  Throws
/// MembershipError if h is not in x_la H_n.
ModuleVector from_hecke(const HeckeElem& h, const Composition& lambda);
HeckeElem to_hecke(const ModuleVector& v);

}  // namespace tabhom
