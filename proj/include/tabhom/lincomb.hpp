#pragma once

#include "tabhom/errors.hpp"
#include "tabhom/laurent_poly.hpp"
#include "tabhom/tableau.hpp"

#include <map>
#include <string>
#include <utility>

namespace tabhom {

inline bool is_zero_coeff(const LaurentPoly& c) { return c.is_zero(); }
inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline std::string coeff_to_string(const LaurentPoly& c) { return c.to_string(); }
inline std::string coeff_to_string(const Rational& c) { return to_string(c); }

/// Formal linear combination of row-standard tableaux sharing one shape and
/// one type.  Zero coefficients are never stored; terms iterate in Tableau
/// order.
template <typename Coeff>
class BasicLinComb {
 public:
  using Terms = std::map<Tableau, Coeff>;

  BasicLinComb() = default;
  BasicLinComb(Composition shape, Composition type)
      : shape_(shape.stripped()), type_(type.stripped()) {}
  /// 1 * t
  static BasicLinComb single(const Tableau& t, Coeff c = Coeff(1)) {
    BasicLinComb r(t.shape(), t.type());
    r.add(t, std::move(c));
    return r;
  }

  const Composition& shape() const { return shape_; }
  const Composition& type() const { return type_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coeff coefficient(const Tableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Adds c * t, accumulating into an existing term.
  void add(const Tableau& t, const Coeff& c) {
    if (is_zero_coeff(c)) return;
    require(t.shape() == shape_, "tableau " + t.to_string() + " does not have shape " +
                                     shape_.to_string());
    require(t.type() == type_, "tableau " + t.to_string() + " does not have type " +
                                   type_.to_string());
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  /// this += scale * other
  void add_scaled(const BasicLinComb& other, const Coeff& scale) {
    if (is_zero_coeff(scale)) return;
    for (const auto& [t, c] : other.terms_) add(t, c * scale);
  }

  BasicLinComb& operator+=(const BasicLinComb& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
  }
  BasicLinComb& operator-=(const BasicLinComb& other) {
    for (const auto& [t, c] : other.terms_) add(t, -c);
    return *this;
  }
  friend BasicLinComb operator+(BasicLinComb a, const BasicLinComb& b) { return a += b; }
  friend BasicLinComb operator-(BasicLinComb a, const BasicLinComb& b) { return a -= b; }
  friend BasicLinComb operator-(const BasicLinComb& a) {
    BasicLinComb r(a.shape_, a.type_);
    for (const auto& [t, c] : a.terms_) r.terms_.emplace(t, -c);
    return r;
  }

  /// Equal terms; shape and type are compared only when both are nonzero.
  friend bool operator==(const BasicLinComb& a, const BasicLinComb& b) {
    if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
    return a.shape_ == b.shape_ && a.type_ == b.type_ && a.terms_ == b.terms_;
  }

  /// One "coeff : tableau" line per term; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0\n";
    std::string s;
    for (const auto& [t, c] : terms_) s += coeff_to_string(c) + " : " + t.to_string() + "\n";
    return s;
  }

 private:
  Composition shape_;
  Composition type_;
  Terms terms_;
};

using LinComb = BasicLinComb<LaurentPoly>;
using RationalLinComb = BasicLinComb<Rational>;

/// Evaluates every coefficient at q = q0, dropping terms that vanish.
RationalLinComb specialize(const LinComb& c, const Rational& q0);

}  // namespace tabhom
