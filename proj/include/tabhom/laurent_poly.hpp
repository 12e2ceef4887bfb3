#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tabhom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Laurent polynomial in q with arbitrary-precision integer
/// coefficients.  Terms are kept sorted by exponent and never hold a zero
/// coefficient, so structural equality is ring equality.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT: constants convert implicitly
  LaurentPoly(Integer c);  // NOLINT

  static LaurentPoly monomial(Integer c, int exponent);
  /// q^k
  static LaurentPoly q(int k = 1) { return monomial(1, k); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  Integer coeff(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()
  bool is_polynomial() const { return is_zero() || min_exponent() >= 0; }

  LaurentPoly& operator+=(const LaurentPoly& other) { return add_scaled(other, 0, 1); }
  LaurentPoly& operator-=(const LaurentPoly& other) { return add_scaled(other, 0, -1); }
  LaurentPoly& operator*=(const LaurentPoly& other);

  /// this += sign * q^shift * other, sign being +1 or -1.
  LaurentPoly& add_scaled(const LaurentPoly& other, int shift, int sign);
  /// Multiplies in place by q^k.
  LaurentPoly& shift(int k);
  LaurentPoly& negate();

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a) { return a.negate(); }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Renders ascending by exponent, e.g. "1 + q - q^3" or "q^-2 + 1".
  std::string to_string() const;
  /// Inverse of to_string(); also accepts "2q^3", "2 * q^3", "+q".
  /// Throws ParseError.
  static LaurentPoly parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

LaurentPoly multiply_by_q_power(const LaurentPoly& p, int k);

/// Evaluates p at q = q0 exactly.  Throws std::domain_error for q0 == 0.
Rational specialize(const LaurentPoly& p, const Rational& q0);

/// Parses "3", "-2", "1/2".  Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace tabhom
