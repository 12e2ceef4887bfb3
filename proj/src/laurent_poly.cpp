#include "tabhom/laurent_poly.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace tabhom {

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.push_back({0, Integer(c)});
}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.push_back({0, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(Integer c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({exponent, std::move(c)});
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

int LaurentPoly::min_exponent() const {
  require(!is_zero(), "min_exponent of the zero polynomial");
  return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
  require(!is_zero(), "max_exponent of the zero polynomial");
  return terms_.back().exponent;
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& other, int shift, int sign) {
  if (other.is_zero()) return *this;
  if (&other == this) {
    const LaurentPoly copy = other;
    return add_scaled(copy, shift, sign);
  }
  if (is_zero()) {
    terms_ = other.terms_;
    for (auto& t : terms_) {
      t.exponent += shift;
      if (sign < 0) t.coeff = -t.coeff;
    }
    return *this;
  }
  // Fast path: other lies entirely above this.
  if (terms_.back().exponent < other.terms_.front().exponent + shift) {
    terms_.reserve(terms_.size() + other.terms_.size());
    for (const auto& t : other.terms_)
      terms_.push_back({t.exponent + shift, sign < 0 ? Integer(-t.coeff) : t.coeff});
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + shift)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->exponent + shift < a->exponent) {
      merged.push_back({b->exponent + shift, sign < 0 ? Integer(-b->coeff) : b->coeff});
      ++b;
    } else {
      if (sign < 0)
        a->coeff -= b->coeff;
      else
        a->coeff += b->coeff;
      if (a->coeff != 0) merged.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::shift(int k) {
  for (auto& t : terms_) t.exponent += k;
  return *this;
}

LaurentPoly& LaurentPoly::negate() {
  for (auto& t : terms_) t.coeff = -t.coeff;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly r = a;
    for (auto& t : r.terms_) {
      t.exponent += b.terms_[0].exponent;
      t.coeff *= b.terms_[0].coeff;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      dense[static_cast<std::size_t>(s.exponent + t.exponent - lo)] += s.coeff * t.coeff;
  LaurentPoly r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly multiply_by_q_power(const LaurentPoly& p, int k) {
  LaurentPoly r = p;
  return r.shift(k);
}

namespace {

std::string power_of_q(int e) {
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.exponent == 0) {
      out += mag.str();
    } else if (mag == 1) {
      out += power_of_q(t.exponent);
    } else {
      out += mag.str() + "*" + power_of_q(t.exponent);
    }
  }
  return out;
}

namespace {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_space();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

int to_exponent(const std::string& digits, bool negative, const PolyScanner& sc) {
  long long v = 0;
  for (char c : digits) {
    v = v * 10 + (c - '0');
    if (v > std::numeric_limits<int>::max() / 2) sc.fail("exponent out of range");
  }
  return static_cast<int>(negative ? -v : v);
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  PolyScanner sc(text);
  if (sc.done()) sc.fail("empty input");
  LaurentPoly result;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('+')) {
    } else if (sc.accept('-')) {
      sign = -1;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    Integer coeff = 1;
    bool have_coeff = false;
    if (sc.peek_digit()) {
      coeff = Integer(sc.digits());
      have_coeff = true;
    }
    int exponent = 0;
    bool have_q = false;
    const bool starred = have_coeff && sc.accept('*');
    if (sc.accept('q')) {
      have_q = true;
      exponent = 1;
      if (sc.accept('^')) {
        bool neg = false;
        if (sc.accept('-')) neg = true;
        exponent = to_exponent(sc.digits(), neg, sc);
      }
    }
    if (!have_coeff && !have_q) sc.fail("expected a term");
    if (starred && !have_q) sc.fail("expected 'q' after '*'");
    result.add_scaled(monomial(coeff, exponent), 0, sign);
  }
  return result;
}

Rational specialize(const LaurentPoly& p, const Rational& q0) {
  if (q0 == 0) throw std::domain_error("specialize: q0 must be nonzero");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational power = 1;
    const Rational base = t.exponent >= 0 ? q0 : Rational(1) / q0;
    for (int i = 0; i < (t.exponent >= 0 ? t.exponent : -t.exponent); ++i) power *= base;
    sum += Rational(t.coeff) * power;
  }
  return sum;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto valid_int = [](std::string_view v, bool allow_sign) {
    if (!v.empty() && allow_sign && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
    return !v.empty() && std::all_of(v.begin(), v.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!valid_int(num, true)) throw ParseError("rational '" + s + "': bad numerator");
  const std::string num_digits = (num[0] == '+') ? num.substr(1) : num;
  if (slash == std::string::npos) return Rational(Integer(num_digits));
  const std::string den = s.substr(slash + 1);
  if (!valid_int(den, false)) throw ParseError("rational '" + s + "': bad denominator");
  const Integer d(den);
  if (d == 0) throw ParseError("rational '" + s + "': zero denominator");
  return Rational(Integer(num_digits), d);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace tabhom
