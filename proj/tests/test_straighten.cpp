#include "doctest.h"

#include "tabhom/errors.hpp"
#include "tabhom/oracle.hpp"
#include "tabhom/quantum.hpp"
#include "tabhom/straighten.hpp"
#include "tabhom/tabloid.hpp"

#include <random>

using namespace tabhom;

namespace {

Tableau T(std::initializer_list<Multiset> rows) { return Tableau(std::vector<Multiset>(rows)); }
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

const Tableau A = T({{1, 2, 2, 3, 4}, {1, 3, 3, 3}});
const Tableau B1 = T({{1, 1, 2, 2, 4}, {3, 3, 3, 3}});
const Tableau B2 = T({{1, 1, 2, 2, 3}, {3, 3, 3, 4}});
const Tableau B3 = T({{1, 1, 2, 3, 3}, {2, 3, 3, 4}});
const Tableau B4 = T({{1, 1, 2, 3, 4}, {2, 3, 3, 3}});

LinComb comb(std::initializer_list<std::pair<LaurentPoly, Tableau>> terms) {
  LinComb c(terms.begin()->second.shape(), terms.begin()->second.type());
  for (const auto& [p, t] : terms) c.add(t, p);
  return c;
}

// every row-standard tableau of partition shape with n <= max_n and at most max_value values
template <typename F>
void for_each_tableau(int max_n, int max_value, F f) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& la : compositions_of(n)) {
        if (la.length() > static_cast<std::size_t>(max_value)) continue;
        for (const auto& a : enumerate_row_standard(mu, la)) f(a);
      }
}

bool all_semistandard(const LinComb& c) {
  for (const auto& [t, coeff] : c)
    if (!is_semistandard(t)) return false;
  return true;
}

}  // namespace

TEST_CASE("weight") {
  CHECK(weight(A) == 32);
  CHECK(weight(Tableau()) == 0);
  CHECK(weight(T({{1, 1}})) == 2);
  CHECK(weight(T({{2}, {1}})) == 4);
}

TEST_CASE("row windows") {
  const Tableau a = T({{1, 1, 2}, {2, 3}, {1, 4}});
  CHECK(row_window(a, 1) == T({{2, 3}, {1, 4}}));
  CHECK(violating_window(a, WindowChoice::topmost) == 1u);
  CHECK(violating_window(a, WindowChoice::bottommost) == 1u);
  const Tableau b = T({{2, 2}, {1, 3}, {1}});
  CHECK(violating_window(b, WindowChoice::topmost) == 0u);
  CHECK(violating_window(b, WindowChoice::bottommost) == 1u);
  CHECK_FALSE(violating_window(B1, WindowChoice::topmost).has_value());
}

TEST_CASE("embedding a two-row relation") {
  const Tableau a = T({{1, 2}, {1, 2}, {1}});
  const LinComb rel = two_row_straighten_step(row_window(a, 0));
  const LinComb embedded = embed_two_row(a, 0, rel);
  CHECK(embedded.size() == rel.size());
  CHECK(embedded.shape() == Composition{2, 2, 1});
  CHECK(embedded.type() == Composition{3, 2});
  for (const auto& [t, c] : rel) {
    const Tableau full = T({t.row(0), t.row(1), {1}});
    CHECK(embedded.coefficient(full) == c);
  }
  CHECK(specht_check(LinComb::single(a) - embedded));
  CHECK(embed_two_row(a, 0, LinComb()).is_zero());
  CHECK_THROWS_AS(embed_two_row(a, 1, rel), PreconditionError);
}

TEST_CASE("worked example") {
  Straightener s;
  CHECK(s.step(A) == comb({{P("-q^3"), B2}, {-quantum_int(4), B1}, {-1, B4}}));
  CHECK(s.step(B4) == comb({{-quantum_int(2), B2}, {-quantum_int(2), B1}, {-1, B3}}));
  const LinComb expected = comb({{P("-q^2 - q^3"), B1}, {P("1 + q - q^3"), B2}, {1, B3}});
  CHECK(s.semistandardize(A) == expected);
  CHECK(semistandardize(A) == expected);
  CHECK(semistandardize(A, {.algorithm = Algorithm::worklist}) == expected);
  CHECK(semistandardize(A, {WindowChoice::bottommost, ColumnChoice::rightmost}) == expected);
  CHECK(semistandardize_lincomb(expected) == expected);
  CHECK(specht_check_tabloid(LinComb::single(A) - expected));
}

TEST_CASE("small cases") {
  CHECK(semistandardize(T({{2}, {1}})) == comb({{-1, T({{1}, {2}})}}));
  CHECK(semistandardize(B1) == LinComb::single(B1));
  CHECK(semistandardize(Tableau()) == LinComb::single(Tableau()));
  CHECK_THROWS_AS(semistandardize(T({{1}, {1, 2}})), PreconditionError);
  CHECK_THROWS_AS(Straightener().step(B1), PreconditionError);
}

TEST_CASE("garnir relations straighten to zero") {
  const GarnirDatum d({}, {1, 1, 2, 2, 3, 4}, {3, 3, 3}, 5);
  CHECK(semistandardize_lincomb(garnir_relation(d)).is_zero());
  const GarnirDatum d2({1, 1, 2}, {2, 3, 3, 3, 3, 4}, {}, 5);
  CHECK(semistandardize_lincomb(garnir_relation(d2)).is_zero());
}

TEST_CASE("weight increases along every step") {
  Straightener s;
  for_each_tableau(7, 4, [&](const Tableau& a) {
    if (is_semistandard(a)) return;
    for (const auto& [b, c] : s.step(a)) CHECK(weight(b) > weight(a));
  });
}

TEST_CASE("outputs are semistandard, stable and algorithm independent") {
  Straightener memo, work({.algorithm = Algorithm::worklist});
  for_each_tableau(6, 6, [&](const Tableau& a) {
    const LinComb r = memo.semistandardize(a);
    CHECK(all_semistandard(r));
    CHECK(work.semistandardize(a) == r);
    CHECK(memo.semistandardize(r) == r);
  });
}

TEST_CASE("straightening is sound in H_n") {
  Straightener s;
  for_each_tableau(5, 5, [&](const Tableau& a) { CHECK(specht_check(LinComb::single(a) - s.semistandardize(a))); });
}

TEST_CASE("strategy independence") {
  Straightener standard, other({WindowChoice::bottommost, ColumnChoice::rightmost});
  Straightener mixed({WindowChoice::bottommost, ColumnChoice::leftmost});
  for_each_tableau(6, 4, [&](const Tableau& a) {
    const LinComb r = standard.semistandardize(a);
    CHECK(other.semistandardize(a) == r);
    CHECK(mixed.semistandardize(a) == r);
  });
}

TEST_CASE("linear combinations") {
  const LinComb c = comb({{P("q"), A}, {P("2"), B4}, {P("-1"), B1}});
  const LinComb expected = [&] {
    LinComb e = semistandardize(A);
    LinComb out(e.shape(), e.type());
    out.add_scaled(e, P("q"));
    out.add_scaled(semistandardize(B4), P("2"));
    out.add(B1, P("-1"));
    return out;
  }();
  CHECK(semistandardize_lincomb(c) == expected);
  CHECK(semistandardize_lincomb(c, {.algorithm = Algorithm::worklist}) == expected);
  CHECK(semistandardize_lincomb(LinComb()).is_zero());
}

TEST_CASE("specialised straightening") {
  std::mt19937 rng(5);
  std::vector<Tableau> sample;
  for_each_tableau(7, 4, [&](const Tableau& a) {
    if (!is_semistandard(a) && rng() % 8 == 0) sample.push_back(a);
  });
  REQUIRE(sample.size() > 100);
  for (const Rational q0 : {Rational(1), Rational(2), Rational(-2), Rational(1, 2), Rational(-1)}) {
    SpecializedStraightener special(q0);
    for (const auto& a : sample) CHECK(special.semistandardize(a) == specialize(semistandardize(a), q0));
  }
  const RationalLinComb at_one = SpecializedStraightener(1).semistandardize(A);
  CHECK(at_one.coefficient(B1) == -2);
  CHECK(at_one.coefficient(B2) == 1);
  CHECK(at_one.coefficient(B3) == 1);
}
