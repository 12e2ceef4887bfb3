#include "doctest.h"

#include "tabhom/errors.hpp"
#include "tabhom/garnir.hpp"
#include "tabhom/oracle.hpp"
#include "tabhom/quantum.hpp"

#include <set>

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

std::vector<Multiset> all_multisets(int size, int max_value) {
  return submultisets(Multiset::from_counts(std::vector<int>(static_cast<std::size_t>(max_value), size)), size);
}

// every valid datum with n <= max_n over values <= max_value
template <typename F>
void for_each_datum(int max_n, int max_value, F f) {
  for (int n = 2; n <= max_n; ++n)
    for (int m = (n + 1) / 2; m <= n; ++m)
      for (int r = 0; r <= m; ++r)
        for (int s = m + 1; r + s <= n; ++s)
          for (const auto& rr : all_multisets(r, max_value))
            for (const auto& ss : all_multisets(s, max_value))
              for (const auto& tt : all_multisets(n - r - s, max_value)) f(GarnirDatum(rr, ss, tt, m));
}

}  // namespace

TEST_CASE("datum validation") {
  CHECK_NOTHROW(GarnirDatum({}, {1, 1, 2, 2, 3, 4}, {3, 3, 3}, 5));
  CHECK_THROWS_AS(GarnirDatum({}, {1, 2}, {3, 4}, 2), PreconditionError);
  CHECK_THROWS_AS(GarnirDatum({1, 1, 1}, {1, 2, 3}, {}, 2), PreconditionError);
  CHECK_THROWS_AS(GarnirDatum({}, {1, 2, 3}, {4, 5, 6}, 2), PreconditionError);
  CHECK_THROWS_AS(GarnirDatum({}, {1}, {}, 0), PreconditionError);
}

TEST_CASE("splits") {
  const GarnirDatum d({}, {1, 1, 2, 2, 3, 4}, {3, 3, 3}, 5);
  const auto splits = enumerate_splits(d);
  CHECK(splits.size() == 4);
  std::set<Multiset> omitted;
  for (const auto& s : splits) {
    CHECK(s.u + s.v == d.s());
    CHECK(s.u.size() == 5);
    omitted.insert(s.v);
  }
  CHECK(omitted == std::set<Multiset>{{1}, {2}, {3}, {4}});

  const auto single = enumerate_splits(GarnirDatum({1}, {2, 2, 2}, {}, 2));
  REQUIRE(single.size() == 1);
  CHECK(single[0].u == Multiset{2});
  CHECK(single[0].v == Multiset{2, 2});
  const auto full = enumerate_splits(GarnirDatum({}, {1, 2, 3}, {}, 2));
  CHECK(full.size() == 3);
  const auto whole = enumerate_splits(GarnirDatum({}, {1, 1, 2, 2}, {}, 3));
  CHECK(whole.size() == 2);
}

TEST_CASE("split count equals the number of sub-multisets") {
  for (int s = 2; s <= 8; ++s)
    for (const auto& ss : all_multisets(s, 3))
      for (int m = 1; m < s && 2 * m >= s; ++m) {
        const GarnirDatum d({}, ss, {}, m);
        const auto entries = ss.entries();
        std::set<Multiset> brute;
        for (unsigned mask = 0; mask < (1u << entries.size()); ++mask) {
          if (std::popcount(mask) != static_cast<unsigned>(m)) continue;
          std::vector<int> pick;
          for (std::size_t i = 0; i < entries.size(); ++i)
            if (mask >> i & 1u) pick.push_back(entries[i]);
          brute.insert(Multiset::from_entries(pick));
        }
        CHECK(enumerate_splits(d).size() == brute.size());
      }
}

TEST_CASE("build_tableau and split_coefficient on the worked example") {
  const GarnirDatum d({}, {1, 1, 2, 2, 3, 4}, {3, 3, 3}, 5);
  const Split s1{{1, 1, 2, 2, 4}, {3}}, s2{{1, 1, 2, 2, 3}, {4}}, s0{{1, 2, 2, 3, 4}, {1}};
  CHECK(build_tableau(d, s1) == B1);
  CHECK(build_tableau(d, s2) == B2);
  CHECK(build_tableau(d, s0) == A);
  CHECK(split_coefficient(d, s1) == quantum_int(4));
  CHECK(split_coefficient(d, s2) == LaurentPoly::q(3));
  CHECK(split_coefficient(d, s0) == LaurentPoly(1));

  const GarnirDatum d2({1, 1, 2}, {2, 3, 3, 3, 3, 4}, {}, 5);
  CHECK(split_coefficient(d2, Split{{2, 3}, {3, 3, 3, 4}}) == quantum_int(2));
}

TEST_CASE("garnir relations of the worked example") {
  const GarnirDatum d({}, {1, 1, 2, 2, 3, 4}, {3, 3, 3}, 5);
  CHECK(garnir_relation(d) == comb({{1, A}, {quantum_int(4), B1}, {1, B4}, {LaurentPoly::q(3), B2}}));
  const GarnirDatum d2({1, 1, 2}, {2, 3, 3, 3, 3, 4}, {}, 5);
  CHECK(garnir_relation(d2) == comb({{1, B4}, {quantum_int(2), B2}, {quantum_int(2), B1}, {1, B3}}));
}

TEST_CASE("two-row straightening steps") {
  CHECK(two_row_straighten_step(A) == comb({{-quantum_int(4), B1}, {-1, B4}, {P("-q^3"), B2}}));
  CHECK(two_row_straighten_step(B4) == comb({{-quantum_int(2), B2}, {-quantum_int(2), B1}, {-1, B3}}));
  CHECK(two_row_straighten_step(T({{2}, {1}})) == comb({{-1, T({{1}, {2}})}}));

  const GarnirDatum d = straightening_datum(A);
  CHECK(d.r().empty());
  CHECK(d.s() == Multiset{1, 1, 2, 2, 3, 4});
  CHECK(d.t() == Multiset{3, 3, 3});

  CHECK_THROWS_AS(two_row_straighten_step(B1), PreconditionError);
  CHECK_THROWS_AS(two_row_straighten_step(T({{2}, {1}, {1}})), PreconditionError);
  CHECK_THROWS_AS(two_row_straighten_step(T({{2}, {1, 1}})), PreconditionError);
}

TEST_CASE("small shape-(2,2) relation vanishes on the Specht module") {
  const GarnirDatum d({}, {1, 1, 2}, {2}, 2);
  CHECK(specht_check(garnir_relation(d)));
}

TEST_CASE("steps decrease the first-row sum, for either column choice") {
  for (int n = 2; n <= 8; ++n)
    for (int m = (n + 1) / 2; m < n; ++m)
      for (const auto& la : compositions_of(n)) {
        if (la.length() > 4) continue;
        for (const auto& a : enumerate_row_standard(Composition{m, n - m}, la)) {
          if (is_semistandard(a)) continue;
          for (auto col : {ColumnChoice::leftmost, ColumnChoice::rightmost}) {
            const LinComb step = two_row_straighten_step(a, col);
            CHECK(step.coefficient(a).is_zero());
            for (const auto& [b, c] : step) CHECK(b.row(0).sum() < a.row(0).sum());
          }
        }
      }
}

TEST_CASE("coefficients are polynomials with nonnegative coefficients") {
  long long count = 0;
  for_each_datum(7, 4, [&](const GarnirDatum& d) {
    ++count;
    for (const auto& [t, c] : garnir_relation(d))
      for (const auto& term : c.terms()) {
        CHECK(term.exponent >= 0);
        CHECK(term.coeff > 0);
      }
  });
  CHECK(count > 1000);
}

TEST_CASE("relations vanish on the Specht module in H_n") {
  for_each_datum(5, 3, [](const GarnirDatum& d) { CHECK(specht_check(garnir_relation(d))); });
}
