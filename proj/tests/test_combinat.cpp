#include "doctest.h"

#include "tabhom/composition.hpp"
#include "tabhom/errors.hpp"
#include "tabhom/hecke.hpp"
#include "tabhom/multiset.hpp"
#include "tabhom/permutation.hpp"
#include "tabhom/straighten.hpp"
#include "tabhom/tableau.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace tabhom;

namespace {

Tableau T(std::initializer_list<Multiset> rows) { return Tableau(std::vector<Multiset>(rows)); }

// 1_A straight from the definition: t^la 1_A has i in row r iff position i
// of t^mu holds r in A, rows of t^la 1_A increasing.
Permutation one_a_by_definition(const Tableau& a) {
  const auto word = reading_word(a);
  const Composition la = a.type();
  std::vector<std::vector<int>> rows(la.length());
  for (std::size_t i = 0; i < word.size(); ++i) rows[static_cast<std::size_t>(word[i] - 1)].push_back(static_cast<int>(i) + 1);
  // t^la w replaces j by w(j): slot k of row r of t^la goes to rows[r][k]
  std::vector<int> images(word.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].size(); ++k)
      images[static_cast<std::size_t>(la.offset(r)) + k] = rows[r][k];
  return Permutation(images);
}

}  // namespace

TEST_CASE("compositions and partitions") {
  CHECK(Composition{2, 3, 0} == Composition{2, 3});
  CHECK(Composition{2, 3, 0}.total() == 5);
  CHECK_FALSE(Composition{2, 0, 3} == Composition{2, 3});
  CHECK(Composition{3, 1}.is_partition());
  CHECK_FALSE(Composition{1, 3}.is_partition());
  CHECK_THROWS_AS(Partition(Composition{1, 3}), PreconditionError);
  CHECK(Partition{3, 1}.conjugate() == Composition{2, 1, 1});
  CHECK(Partition{2, 2}.conjugate() == Composition{2, 2});
  CHECK(Composition{2, 3, 0, 1, 1}.offset(3) == 5);
  CHECK(Composition{5, 4}.to_string() == "(5,4)");
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(0).size() == 1);
  CHECK(compositions_of(5).size() == 16);
  CHECK(weak_compositions(3, 3).size() == 10);
}

TEST_CASE("multisets") {
  const Multiset a{2, 1, 2}, b{3, 1};
  CHECK(a.count(2) == 2);
  CHECK(a.size() == 3);
  CHECK(a.entries() == std::vector<int>{1, 2, 2});
  CHECK(a.to_string() == "{1,2,2}");
  CHECK(a + b == b + a);
  CHECK((a + b).count(1) == 2);
  CHECK(((a + b) + Multiset{4}) == (a + (b + Multiset{4})));
  CHECK((a + b) - b == a);
  CHECK_THROWS_AS(a - b, PreconditionError);
  CHECK(a.below(2) == Multiset{1});
  CHECK(a.at_least(2) == Multiset{2, 2});
  CHECK(Multiset{1, 3, 3}.at_most(2) == Multiset{1});
  CHECK(Multiset{1, 3, 3}.above(1) == Multiset{3, 3});
  CHECK(Multiset{1, 1, 2} < Multiset{1, 2});
  CHECK(submultisets(Multiset{1, 1, 2, 2, 3, 4}, 5).size() == 4);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> value(1, 5), len(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> x(static_cast<std::size_t>(len(rng))), y(static_cast<std::size_t>(len(rng)));
    for (int& v : x) v = value(rng);
    for (int& v : y) v = value(rng);
    const Multiset c = Multiset::from_entries(x), d = Multiset::from_entries(y);
    for (int i = 1; i <= 6; ++i) CHECK((c + d).count(i) == c.count(i) + d.count(i));
  }
}

TEST_CASE("sub-multiset enumeration matches brute force") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> value(1, 4), len(0, 8);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> x(static_cast<std::size_t>(len(rng)));
    for (int& v : x) v = value(rng);
    const Multiset s = Multiset::from_entries(x);
    for (int k = 0; k <= s.size(); ++k) {
      std::set<Multiset> brute;
      for (unsigned mask = 0; mask < (1u << x.size()); ++mask) {
        if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
        std::vector<int> pick;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (mask >> i & 1u) pick.push_back(x[i]);
        brute.insert(Multiset::from_entries(pick));
      }
      const auto subs = submultisets(s, k);
      CHECK(std::set<Multiset>(subs.begin(), subs.end()) == brute);
      CHECK(subs.size() == brute.size());
      CHECK(std::is_sorted(subs.begin(), subs.end()));
    }
  }
}

TEST_CASE("permutations") {
  const Permutation w({1, 4, 5, 2, 6, 3});
  CHECK(inversions(w) == 5);
  CHECK(w.length() == 5);
  CHECK(w.cycle_string() == "(2 4)(3 5 6)");
  CHECK(inversions(Permutation::identity(4)) == 0);
  CHECK(inversions(Permutation({3, 2, 1})) == 3);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), PreconditionError);
  CHECK((w * w.inverse()).is_identity());
  CHECK(Permutation::unpack(w.packed(), 6) == w);
  for (const auto& v : young_subgroup(Composition{4})) {
    Permutation p = Permutation::identity(4);
    for (int i : v.reduced_word()) p = p * Permutation::simple(4, i);
    CHECK(p == v);
    CHECK(static_cast<int>(v.reduced_word().size()) == v.length());
  }
}

TEST_CASE("semistandard") {
  CHECK(is_semistandard(T({{1, 1, 2, 2, 4}, {3, 3, 3, 3}})));
  CHECK_FALSE(is_semistandard(T({{1, 2, 2, 3, 4}, {1, 3, 3, 3}})));
  CHECK(is_semistandard(T({{2, 1, 3}})));
  CHECK(is_semistandard(Tableau()));
  CHECK_THROWS_AS(is_semistandard(T({{1}, {2, 3}})), PreconditionError);
}

TEST_CASE("1_A and its length") {
  const Tableau a = T({{1, 2, 3}, {1, 1, 2}});
  CHECK(perm_1A(a) == Permutation({1, 4, 5, 2, 6, 3}));
  CHECK(perm_1A(a).cycle_string() == "(2 4)(3 5 6)");
  CHECK(length_1A(a) == 5);
  CHECK(perm_1A(T({{1, 2}, {3, 4}})).is_identity());
  CHECK(length_1A(T({{1, 2}, {3, 4}})) == 0);
  CHECK(perm_1A(T({{1, 2}, {1, 2}})) == Permutation({1, 3, 2, 4}));
  CHECK(length_1A(T({{2}, {1}})) == 1);
}

TEST_CASE("w_mu") {
  CHECK(w_mu(Partition{4}).is_identity());
  CHECK(w_mu(Partition{1, 1, 1}).is_identity());
  CHECK(w_mu(Partition{2, 2}) == Permutation({1, 3, 2, 4}));
  CHECK(w_mu(Partition{3, 1}) == Permutation({1, 3, 4, 2}));
}

TEST_CASE("reading compositions") {
  const Tableau a = T({{1, 2, 3}, {1, 1, 2}});
  CHECK(row_reading_composition(a).parts() == std::vector<int>{1, 1, 1, 2, 1, 0});
  CHECK(column_reading_composition(a).parts() == std::vector<int>{1, 2, 1, 1, 1, 0});
  CHECK(row_reading_composition(T({{1, 1, 2, 3}})) == Composition{2, 1, 1});
  CHECK(column_reading_composition(T({{1, 1, 2, 3}})) == Composition{2, 1, 1});
  CHECK(column_reading_composition(T({{2, 2}, {2}})) == Composition{0, 0, 2, 1});
  CHECK(row_reading_composition(Tableau()).length() == 0);
}

TEST_CASE("enumeration") {
  const auto rs = enumerate_row_standard(Composition{2, 1}, Composition{2, 1});
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == T({{1, 1}, {2}}));
  CHECK(rs[1] == T({{1, 2}, {1}}));
  const auto ss = enumerate_semistandard(Partition{2, 1}, Composition{2, 1});
  REQUIRE(ss.size() == 1);
  CHECK(ss[0] == T({{1, 1}, {2}}));
  CHECK(enumerate_semistandard(Partition{1, 1}, Composition{2}).empty());
  CHECK(enumerate_semistandard(Partition{4}, Composition{1, 2, 1}).size() == 1);
  CHECK(enumerate_row_standard(Composition{4}, Composition{1, 2, 1}).size() == 1);
  CHECK(enumerate_row_standard(Composition{1, 1}, Composition{1, 1}).size() == 2);
  CHECK(enumerate_row_standard(Composition{2, 0, 1}, Composition{0, 3}).size() == 1);
  CHECK(enumerate_row_standard(Composition{}, Composition{}).size() == 1);
}

TEST_CASE("enumeration is sorted, complete and consistent") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& la : compositions_of(n)) {
        const auto rs = enumerate_row_standard(mu, la);
        CHECK(std::is_sorted(rs.begin(), rs.end()));
        std::vector<Tableau> filtered;
        std::copy_if(rs.begin(), rs.end(), std::back_inserter(filtered), [](const Tableau& t) { return is_semistandard(t); });
        CHECK(enumerate_semistandard(mu, la) == filtered);
        for (const auto& t : rs) {
          CHECK(t.shape() == mu);
          CHECK(t.type() == la);
          bool windows_ok = true;
          for (std::size_t l = 0; l + 1 < t.num_rows(); ++l) windows_ok = windows_ok && is_semistandard(row_window(t, l));
          CHECK(is_semistandard(t) == windows_ok);
        }
      }
}

TEST_CASE("1_A is an injective map onto minimal double coset representatives") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : compositions_of(n))
      for (const auto& la : compositions_of(n)) {
        std::set<Permutation> seen;
        const auto rs = enumerate_row_standard(mu, la);
        for (const auto& t : rs) {
          const Permutation d = perm_1A(t);
          CHECK(d == one_a_by_definition(t));
          CHECK(inversions(d) == length_1A(t));
          seen.insert(d);
        }
        CHECK(seen.size() == rs.size());
      }
  // minimality at small n, by brute force over the double coset
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : compositions_of(n))
      for (const auto& la : compositions_of(n))
        for (const auto& t : enumerate_row_standard(mu, la)) {
          const Permutation d = perm_1A(t);
          int shortest = d.length();
          for (const auto& v : young_subgroup(la))
            for (const auto& u : young_subgroup(mu)) shortest = std::min(shortest, (v * d * u).length());
          CHECK(shortest == d.length());
        }
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(Tableau(Composition{2, 1}, {Multiset{1}, Multiset{1, 2}}), PreconditionError);
  CHECK(T({{1}, {}, {}}).num_rows() == 1);
  CHECK(T({{1, 2, 2, 3, 4}, {1, 3, 3, 3}}).to_string() == "1 2 2 3 4 / 1 3 3 3");
  CHECK(T({{1, 2}, {1, 3}}).type() == Composition{2, 1, 1});
  CHECK(T({{1, 3}}).type().parts() == std::vector<int>{1, 0, 1});
}
