#include "tabhom/props.hpp"

#include "tabhom/errors.hpp"
#include "tabhom/garnir.hpp"
#include "tabhom/oracle.hpp"
#include "tabhom/quantum.hpp"
#include "tabhom/tabloid.hpp"

#include <array>
#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace tabhom {

namespace {

// x_mu phi_{h_1} phi_{h_2} ... phi_{h_k}, homomorphisms applied left to right.
struct TabloidChain {
  using V = ModuleVector;
  static V chain(const std::vector<Tableau>& homs) {
    V v = hom_image(homs.back());
    for (std::size_t i = homs.size() - 1; i-- > 0;) v = compose_after(v, homs[i]);
    return v;
  }
  static V zero(const Composition& lambda) { return V(word_basis(lambda)); }
  static V image(const Tableau& a) { return hom_image(a); }
  static void add(V& acc, const V& x, const LaurentPoly& c) { acc.add_scaled(x, c); }
  static LinComb coordinates(const V& v, const Composition& mu, const Composition&) {
    return hom_coordinates(v, mu);
  }
};

struct HeckeChain {
  using V = HeckeElem;
  static V chain(const std::vector<Tableau>& homs) {
    V v = image_h3(homs.front());
    for (std::size_t i = 1; i < homs.size(); ++i)
      v = apply_hom(tabloid_coords(v, homs[i - 1].type()), homs[i]);
    return v;
  }
  static V zero(const Composition& lambda) { return V(lambda.total()); }
  static V image(const Tableau& a) { return image_h3(a); }
  static void add(V& acc, const V& x, const LaurentPoly& c) { acc += x * c; }
  static LinComb coordinates(const V& v, const Composition& mu, const Composition& lambda) {
    return hom_coordinates(v, mu, lambda);
  }
};

Multiset repeated(int value, int count) {
  std::vector<int> counts(static_cast<std::size_t>(value), 0);
  counts[static_cast<std::size_t>(value - 1)] = count;
  return count ? Multiset::from_counts(counts) : Multiset();
}

Tableau row_tableau(std::vector<Multiset> rows) { return Tableau(std::move(rows)); }

int max_entry(const std::vector<Multiset>& ms) {
  int k = 0;
  for (const auto& m : ms) k = std::max(k, m.max_value());
  return k;
}

// q^{sum_{i<j} a_j b_i}
LaurentPoly cross_power(const Multiset& a, const Multiset& b) {
  const int k = max_entry({a, b});
  long long e = 0;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) e += static_cast<long long>(a.count(j)) * b.count(i);
  return LaurentPoly::q(static_cast<int>(e));
}

// prod_i [whole_i choose part_i]
LaurentPoly binomial_product(const Multiset& whole, const Multiset& part) {
  LaurentPoly c(1);
  for (int i = 1; i <= whole.max_value(); ++i) c *= quantum_binomial(whole.count(i), part.count(i));
  return c;
}

std::vector<Composition> types_up_to(int n, int max_value) {
  std::vector<Composition> out;
  for (const auto& c : compositions_of(n))
    if (static_cast<int>(c.length()) <= max_value) out.push_back(c);
  return out;
}

std::vector<Multiset> multisets_of_size(int size, int max_value) {
  std::vector<int> counts(static_cast<std::size_t>(max_value), size);
  return submultisets(Multiset::from_counts(counts), size);
}

struct Instance {
  std::size_t prop;
  std::function<std::optional<std::string>()> run;
};

template <typename Route>
void add_instances(std::vector<Instance>& out, const PropsOptions& o) {
  const auto cap = [&](int n) { return o.max_value > 0 ? o.max_value : n; };
  auto fail_text = [](const std::string& what, const std::vector<Tableau>& ts) {
    std::string s = what;
    for (const auto& t : ts) s += " [" + t.to_string() + "]";
    return s;
  };

  // merge: B the (m)-tableau of type xi = (r, m-r), C a xi-tableau of type alpha
  for (int m = 1; m <= o.max_n; ++m)
    for (int r = 0; r <= m; ++r)
      for (const auto& alpha : types_up_to(m, cap(m)))
        for_each_row_standard(Composition{r, m - r}, alpha, [&](const Tableau& c) {
          out.push_back({0, [c, r, m, fail_text]() -> std::optional<std::string> {
                           const Tableau b = row_tableau({repeated(1, r) + repeated(2, m - r)});
                           const Tableau a = row_tableau({c.content()});
                           const LaurentPoly coeff = binomial_product(a.row(0), c.row(0)) *
                                                     cross_power(c.row(0), c.row(1));
                           auto rhs = Route::zero(a.type());
                           Route::add(rhs, Route::image(a), coeff);
                           if (Route::chain({b, c}) == rhs) return std::nullopt;
                           return fail_text("merge", {b, c});
                         }});
        });

  // merge2: B of shape (r+u, v+t) and type (r,u,v,t)
  for (int n = 1; n <= o.max_n; ++n)
    for (const auto& ruvt : weak_compositions(n, 4))
      for (const auto& lambda : types_up_to(n, cap(n)))
        for_each_row_standard(ruvt, lambda, [&](const Tableau& c) {
          out.push_back({1, [c, ruvt, fail_text]() -> std::optional<std::string> {
                           const int r = ruvt[0], u = ruvt[1], v = ruvt[2], t = ruvt[3];
                           const Tableau b = Tableau({repeated(1, r) + repeated(2, u), repeated(3, v) + repeated(4, t)});
                           const Multiset a1 = c.row(0) + c.row(1), a2 = c.row(2) + c.row(3);
                           const Tableau a({a1, a2});
                           const LaurentPoly coeff = binomial_product(a1, c.row(0)) * binomial_product(a2, c.row(2)) *
                                                     cross_power(c.row(0), c.row(1)) * cross_power(c.row(2), c.row(3));
                           auto rhs = Route::zero(a.type());
                           Route::add(rhs, Route::image(a), coeff);
                           if (Route::chain({b, c}) == rhs) return std::nullopt;
                           return fail_text("merge2", {b, c});
                         }});
        });

  // split: D of shape (r,u,v,t) with rows 1, 2, 2, 3; E of shape (r, u+v, t)
  for (int n = 1; n <= o.max_n; ++n)
    for (const auto& ruvt : weak_compositions(n, 4))
      for (const auto& lambda : types_up_to(n, cap(n)))
        for_each_row_standard(Composition{ruvt[0], ruvt[1] + ruvt[2], ruvt[3]}, lambda, [&](const Tableau& e) {
          out.push_back({2, [e, ruvt, fail_text]() -> std::optional<std::string> {
                           const int r = ruvt[0], u = ruvt[1], v = ruvt[2], t = ruvt[3];
                           const Tableau d({repeated(1, r), repeated(2, u), repeated(2, v), repeated(3, t)});
                           auto rhs = Route::zero(e.type());
                           for (const auto& c2 : submultisets(e.row(1), u))
                             Route::add(rhs, Route::image(Tableau({e.row(0), c2, e.row(1) - c2, e.row(2)})), 1);
                           if (Route::chain({d, e}) == rhs) return std::nullopt;
                           return fail_text("split", {d, e});
                         }});
        });

  // compose: E = (R, S, T), then phi_B phi_D phi_E against the Garnir sum
  for (int n = 1; n <= o.max_n; ++n)
    for (int r = 0; r <= n; ++r)
      for (int t = 0; r + t <= n; ++t) {
        const int s = n - r - t;
        for (const auto& rr : multisets_of_size(r, cap(n)))
          for (const auto& ss : multisets_of_size(s, cap(n)))
            for (const auto& tt : multisets_of_size(t, cap(n)))
              for (int m = r; m <= n - t; ++m)
                out.push_back({3, [rr, ss, tt, m, n, fail_text]() -> std::optional<std::string> {
                                 const int r = rr.size(), t = tt.size();
                                 const int u = m - r, v = n - m - t;
                                 const Tableau e({rr, ss, tt});
                                 const Tableau d({repeated(1, r), repeated(2, u), repeated(2, v), repeated(3, t)});
                                 const Tableau b({repeated(1, r) + repeated(2, u), repeated(3, v) + repeated(4, t)});
                                 const Composition mu{m, n - m};
                                 LinComb expected(mu, e.type());
                                 for (const auto& uu : submultisets(ss, u)) {
                                   const Multiset vv = ss - uu;
                                   const Multiset a1 = rr + uu, a2 = tt + vv;
                                   expected.add(Tableau({a1, a2}), binomial_product(a1, rr) * binomial_product(a2, tt) *
                                                                        cross_power(rr, uu) * cross_power(vv, tt));
                                 }
                                 auto rhs = Route::zero(e.type());
                                 for (const auto& [a, c] : expected) Route::add(rhs, Route::image(a), c);
                                 const auto lhs = Route::chain({b, d, e});
                                 if (!(lhs == rhs)) return fail_text("compose", {b, d, e});
                                 if (Route::coordinates(lhs, mu, e.type()) != expected)
                                   return fail_text("compose coordinates", {b, d, e});
                                 if (ss.size() > m && m >= n - m &&
                                     garnir_relation(GarnirDatum(rr, ss, tt, m)) != expected)
                                   return fail_text("compose vs garnir_relation", {b, d, e});
                                 return std::nullopt;
                               }});
      }
}

}  // namespace

std::vector<PropReport> verify_composition_props(const PropsOptions& options) {
  require(options.max_n >= 0 && options.max_n <= 8, "verify_composition_props: need 0 <= max_n <= 8");
  if (options.route == OracleRoute::hecke) check_oracle_cap(options.max_n);
  std::vector<Instance> instances;
  if (options.route == OracleRoute::tabloid)
    add_instances<TabloidChain>(instances, options);
  else
    add_instances<HeckeChain>(instances, options);

  std::vector<std::optional<std::string>> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      try {
        results[i] = instances[i].run();
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();

  std::vector<PropReport> reports(4);
  for (std::size_t p = 0; p < reports.size(); ++p) reports[p].name = std::array{"merge", "merge2", "split", "compose"}[p];
  for (std::size_t i = 0; i < instances.size(); ++i) {
    PropReport& rep = reports[instances[i].prop];
    ++rep.instances;
    if (results[i]) {
      ++rep.failures;
      if (rep.counterexamples.size() < options.max_examples) rep.counterexamples.push_back(*results[i]);
    }
  }
  return reports;
}

}  // namespace tabhom
