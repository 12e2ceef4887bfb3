#include "tabhom/oracle.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

namespace tabhom {

int oracle_cap() {
  if (const char* env = std::getenv("TABHOM_ORACLE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("TABHOM_ORACLE_CAP is not an integer: ") + env);
    }
  }
  return 8;
}

void check_oracle_cap(int n) {
  const int cap = oracle_cap();
  if (n > cap)
    throw OracleCapExceeded("n = " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(cap));
}

namespace {

// 1_A for an arbitrary filling given as the entry at each position of t^mu.
Permutation perm_of_filling(const std::vector<int>& word, const Composition& type) {
  std::vector<int> images(word.size());
  std::vector<int> next(type.length());
  for (std::size_t r = 0; r < type.length(); ++r) next[r] = type.offset(r);
  for (std::size_t x = 0; x < word.size(); ++x)
    images[static_cast<std::size_t>(next[static_cast<std::size_t>(word[x] - 1)]++)] = static_cast<int>(x) + 1;
  return Permutation(std::move(images));
}

std::set<Permutation> arrangement_perms(const Tableau& a) {
  std::set<Permutation> out;
  const Composition type = a.type();
  std::vector<std::vector<int>> rows;
  for (const auto& r : a.rows()) rows.push_back(r.entries());
  std::vector<int> word;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == rows.size()) {
      out.insert(perm_of_filling(word, type));
      return;
    }
    auto& row = rows[g];
    do {
      word.insert(word.end(), row.begin(), row.end());
      rec(g + 1);
      word.resize(word.size() - row.size());
    } while (std::next_permutation(row.begin(), row.end()));
  };
  rec(0);
  return out;
}

Permutation minimal_in_coset(const Permutation& w, const Composition& lambda) {
  std::vector<int> images = w.images();
  for (std::size_t b = 0; b < lambda.length(); ++b) {
    auto first = images.begin() + lambda.offset(b);
    std::sort(first, first + lambda[b]);
  }
  return Permutation(std::move(images));
}

}  // namespace

HeckeElem image_h1(const Tableau& a) {
  check_oracle_cap(a.size());
  const Permutation d = perm_1A(a);
  std::set<Permutation> coset;
  const auto left = young_subgroup(a.type());
  const auto right = young_subgroup(a.shape());
  for (const auto& v : left)
    for (const auto& u : right) coset.insert(v * d * u);
  HeckeElem h(a.size());
  for (const auto& w : coset) h.add_term(w, LaurentPoly(1));
  return h;
}

HeckeElem image_h2(const Tableau& a) {
  check_oracle_cap(a.size());
  const HeckeElem x = x_elem(a.type());
  HeckeElem h(a.size());
  for (const auto& d : arrangement_perms(a)) {
    HeckeElem t = x;
    h += t.mul_right_word(d.reduced_word());
  }
  return h;
}

HeckeElem image_h3(const Tableau& a) {
  check_oracle_cap(a.size());
  HeckeElem h = x_elem(a.type());
  h.mul_right_word(perm_1A(a).reduced_word());
  return right_multiply_sum(h, coset_reps(row_reading_composition(a), a.shape()));
}

HeckeElem image_h4(const Tableau& a) {
  check_oracle_cap(a.size());
  HeckeElem h = x_elem(a.shape());
  h.mul_right_word(perm_1A(a).inverse().reduced_word());
  return star(right_multiply_sum(h, coset_reps(column_reading_composition(a), a.type())));
}

TabloidVector tabloid_coords(const HeckeElem& h, const Composition& lambda) {
  require(h.degree() == lambda.total(), "tabloid_coords: degree mismatch");
  TabloidVector v{lambda.stripped(), {}};
  const auto terms = h.sorted_terms();
  for (const auto& [w, c] : terms)
    if (minimal_in_coset(w, lambda) == w) v.coords.emplace(w, c);
  std::size_t coset_size = 1;
  for (int part : lambda.parts())
    for (int k = 2; k <= part; ++k) coset_size *= static_cast<std::size_t>(k);
  bool ok = terms.size() == v.coords.size() * coset_size;
  for (std::size_t i = 0; ok && i < terms.size(); ++i) {
    auto it = v.coords.find(minimal_in_coset(terms[i].first, lambda));
    ok = it != v.coords.end() && it->second == terms[i].second;
  }
  if (!ok) throw MembershipError("element is not in the permutation module for " + lambda.to_string());
  return v;
}

HeckeElem apply_hom(const TabloidVector& v, const Tableau& c) {
  require(c.shape() == v.lambda, "apply_hom: tableau shape " + c.shape().to_string() +
                                     " does not match " + v.lambda.to_string());
  const HeckeElem base = image_h3(c);
  HeckeElem out(c.size());
  for (const auto& [d, coeff] : v.coords) {
    HeckeElem t = base;
    t.mul_right_word(d.reduced_word());
    t *= coeff;
    out += t;
  }
  return out;
}

LinComb hom_coordinates(const HeckeElem& h, const Composition& mu, const Composition& lambda) {
  require(h.degree() == mu.total() && mu.total() == lambda.total(), "hom_coordinates: degree mismatch");
  LinComb out(mu, lambda);
  HeckeElem check(h.degree());
  for (const auto& a : enumerate_row_standard(mu, lambda)) {
    const LaurentPoly c = h.coefficient(perm_1A(a));
    if (c.is_zero()) continue;
    out.add(a, c);
    check += image_h1(a) * c;
  }
  if (!(check == h))
    throw MembershipError("element is not a combination of tableau homomorphism images of shape " +
                          mu.to_string());
  return out;
}

HeckeElem specht_image(const HeckeElem& h, const Partition& mu) {
  HeckeElem t = h;
  t.mul_right_word(w_mu(mu).reduced_word());
  return right_multiply_y(std::move(t), mu.conjugate());
}

bool specht_check(const LinComb& c) {
  if (c.is_zero()) return true;
  require(c.shape().is_partition(), "specht check: shape " + c.shape().to_string() + " is not a partition");
  check_oracle_cap(c.shape().total());
  HeckeElem h(c.shape().total());
  for (const auto& [a, coeff] : c) h += image_h3(a) * coeff;
  return specht_image(h, Partition(c.shape())).is_zero();
}

}  // namespace tabhom
