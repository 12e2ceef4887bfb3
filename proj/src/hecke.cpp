#include "tabhom/hecke.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace tabhom {

namespace {

constexpr int kMaxDegree = 16;

inline unsigned nibble(std::uint64_t k, int i) { return static_cast<unsigned>((k >> (4 * i)) & 0xF); }

inline std::uint64_t swap_nibbles(std::uint64_t k, int i) {
  const std::uint64_t a = (k >> (4 * i)) & 0xF;
  const std::uint64_t b = (k >> (4 * (i + 1))) & 0xF;
  k &= ~((0xFull << (4 * i)) | (0xFull << (4 * (i + 1))));
  return k | (b << (4 * i)) | (a << (4 * (i + 1)));
}

}  // namespace

HeckeElem HeckeElem::unit(int n) {
  HeckeElem h(n);
  h.add_term(Permutation::identity(n), LaurentPoly(1));
  return h;
}

HeckeElem::Key HeckeElem::key_of(const Permutation& w) { return w.inverse().packed(); }

Permutation HeckeElem::perm_of(Key k, int n) { return Permutation::unpack(k, n).inverse(); }

void HeckeElem::accumulate(Key k, const LaurentPoly& c, int shift, int sign) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k);
  it->second.add_scaled(c, shift, sign);
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly HeckeElem::coefficient(const Permutation& w) const {
  require(w.degree() == n_, "HeckeElem: permutation degree mismatch");
  auto it = terms_.find(key_of(w));
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElem::add_term(const Permutation& w, const LaurentPoly& c) {
  require(w.degree() == n_, "HeckeElem: permutation degree mismatch");
  require(n_ <= kMaxDegree, "HeckeElem: degree above 16 unsupported");
  accumulate(key_of(w), c, 0, 1);
}

std::vector<std::pair<Permutation, LaurentPoly>> HeckeElem::sorted_terms() const {
  std::vector<std::pair<Permutation, LaurentPoly>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(perm_of(k, n_), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

HeckeElem& HeckeElem::mul_right_gen(int i) {
  require(i >= 1 && i < n_, "mul_right_gen: generator index out of range");
  const int lo = i - 1;
  std::unordered_map<Key, LaurentPoly> next;
  next.reserve(terms_.size() * 2);
  auto add = [&](Key k, const LaurentPoly& c, int shift, int sign) {
    auto [it, inserted] = next.try_emplace(k);
    it->second.add_scaled(c, shift, sign);
    if (it->second.is_zero()) next.erase(it);
  };
  for (auto& [k, c] : terms_) {
    const Key swapped = swap_nibbles(k, lo);
    if (nibble(k, lo) < nibble(k, lo + 1)) {
      add(swapped, c, 0, 1);
    } else {
      add(k, c, 1, 1);    // q T_w
      add(k, c, 0, -1);   // - T_w
      add(swapped, c, 1, 1);  // q T_{w s_i}
    }
  }
  terms_ = std::move(next);
  return *this;
}

HeckeElem& HeckeElem::mul_right_word(std::span<const int> word) {
  for (int i : word) mul_right_gen(i);
  return *this;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& other) {
  require(n_ == other.n_, "HeckeElem: degree mismatch");
  for (const auto& [k, c] : other.terms_) accumulate(k, c, 0, 1);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& other) {
  require(n_ == other.n_, "HeckeElem: degree mismatch");
  for (const auto& [k, c] : other.terms_) accumulate(k, c, 0, -1);
  return *this;
}

HeckeElem& HeckeElem::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

HeckeElem t_of_perm(const Permutation& w) {
  HeckeElem h = HeckeElem::unit(w.degree());
  const auto word = w.reduced_word();
  return h.mul_right_word(word);
}

HeckeElem mul(const HeckeElem& a, const HeckeElem& b) {
  require(a.degree() == b.degree(), "mul: degree mismatch");
  HeckeElem out(a.degree());
  for (const auto& [w, c] : b.sorted_terms()) {
    HeckeElem t = a;
    const auto word = w.reduced_word();
    t.mul_right_word(word);
    t *= c;
    out += t;
  }
  return out;
}

std::vector<Permutation> young_subgroup(const Composition& lambda) {
  const int n = lambda.total();
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::function<void(std::size_t)> rec = [&](std::size_t block) {
    if (block == lambda.length()) {
      out.emplace_back(images);
      return;
    }
    const auto first = images.begin() + lambda.offset(block);
    const auto last = first + lambda[block];
    std::sort(first, last);
    do {
      rec(block + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return out;
}

HeckeElem x_elem(const Composition& lambda) {
  HeckeElem h(lambda.total());
  for (const auto& w : young_subgroup(lambda)) h.add_term(w, LaurentPoly(1));
  return h;
}

HeckeElem y_elem(const Composition& lambda) {
  HeckeElem h(lambda.total());
  for (const auto& w : young_subgroup(lambda)) {
    const int l = w.length();
    h.add_term(w, LaurentPoly::monomial(l % 2 ? -1 : 1, -l));
  }
  return h;
}

namespace {

// block_of[i] for positions 1..n, with blocks numbered by composition index
std::vector<int> block_labels(const Composition& c) {
  std::vector<int> labels;
  for (std::size_t b = 0; b < c.length(); ++b) labels.insert(labels.end(), static_cast<std::size_t>(c[b]), static_cast<int>(b));
  return labels;
}

bool refines(const Composition& nu, const Composition& mu) {
  if (nu.total() != mu.total()) return false;
  const auto a = block_labels(nu), b = block_labels(mu);
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] == a[i + 1] && b[i] != b[i + 1]) return false;
  return true;
}

}  // namespace

std::vector<Permutation> coset_reps(const Composition& nu, const Composition& mu) {
  require(refines(nu, mu), "coset_reps: " + nu.to_string() + " does not refine " + mu.to_string());
  const auto labels = block_labels(nu);
  std::vector<Permutation> out;
  for (const auto& d : young_subgroup(mu)) {
    bool minimal = true;
    for (std::size_t i = 0; i + 1 < labels.size() && minimal; ++i)
      if (labels[i] == labels[i + 1] && d(static_cast<int>(i) + 1) > d(static_cast<int>(i) + 2))
        minimal = false;
    if (minimal) out.push_back(d);
  }
  return out;
}

std::vector<Permutation> distinguished_reps(const Composition& lambda) {
  return coset_reps(lambda, Composition{lambda.total()});
}

HeckeElem right_multiply_x(HeckeElem h, const Composition& lambda) {
  require(h.degree() == lambda.total(), "right_multiply_x: degree mismatch");
  return right_multiply_young(std::move(h), lambda, false);
}

HeckeElem right_multiply_y(HeckeElem h, const Composition& lambda) {
  require(h.degree() == lambda.total(), "right_multiply_y: degree mismatch");
  return right_multiply_young(std::move(h), lambda, true);
}

GeneratorTree generator_tree(const std::vector<Permutation>& reps) {
  require(!reps.empty(), "generator_tree: empty representative set");
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index.emplace(reps[i], i);
  GeneratorTree tree;
  tree.children.resize(reps.size());
  tree.root = reps.size();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const auto& d = reps[c];
    if (d.is_identity()) {
      tree.root = c;
      continue;
    }
    const Permutation inv = d.inverse();
    bool attached = false;
    for (int i = 1; i < d.degree() && !attached; ++i) {
      if (inv(i) > inv(i + 1)) {
        auto it = index.find(d * Permutation::simple(d.degree(), i));
        if (it != index.end()) {
          tree.children[it->second].emplace_back(c, i);
          attached = true;
        }
      }
    }
    require(attached, "generator_tree: representative set is not prefix-closed");
  }
  require(tree.root < reps.size(), "generator_tree: identity missing from representatives");
  return tree;
}

HeckeElem right_multiply_sum(const HeckeElem& h, const std::vector<Permutation>& reps) {
  if (reps.empty()) return HeckeElem(h.degree());
  return right_multiply_tree(h, generator_tree(reps));
}

HeckeElem star(const HeckeElem& h) {
  HeckeElem out(h.degree());
  for (const auto& [w, c] : h.sorted_terms()) out.add_term(w.inverse(), c);
  return out;
}

}  // namespace tabhom
