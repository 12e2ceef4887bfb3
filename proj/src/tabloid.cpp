#include "tabhom/tabloid.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace tabhom {

namespace {

constexpr std::size_t kMaxBasisSize = std::size_t{1} << 24;

std::vector<int> block_letters(const Composition& lambda) {
  std::vector<int> letters;
  for (std::size_t r = 0; r < lambda.length(); ++r)
    letters.insert(letters.end(), static_cast<std::size_t>(lambda[r]), static_cast<int>(r));
  return letters;
}

}  // namespace

WordBasis::WordBasis(const Composition& lambda) : type_(lambda.stripped()), n_(lambda.total()) {
  require(n_ <= 16, "tabloid basis supports degree <= 16");
  require(type_.length() <= 16, "tabloid basis supports at most 16 rows");
  std::vector<int> letters = block_letters(type_);
  do {
    words_.push_back(pack(letters));
    require(words_.size() <= kMaxBasisSize, "tabloid basis for " + type_.to_string() + " is too large");
  } while (std::next_permutation(letters.begin(), letters.end()));

  partner_.assign(static_cast<std::size_t>(std::max(n_ - 1, 0)), std::vector<std::uint32_t>(words_.size()));
  cmp_.assign(partner_.size(), std::vector<signed char>(words_.size()));
  for (int i = 1; i < n_; ++i) {
    const int lo = 4 * (n_ - i - 1), hi = 4 * (n_ - i);
    for (std::size_t idx = 0; idx < words_.size(); ++idx) {
      const Word w = words_[idx];
      const Word a = (w >> hi) & 0xF, b = (w >> lo) & 0xF;
      auto& c = cmp_[static_cast<std::size_t>(i - 1)][idx];
      auto& p = partner_[static_cast<std::size_t>(i - 1)][idx];
      if (a == b) {
        c = 0;
        p = static_cast<std::uint32_t>(idx);
        continue;
      }
      c = a < b ? -1 : 1;
      const Word swapped = (w & ~((Word{0xF} << hi) | (Word{0xF} << lo))) | (b << hi) | (a << lo);
      p = static_cast<std::uint32_t>(index(swapped));
    }
  }
}

WordBasis::Word WordBasis::pack(std::span<const int> letters) const {
  Word w = 0;
  for (int l : letters) w = (w << 4) | static_cast<Word>(l);
  return w;
}

std::size_t WordBasis::index(Word w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  require(it != words_.end() && *it == w, "word is not in the tabloid basis of " + type_.to_string());
  return static_cast<std::size_t>(it - words_.begin());
}

Permutation WordBasis::rep(std::size_t idx) const {
  const Word w = words_[idx];
  std::vector<int> next(type_.length());
  for (std::size_t r = 0; r < type_.length(); ++r) next[r] = type_.offset(r);
  std::vector<int> inv(static_cast<std::size_t>(n_));
  for (int x = 1; x <= n_; ++x) inv[static_cast<std::size_t>(x - 1)] = ++next[static_cast<std::size_t>(letter(w, x))];
  return Permutation(std::move(inv)).inverse();
}

std::size_t WordBasis::index_of_rep(const Permutation& d) const {
  require(d.degree() == n_, "index_of_rep: degree mismatch");
  const std::vector<int> rows = block_letters(type_);
  const Permutation inv = d.inverse();
  std::vector<int> letters(static_cast<std::size_t>(n_));
  for (int x = 1; x <= n_; ++x) letters[static_cast<std::size_t>(x - 1)] = rows[static_cast<std::size_t>(inv(x) - 1)];
  const std::size_t idx = index(pack(letters));
  require(rep(idx) == d, d.to_string() + " is not a distinguished representative for " + type_.to_string());
  return idx;
}

std::shared_ptr<const WordBasis> word_basis(const Composition& lambda) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::shared_ptr<const WordBasis>> cache;
  const Composition key = lambda.stripped();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key.parts()); it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const WordBasis>(key);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key.parts(), std::move(basis)).first->second;
}

ModuleVector::ModuleVector(std::shared_ptr<const WordBasis> basis)
    : basis_(std::move(basis)), coords_(basis_->size()) {}

ModuleVector ModuleVector::generator(const Composition& lambda) {
  ModuleVector v(word_basis(lambda));
  v.coords_[v.basis_->identity_index()] = LaurentPoly(1);
  return v;
}

bool ModuleVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

std::size_t ModuleVector::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(coords_.begin(), coords_.end(), [](const LaurentPoly& c) { return !c.is_zero(); }));
}

ModuleVector& ModuleVector::mul_right_gen(int i) {
  require(i >= 1 && i < degree(), "mul_right_gen: generator index out of range");
  const WordBasis& b = *basis_;
  for (std::size_t a = 0; a < coords_.size(); ++a) {
    const int c = b.compare(i, a);
    if (c == 0) {
      coords_[a].shift(1);
    } else if (c < 0) {
      // a = f with f(i) < f(i+1), p = f s_i one longer
      const std::size_t p = b.partner(i, a);
      if (coords_[a].is_zero() && coords_[p].is_zero()) continue;
      LaurentPoly ca = std::move(coords_[a]);
      const LaurentPoly& cp = coords_[p];
      coords_[a] = cp;
      coords_[a].shift(1);
      ca.add_scaled(cp, 1, 1);
      ca.add_scaled(cp, 0, -1);
      coords_[p] = std::move(ca);
    }
  }
  return *this;
}

ModuleVector& ModuleVector::mul_right_word(std::span<const int> word) {
  for (int i : word) mul_right_gen(i);
  return *this;
}

void ModuleVector::require_same_basis(const ModuleVector& other) const {
  require(basis_ && other.basis_ && basis_->type() == other.basis_->type(),
          "module vectors lie in different permutation modules");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  require_same_basis(other);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!other.coords_[i].is_zero()) coords_[i] += other.coords_[i];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  require_same_basis(other);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!other.coords_[i].is_zero()) coords_[i] -= other.coords_[i];
  return *this;
}

ModuleVector& ModuleVector::operator*=(const LaurentPoly& scalar) {
  for (auto& c : coords_) {
    if (scalar.is_zero())
      c = LaurentPoly();
    else if (!c.is_zero())
      c *= scalar;
  }
  return *this;
}

ModuleVector& ModuleVector::add_scaled(const ModuleVector& other, const LaurentPoly& scalar) {
  require_same_basis(other);
  if (scalar.is_zero()) return *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!other.coords_[i].is_zero()) coords_[i] += other.coords_[i] * scalar;
  return *this;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  a.require_same_basis(b);
  return a.coords_ == b.coords_;
}

ModuleVector tabloid(const Composition& lambda, const Permutation& d) {
  ModuleVector v(word_basis(lambda));
  v[v.basis().index_of_rep(d)] = LaurentPoly(1);
  return v;
}

ModuleVector hom_image(const Tableau& a) {
  ModuleVector v(word_basis(a.type()));
  const WordBasis& basis = v.basis();
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(a.size()));
  std::vector<std::vector<int>> rows;
  for (const auto& r : a.rows()) {
    auto e = r.entries();
    for (int& x : e) --x;
    rows.push_back(std::move(e));
  }
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == rows.size()) {
      v[basis.index(basis.pack(letters))] = LaurentPoly(1);
      return;
    }
    auto& row = rows[g];
    std::sort(row.begin(), row.end());
    do {
      letters.insert(letters.end(), row.begin(), row.end());
      rec(g + 1);
      letters.resize(letters.size() - row.size());
    } while (std::next_permutation(row.begin(), row.end()));
  };
  rec(0);
  return v;
}

ModuleVector compose_after(const ModuleVector& v, const Tableau& b) {
  require(v.degree() == b.size(), "compose_after: degree mismatch");
  ModuleVector out = v;
  out.mul_right_word(perm_1A(b).reduced_word());
  const auto reps = coset_reps(row_reading_composition(b), b.shape());
  return right_multiply_tree(out, generator_tree(reps));
}

ModuleVector specht_image(ModuleVector v, const Partition& mu) {
  require(v.degree() == mu.total(), "specht_image: degree mismatch");
  v.mul_right_word(w_mu(mu).reduced_word());
  return right_multiply_young(std::move(v), mu.conjugate(), true);
}

ModuleVector comb_image(const LinComb& c) {
  ModuleVector v(word_basis(c.type()));
  for (const auto& [t, coeff] : c) v.add_scaled(hom_image(t), coeff);
  return v;
}

LinComb hom_coordinates(const ModuleVector& v, const Composition& mu) {
  const Composition lambda = v.basis().type();
  require(mu.total() == lambda.total(), "hom_coordinates: shape and type sizes differ");
  LinComb out(mu, lambda);
  ModuleVector check(v.basis_ptr());
  for (const auto& a : enumerate_row_standard(mu, lambda)) {
    std::vector<int> letters = reading_word(a);
    for (int& x : letters) --x;
    const LaurentPoly& c = v[v.basis().index(v.basis().pack(letters))];
    if (c.is_zero()) continue;
    out.add(a, c);
    check.add_scaled(hom_image(a), c);
  }
  if (!(check == v))
    throw MembershipError("vector is not a combination of tableau homomorphism images of shape " +
                          mu.to_string());
  return out;
}

bool specht_check_tabloid(const LinComb& c) {
  if (c.is_zero()) return true;
  require(c.shape().is_partition(), "specht check: shape " + c.shape().to_string() + " is not a partition");
  return specht_image(comb_image(c), Partition(c.shape())).is_zero();
}

namespace {

// Minimal element of W_la w: sort each block of positions of the one-line form.
Permutation minimal_in_coset(const Permutation& w, const Composition& lambda) {
  std::vector<int> images = w.images();
  for (std::size_t b = 0; b < lambda.length(); ++b) {
    auto first = images.begin() + lambda.offset(b);
    std::sort(first, first + lambda[b]);
  }
  return Permutation(std::move(images));
}

}  // namespace

ModuleVector from_hecke(const HeckeElem& h, const Composition& lambda) {
  require(h.degree() == lambda.total(), "from_hecke: degree mismatch");
  ModuleVector v(word_basis(lambda));
  const auto terms = h.sorted_terms();
  for (const auto& [w, c] : terms)
    if (minimal_in_coset(w, lambda) == w) v[v.basis().index_of_rep(w)] = c;
  std::size_t coset_size = 1;
  for (int part : lambda.parts())
    for (int k = 2; k <= part; ++k) coset_size *= static_cast<std::size_t>(k);
  bool ok = terms.size() == v.support_size() * coset_size;
  for (std::size_t i = 0; ok && i < terms.size(); ++i) {
    const auto& [w, c] = terms[i];
    ok = v[v.basis().index_of_rep(minimal_in_coset(w, lambda))] == c;
  }
  if (!ok) throw MembershipError("element is not in the permutation module for " + lambda.to_string());
  return v;
}

HeckeElem to_hecke(const ModuleVector& v) {
  const Composition lambda = v.basis().type();
  HeckeElem h(v.degree());
  const auto group = young_subgroup(lambda);
  for (std::size_t idx = 0; idx < v.coords().size(); ++idx) {
    if (v[idx].is_zero()) continue;
    const Permutation d = v.basis().rep(idx);
    for (const auto& u : group) h.add_term(u * d, v[idx]);
  }
  return h;
}

}  // namespace tabhom
