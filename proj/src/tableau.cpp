#include "tabhom/tableau.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>

namespace tabhom {

namespace {

const Multiset kEmptyRow;

}  // namespace

Tableau::Tableau(std::vector<Multiset> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

Tableau::Tableau(const Composition& shape, std::vector<Multiset> rows) : Tableau(std::move(rows)) {
  require(this->shape() == shape, "tableau rows do not match shape " + shape.to_string());
}

Composition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(r.size());
  return Composition(std::move(parts));
}

Multiset Tableau::content() const {
  Multiset c;
  for (const auto& r : rows_) c += r;
  return c;
}

Composition Tableau::type() const { return Composition(content().counts()); }

const Multiset& Tableau::row(std::size_t i) const {
  return i < rows_.size() ? rows_[i] : kEmptyRow;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
  return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(),
                                                b.rows_.end());
}

std::size_t Tableau::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& r : rows_) h = (h ^ r.hash()) * 0x100000001b3ull + 0x9e37;
  return h;
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += " / ";
    bool first = true;
    for (int v : rows_[i].entries()) {
      if (!first) s += " ";
      first = false;
      s += std::to_string(v);
    }
  }
  return s;
}

std::vector<int> reading_word(const Tableau& a) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(a.size()));
  for (const auto& r : a.rows()) {
    const auto e = r.entries();
    w.insert(w.end(), e.begin(), e.end());
  }
  return w;
}

bool is_semistandard(const Tableau& a) {
  require(a.shape().is_partition(), "is_semistandard: shape " + a.shape().to_string() +
                                        " is not a partition");
  for (std::size_t r = 0; r + 1 < a.num_rows(); ++r) {
    const auto upper = a.row(r).entries();
    const auto lower = a.row(r + 1).entries();
    for (std::size_t c = 0; c < lower.size(); ++c)
      if (lower[c] <= upper[c]) return false;
  }
  return true;
}

Permutation perm_1A(const Tableau& a) {
  const std::vector<int> word = reading_word(a);
  const Composition type = a.type();
  std::vector<int> images(word.size());
  // next[r] = next unused position in row r of t^la
  std::vector<int> next(type.length());
  for (std::size_t r = 0; r < type.length(); ++r) next[r] = type.offset(r);
  for (std::size_t x = 0; x < word.size(); ++x) {
    const auto r = static_cast<std::size_t>(word[x]) - 1;
    images[static_cast<std::size_t>(next[r]++)] = static_cast<int>(x) + 1;
  }
  return Permutation(std::move(images));
}

long long length_1A(const Tableau& a) {
  long long total = 0;
  const int k = a.content().max_value();
  for (std::size_t g = 0; g < a.num_rows(); ++g)
    for (std::size_t h = g + 1; h < a.num_rows(); ++h)
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
          total += static_cast<long long>(a.row(g).count(j)) * a.row(h).count(i);
  return total;
}

Permutation w_mu(const Partition& mu) {
  const Composition conj = mu.conjugate();
  std::vector<int> images(static_cast<std::size_t>(mu.total()));
  for (std::size_t r = 0; r < mu.length(); ++r)
    for (int c = 0; c < mu[r]; ++c)
      images[static_cast<std::size_t>(mu.offset(r) + c)] =
          conj.offset(static_cast<std::size_t>(c)) + static_cast<int>(r) + 1;
  return Permutation(std::move(images));
}

Composition row_reading_composition(const Tableau& a) {
  const int k = a.content().max_value();
  std::vector<int> parts;
  for (const auto& r : a.rows())
    for (int v = 1; v <= k; ++v) parts.push_back(r.count(v));
  return Composition(std::move(parts));
}

Composition column_reading_composition(const Tableau& a) {
  const int k = a.content().max_value();
  std::vector<int> parts;
  for (int v = 1; v <= k; ++v)
    for (const auto& r : a.rows()) parts.push_back(r.count(v));
  return Composition(std::move(parts));
}

Multiset content_of_type(const Composition& type) { return Multiset::from_counts(type.parts()); }

void for_each_row_standard(const Composition& shape, const Composition& type,
                           const std::function<void(const Tableau&)>& f) {
  if (shape.total() != type.total()) return;
  std::vector<Multiset> rows(shape.length());
  std::function<void(std::size_t, const Multiset&)> rec = [&](std::size_t i,
                                                              const Multiset& remaining) {
    if (i == shape.length()) {
      f(Tableau(rows));
      return;
    }
    for_each_submultiset(remaining, shape[i], [&](const Multiset& row) {
      rows[i] = row;
      rec(i + 1, remaining - row);
    });
  };
  rec(0, content_of_type(type));
}

std::vector<Tableau> enumerate_row_standard(const Composition& shape, const Composition& type) {
  std::vector<Tableau> out;
  for_each_row_standard(shape, type, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> enumerate_semistandard(const Partition& shape, const Composition& type) {
  std::vector<Tableau> out;
  for_each_row_standard(shape, type, [&](const Tableau& t) {
    if (is_semistandard(t)) out.push_back(t);
  });
  return out;
}

}  // namespace tabhom
