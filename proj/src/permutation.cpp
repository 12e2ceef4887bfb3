#include "tabhom/permutation.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tabhom {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    require(v >= 1 && v <= n && !seen[static_cast<std::size_t>(v)],
            "not a permutation in one-line form");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  require(i >= 1 && i < n, "simple reflection index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i) - 1], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::unpack(std::uint64_t code, int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<int>((code >> (4 * i)) & 0xF) + 1;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[static_cast<std::size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
  return p;
}

int Permutation::length() const { return inversions(*this); }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  // pos[v] = position of value v; a right descent at i means i+1 precedes i.
  std::vector<int> pos = inverse().images_;
  std::vector<int> word;
  const int n = degree();
  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i < n; ++i) {
      if (pos[static_cast<std::size_t>(i) - 1] > pos[static_cast<std::size_t>(i)]) {
        std::swap(pos[static_cast<std::size_t>(i) - 1], pos[static_cast<std::size_t>(i)]);
        word.push_back(i);
        found = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::uint64_t Permutation::packed() const {
  require(degree() <= 16, "packed permutations support degree <= 16");
  std::uint64_t code = 0;
  for (int i = 0; i < degree(); ++i)
    code |= static_cast<std::uint64_t>(images_[static_cast<std::size_t>(i)] - 1) << (4 * i);
  return code;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), "permutation degrees differ");
  Permutation p;
  p.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) p.images_[i] = b(a.images_[i]);
  return p;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::string Permutation::cycle_string() const {
  std::string s;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    s += "(";
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      if (!first) s += " ";
      first = false;
      s += std::to_string(x);
      x = (*this)(x);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

int inversions(const Permutation& w) {
  int count = 0;
  const auto& im = w.images();
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[i] > im[j]) ++count;
  return count;
}

}  // namespace tabhom
