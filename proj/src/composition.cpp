#include "tabhom/composition.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tabhom {

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) require(p >= 0, "composition parts must be nonnegative");
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Composition Composition::stripped() const {
  std::vector<int> p = parts_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Composition(std::move(p));
}

int Composition::offset(std::size_t i) const {
  int s = 0;
  for (std::size_t k = 0; k < i && k < parts_.size(); ++k) s += parts_[k];
  return s;
}

Composition Composition::conjugate() const {
  const int width = parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
  std::vector<int> c(static_cast<std::size_t>(width), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Composition(std::move(c));
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool operator==(const Composition& a, const Composition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(Composition(parts)) {}

Partition::Partition(const Composition& c) : Composition(c) {
  require(c.is_partition(), "not a partition: " + c.to_string());
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(Composition(cur));
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> weak_compositions(int n, int parts) {
  std::vector<Composition> out;
  if (parts == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i + 1 == cur.size()) {
      cur[i] = rest;
      out.emplace_back(cur);
      return;
    }
    for (int p = rest; p >= 0; --p) {
      cur[i] = p;
      rec(i + 1, rest - p);
    }
  };
  rec(0, n);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = rest; p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace tabhom
