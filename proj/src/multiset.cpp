#include "tabhom/multiset.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>

namespace tabhom {

Multiset::Multiset(std::initializer_list<int> entries)
    : Multiset(from_entries(std::span<const int>(entries.begin(), entries.size()))) {}

Multiset Multiset::from_entries(std::span<const int> entries) {
  Multiset m;
  for (int v : entries) {
    require(v >= 1, "multiset entries must be positive integers");
    if (static_cast<std::size_t>(v) > m.counts_.size()) m.counts_.resize(static_cast<std::size_t>(v), 0);
    ++m.counts_[static_cast<std::size_t>(v) - 1];
    ++m.size_;
  }
  return m;
}

Multiset Multiset::from_counts(std::vector<int> counts) {
  Multiset m;
  m.counts_ = std::move(counts);
  for (int c : m.counts_) {
    require(c >= 0, "multiset multiplicities must be nonnegative");
    m.size_ += c;
  }
  m.trim();
  return m;
}

void Multiset::trim() {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

std::vector<int> Multiset::entries() const {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(size_));
  for (std::size_t i = 0; i < counts_.size(); ++i)
    e.insert(e.end(), static_cast<std::size_t>(counts_[i]), static_cast<int>(i) + 1);
  return e;
}

long long Multiset::sum() const {
  long long s = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    s += static_cast<long long>(counts_[i]) * static_cast<long long>(i + 1);
  return s;
}

bool Multiset::contains(const Multiset& sub) const {
  if (sub.counts_.size() > counts_.size()) return false;
  for (std::size_t i = 0; i < sub.counts_.size(); ++i)
    if (sub.counts_[i] > counts_[i]) return false;
  return true;
}

namespace {

Multiset keep_if(const std::vector<int>& counts, const std::function<bool(int)>& keep) {
  std::vector<int> c(counts.size(), 0);
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (keep(static_cast<int>(i) + 1)) c[i] = counts[i];
  return Multiset::from_counts(std::move(c));
}

}  // namespace

Multiset Multiset::below(int j) const {
  return keep_if(counts_, [j](int k) { return k < j; });
}
Multiset Multiset::at_most(int j) const {
  return keep_if(counts_, [j](int k) { return k <= j; });
}
Multiset Multiset::at_least(int j) const {
  return keep_if(counts_, [j](int k) { return k >= j; });
}
Multiset Multiset::above(int j) const {
  return keep_if(counts_, [j](int k) { return k > j; });
}

Multiset& Multiset::operator+=(const Multiset& other) {
  if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
  size_ += other.size_;
  return *this;
}

Multiset operator-(const Multiset& a, const Multiset& b) {
  require(a.contains(b), "multiset difference: " + b.to_string() + " not contained in " +
                             a.to_string());
  std::vector<int> c = a.counts_;
  for (std::size_t i = 0; i < b.counts_.size(); ++i) c[i] -= b.counts_[i];
  return Multiset::from_counts(std::move(c));
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
  const std::size_t len = std::max(a.counts_.size(), b.counts_.size());
  int consumed = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int ca = i < a.counts_.size() ? a.counts_[i] : 0;
    const int cb = i < b.counts_.size() ? b.counts_[i] : 0;
    if (ca != cb) {
      // The sequences agree on their first min(ca,cb)+consumed entries.
      if (ca > cb) return b.size_ > consumed + cb ? std::strong_ordering::less
                                                  : std::strong_ordering::greater;
      return a.size_ > consumed + ca ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    consumed += ca;
  }
  return std::strong_ordering::equal;
}

std::size_t Multiset::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int c : counts_) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ull;
  return h;
}

std::string Multiset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : entries()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(v);
  }
  return s + "}";
}

void for_each_submultiset(const Multiset& avail, int size,
                          const std::function<void(const Multiset&)>& f) {
  const auto& counts = avail.counts();
  if (size < 0 || size > avail.size()) return;
  // capacity[i] = number of entries with value index >= i
  std::vector<int> capacity(counts.size() + 1, 0);
  for (std::size_t i = counts.size(); i-- > 0;) capacity[i] = capacity[i + 1] + counts[i];
  std::vector<int> chosen(counts.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (rest == 0) {
      f(Multiset::from_counts(chosen));
      return;
    }
    if (i == counts.size()) return;
    const int hi = std::min(counts[i], rest);
    const int lo = std::max(0, rest - capacity[i + 1]);
    for (int c = hi; c >= lo; --c) {
      chosen[i] = c;
      rec(i + 1, rest - c);
    }
    chosen[i] = 0;
  };
  rec(0, size);
}

std::vector<Multiset> submultisets(const Multiset& avail, int size) {
  std::vector<Multiset> out;
  for_each_submultiset(avail, size, [&](const Multiset& m) { out.push_back(m); });
  return out;
}

}  // namespace tabhom
