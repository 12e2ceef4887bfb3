#pragma once

#include "tabhom/errors.hpp"
#include "tabhom/garnir.hpp"
#include "tabhom/lincomb.hpp"
#include "tabhom/tableau.hpp"

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tabhom {

/// sum_i sum_{k in A^i} i*k, rows numbered from 1.  Strictly increases
/// along every straightening step.
long long weight(const Tableau& a);

/// Rows l and l+1 (0-based) as a two-row tableau.
Tableau row_window(const Tableau& a, std::size_t l);

enum class WindowChoice { topmost, bottommost };

/// The adjacent row pair (l, l+1) chosen for the next step, or nullopt if
/// `a` is semistandard.
std::optional<std::size_t> violating_window(const Tableau& a, WindowChoice choice);

/// Re-inserts each two-row term of `rel` as rows l, l+1 (0-based) of `a`,
/// copying all other rows.
template <typename Coeff>
BasicLinComb<Coeff> embed_two_row(const Tableau& a, std::size_t l, const BasicLinComb<Coeff>& rel) {
  const Tableau window = row_window(a, l);
  BasicLinComb<Coeff> out(a.shape(), a.type());
  if (rel.is_zero()) return out;
  require(rel.shape() == window.shape(), "embed_two_row: relation shape " +
                                             rel.shape().to_string() + " does not match window " +
                                             window.shape().to_string());
  require(rel.type() == window.type(), "embed_two_row: relation type " + rel.type().to_string() +
                                           " does not match window " + window.type().to_string());
  std::vector<Multiset> rows = a.rows();
  for (const auto& [t, c] : rel) {
    rows[l] = t.row(0);
    rows[l + 1] = t.row(1);
    out.add(Tableau(rows), c);
  }
  return out;
}

enum class Algorithm {
  memoized,  // depth-first substitution with a per-tableau cache
  worklist,  // expand the lowest-weight non-semistandard term until none remain
};

struct StraightenOptions {
  WindowChoice window = WindowChoice::topmost;
  ColumnChoice column = ColumnChoice::leftmost;
  Algorithm algorithm = Algorithm::memoized;
};

/// Rewrites tableau homomorphisms in the semistandard basis, with the
/// Garnir coefficients mapped into Coeff (identity for LaurentPoly,
/// evaluation at a fixed q for Rational).  Not thread-safe; the cache
/// persists across calls on one instance.
template <typename Coeff>
class BasicStraightener {
 public:
  using Comb = BasicLinComb<Coeff>;
  using CoeffMap = std::function<Coeff(const LaurentPoly&)>;

  explicit BasicStraightener(CoeffMap map, StraightenOptions options = {})
      : map_(std::move(map)), options_(options) {}

  const StraightenOptions& options() const { return options_; }

  /// One window step: the row pair chosen by the options, straightened
  /// once and embedded.  Requires a non-semistandard tableau.
  Comb step(const Tableau& a) const {
    const auto l = violating_window(a, options_.window);
    require(l.has_value(), "straighten step: " + a.to_string() + " is semistandard");
    const LinComb rel = two_row_straighten_step(row_window(a, *l), options_.column);
    BasicLinComb<Coeff> mapped(rel.shape(), rel.type());
    for (const auto& [t, c] : rel) mapped.add(t, map_(c));
    return embed_two_row(a, *l, mapped);
  }

  Comb semistandardize(const Tableau& a) {
    require(a.shape().is_partition(), "semistandardize: shape " + a.shape().to_string() +
                                          " is not a partition");
    if (is_semistandard(a)) return Comb::single(a);
    if (options_.algorithm == Algorithm::worklist) return worklist(Comb::single(a));
    return memoized(a);
  }

  Comb semistandardize(const Comb& c) {
    require(c.shape().is_partition(), "semistandardize: shape " + c.shape().to_string() +
                                          " is not a partition");
    if (options_.algorithm == Algorithm::worklist) return worklist(c);
    Comb out(c.shape(), c.type());
    for (const auto& [t, coeff] : c) {
      if (is_semistandard(t))
        out.add(t, coeff);
      else
        out.add_scaled(memoized(t), coeff);
    }
    return out;
  }

  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

 private:
  Comb memoized(const Tableau& root) {
    if (auto it = memo_.find(root); it != memo_.end()) return it->second;
    std::vector<Tableau> stack{root};
    std::unordered_map<Tableau, Comb> steps;
    while (!stack.empty()) {
      const Tableau t = stack.back();
      if (memo_.count(t)) {
        stack.pop_back();
        continue;
      }
      auto sit = steps.find(t);
      if (sit == steps.end()) sit = steps.emplace(t, step(t)).first;
      bool ready = true;
      for (const auto& [b, c] : sit->second) {
        if (!is_semistandard(b) && !memo_.count(b)) {
          stack.push_back(b);
          ready = false;
        }
      }
      if (!ready) continue;
      Comb expanded(t.shape(), t.type());
      for (const auto& [b, c] : sit->second) {
        if (is_semistandard(b))
          expanded.add(b, c);
        else
          expanded.add_scaled(memo_.at(b), c);
      }
      memo_.emplace(t, std::move(expanded));
      steps.erase(sit);
      stack.pop_back();
    }
    return memo_.at(root);
  }

  Comb worklist(const Comb& c) {
    Comb done(c.shape(), c.type());
    std::map<std::pair<long long, Tableau>, Coeff> pending;
    auto push = [&](const Tableau& t, const Coeff& coeff) {
      if (is_semistandard(t)) {
        done.add(t, coeff);
        return;
      }
      auto [it, inserted] = pending.try_emplace({weight(t), t}, coeff);
      if (!inserted) {
        it->second += coeff;
        if (is_zero_coeff(it->second)) pending.erase(it);
      }
    };
    for (const auto& [t, coeff] : c) push(t, coeff);
    while (!pending.empty()) {
      auto node = pending.extract(pending.begin());
      const Tableau& t = node.key().second;
      for (const auto& [b, coeff] : step(t)) push(b, coeff * node.mapped());
    }
    return done;
  }

  CoeffMap map_;
  StraightenOptions options_;
  std::unordered_map<Tableau, Comb> memo_;
};

class Straightener : public BasicStraightener<LaurentPoly> {
 public:
  explicit Straightener(StraightenOptions options = {})
      : BasicStraightener([](const LaurentPoly& p) { return p; }, options) {}
};

/// Straightening over Q with q specialised to q0 before any arithmetic.
class SpecializedStraightener : public BasicStraightener<Rational> {
 public:
  explicit SpecializedStraightener(Rational q0, StraightenOptions options = {})
      : BasicStraightener([q0](const LaurentPoly& p) { return specialize(p, q0); }, options) {}
};

LinComb semistandardize(const Tableau& a, StraightenOptions options = {});
LinComb semistandardize_lincomb(const LinComb& c, StraightenOptions options = {});

}  // namespace tabhom
