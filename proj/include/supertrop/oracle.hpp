#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "supertrop/relations.hpp"

namespace supertrop::oracle {

inline constexpr int kDefaultEnumCap = 7;

// Every partition of {0..n-1}, generated as restricted growth strings.
inline std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumCap) {
  require(n <= cap, Err::TooLarge,
          "partition enumeration over " + std::to_string(n) + " elements exceeds cap " +
              std::to_string(cap));
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxc) {
    if (i == n) {
      out.push_back(Partition::from_class_ids(rgs));
      return;
    }
    for (int c = 0; c <= maxc + 1 && c < n; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(maxc, c));
    }
  };
  if (n == 0)
    out.push_back(Partition::discrete(0));
  else
    rec(0, -1);
  return out;
}

// Finest MFCE containing the seed pairs; every seed must be fiber compatible.
inline Partition closure_mfce(const SupertropicalMonoid& u,
                              const std::vector<std::pair<int, int>>& seeds) {
  for (auto [x, y] : seeds)
    if (u.ghost(x) != u.ghost(y))
      fail(Err::FiberIncompatibleSeed, u.name(x) + " ~ " + u.name(y) + " crosses fibers");
  return mfce_closure(u, seeds);
}

// All MFCE-relations, by filtering every partition of the element set.
inline std::vector<Partition> enumerate_mfce(const SupertropicalMonoid& u,
                                             int cap = kDefaultEnumCap) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(u.size(), cap))
    if (validate_mfce(u, p)) out.push_back(std::move(p));
  return out;
}

// All MFCE-relations by breadth-first closure over the lattice: every MFCE is
// reached by adding one generating pair at a time. Scales past the
// restricted-growth cap; cross-checked against enumerate_mfce in tests.
inline std::vector<Partition> enumerate_mfce_closure(const SupertropicalMonoid& u,
                                                     size_t limit = 200000) {
  std::set<std::vector<int>> seen;
  std::vector<Partition> out;
  std::deque<Partition> work;
  Partition d = diag(u);
  seen.insert(d.class_ids());
  out.push_back(d);
  work.push_back(d);
  while (!work.empty()) {
    Partition cur = work.front();
    work.pop_front();
    for (int x = 0; x < u.size(); ++x)
      for (int y = x + 1; y < u.size(); ++y) {
        if (cur.same(x, y) || u.ghost(x) != u.ghost(y)) continue;
        auto seeds = cur.pairs();
        seeds.emplace_back(x, y);
        Partition nxt = mfce_closure(u, seeds);
        if (seen.insert(nxt.class_ids()).second) {
          require(seen.size() <= limit, Err::TooLarge, "MFCE lattice exceeds enumeration limit");
          out.push_back(nxt);
          work.push_back(nxt);
        }
      }
  }
  return out;
}

using QuotientPredicate = std::function<bool(const Partition&, const Quotient&)>;

enum class ExtremalStatus { Found, NoneQualify, NoUniqueExtremum };

struct ExtremalResult {
  ExtremalStatus status = ExtremalStatus::NoneQualify;
  std::optional<Partition> relation;
};

namespace detail {
inline ExtremalResult extremal(const MonoidPtr& up, const QuotientPredicate& pred, bool finest,
                               int cap) {
  std::vector<Partition> qualifying;
  for (auto& p : enumerate_mfce(*up, cap)) {
    Quotient q = quotient(up, p);
    if (pred(p, q)) qualifying.push_back(std::move(p));
  }
  if (qualifying.empty()) return {ExtremalStatus::NoneQualify, std::nullopt};
  for (const auto& cand : qualifying) {
    bool extremal_here = true;
    for (const auto& other : qualifying) {
      bool ok = finest ? cand.finer_or_equal(other) : other.finer_or_equal(cand);
      if (!ok) {
        extremal_here = false;
        break;
      }
    }
    if (extremal_here) return {ExtremalStatus::Found, cand};
  }
  return {ExtremalStatus::NoUniqueExtremum, std::nullopt};
}
}  // namespace detail

// The finest MFCE whose quotient satisfies the predicate, when a unique
// finest one exists.
inline ExtremalResult finest_with(const MonoidPtr& up, const QuotientPredicate& pred,
                                  int cap = kDefaultEnumCap) {
  return detail::extremal(up, pred, true, cap);
}

inline ExtremalResult coarsest_with(const MonoidPtr& up, const QuotientPredicate& pred,
                                    int cap = kDefaultEnumCap) {
  return detail::extremal(up, pred, false, cap);
}

// Coarsest MFCE inside E satisfying a plain predicate on the relation.
inline std::optional<Partition> coarsest_inside(
    const SupertropicalMonoid& u, const Partition& e,
    const std::function<bool(const Partition&)>& pred, const std::vector<Partition>& all_mfce) {
  std::vector<const Partition*> qualifying;
  for (const auto& p : all_mfce)
    if (p.finer_or_equal(e) && pred(p)) qualifying.push_back(&p);
  for (auto* cand : qualifying) {
    bool top = true;
    for (auto* other : qualifying)
      if (!other->finer_or_equal(*cand)) {
        top = false;
        break;
      }
    if (top) return *cand;
  }
  return std::nullopt;
}

}  // namespace supertrop::oracle
