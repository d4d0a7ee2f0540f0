#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "supertrop/monoid.hpp"

namespace supertrop {

// A map between supertropical monoids: multiplicative, preserving 0, 1 and e,
// whose restriction to the ghost ideals is monotone (hence a homomorphism of
// bipotent semirings).
struct Transmission {
  MonoidPtr source;
  MonoidPtr target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

inline Transmission identity_transmission(const MonoidPtr& u) {
  std::vector<int> m(u->size());
  std::iota(m.begin(), m.end(), 0);
  return {u, u, std::move(m)};
}

struct TransmissionDiag {
  Err code;
  std::string detail;
};

inline bool check_transmission(const Transmission& t, TransmissionDiag* diag = nullptr) {
  const auto& u = *t.source;
  const auto& v = *t.target;
  auto bad = [&](Err c, const std::string& d) {
    if (diag) *diag = {c, d};
    return false;
  };
  if (static_cast<int>(t.map.size()) != u.size()) return bad(Err::BadSpec, "map not total");
  for (int x : t.map)
    if (x < 0 || x >= v.size()) return bad(Err::BadSpec, "image out of range");
  if (t.map[u.zero()] != v.zero()) return bad(Err::UnitMismatch, "0 not sent to 0");
  if (t.map[u.one()] != v.one()) return bad(Err::UnitMismatch, "1 not sent to 1");
  if (t.map[u.e()] != v.e()) return bad(Err::UnitMismatch, "e not sent to e");
  for (int x = 0; x < u.size(); ++x)
    for (int y = x; y < u.size(); ++y)
      if (t.map[u.mul(x, y)] != v.mul(t.map[x], t.map[y]))
        return bad(Err::NotMultiplicative,
                   u.name(x) + "*" + u.name(y) + " is not respected");
  for (int g : u.ghost_order())
    if (!v.in_ghost_ideal(t.map[g]))
      return bad(Err::GhostPartNotMonotone, "ghost " + u.name(g) + " has non-ghost image");
  const auto& go = u.ghost_order();
  for (size_t i = 0; i + 1 < go.size(); ++i)
    if (!v.ghost_le(t.map[go[i]], t.map[go[i + 1]]))
      return bad(Err::GhostPartNotMonotone,
                 "order of " + u.name(go[i]) + " < " + u.name(go[i + 1]) + " not preserved");
  return true;
}

inline bool validate_transmission(const Transmission& t) { return check_transmission(t); }

inline void require_transmission(const Transmission& t) {
  TransmissionDiag d;
  if (!check_transmission(t, &d)) fail(d.code, d.detail);
}

// gamma = alpha^nu, the restriction M' -> M given on ghost-order positions.
inline std::vector<int> ghost_part(const Transmission& t) {
  std::vector<int> out;
  out.reserve(t.source->ghost_order().size());
  for (int g : t.source->ghost_order()) out.push_back(t.map[g]);
  return out;
}

// compose(a, b) applies a first: the transmission b o a.
inline Transmission compose(const Transmission& a, const Transmission& b) {
  require(same_monoid(a.target, b.source), Err::NotComposable,
          "target of the first map must be the source of the second");
  std::vector<int> m(a.source->size());
  for (int x = 0; x < a.source->size(); ++x) m[x] = b.map[a.map[x]];
  return {a.source, b.target, std::move(m)};
}

inline bool is_surjective(const Transmission& t) {
  std::vector<bool> hit(t.target->size(), false);
  for (int v : t.map) hit[v] = true;
  for (bool b : hit)
    if (!b) return false;
  return true;
}

inline bool has_trivial_zero_kernel(const Transmission& t) {
  for (int x = 0; x < t.source->size(); ++x)
    if (t.map[x] == t.target->zero() && x != t.source->zero()) return false;
  return true;
}

// alpha(T(U')) inside T(U) u {0}.
inline bool is_tangible_map(const Transmission& t) {
  for (int x : t.source->tangibles())
    if (t.target->is_ghost(t.map[x])) return false;
  return true;
}

struct MixingWitness {
  int x = -1, y = -1;  // a collided pair no z separates in kind
  bool zero_kernel_violation = false;
};

// Mixing: trivial zero kernel, and every collided pair x != y admits z with
// alpha(xz) != 0 and xz, yz of different kind.
inline bool is_mixing_map(const Transmission& t, MixingWitness* w = nullptr) {
  const auto& u = *t.source;
  if (!has_trivial_zero_kernel(t)) {
    if (w) *w = {-1, -1, true};
    return false;
  }
  for (int x = 0; x < u.size(); ++x)
    for (int y = x + 1; y < u.size(); ++y) {
      if (t.map[x] != t.map[y]) continue;
      if (x == u.zero() || y == u.zero()) continue;
      bool found = false;
      for (int z = 0; z < u.size() && !found; ++z) {
        int xz = u.mul(x, z), yz = u.mul(y, z);
        if (t.map[xz] == t.target->zero()) continue;
        bool xt = u.is_tangible(xz), yt = u.is_tangible(yz);
        if (xt != yt) found = true;
      }
      if (!found) {
        if (w) *w = {x, y, false};
        return false;
      }
    }
  return true;
}

// Surjective transmission whose ghost part is bijective (an order isomorphism
// onto the target's ghost ideal): a fiber contraction up to the canonical
// identification of the two ghost ideals.
inline bool is_fiber_contraction(const Transmission& t) {
  if (!is_surjective(t)) return false;
  auto g = ghost_part(t);
  std::vector<bool> hit(t.target->size(), false);
  for (int v : g) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return static_cast<int>(g.size()) == t.target->num_ghosts();
}

// Inverse of the ghost part of a fiber contraction: target ghost -> source ghost.
inline std::vector<int> ghost_part_inverse(const Transmission& t) {
  std::vector<int> inv(t.target->size(), -1);
  for (int g : t.source->ghost_order()) inv[t.map[g]] = g;
  return inv;
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

// An isomorphism of supertropical monoids: a bijective transmission. Found by
// backtracking over ghost order (forced) and tangibles.
inline std::optional<std::vector<int>> find_isomorphism(const SupertropicalMonoid& u,
                                                        const SupertropicalMonoid& v) {
  if (u.size() != v.size() || u.num_ghosts() != v.num_ghosts()) return std::nullopt;
  std::vector<int> map(u.size(), -1);
  std::vector<bool> used(v.size(), false);
  // ghosts match by order position
  for (int i = 0; i < u.num_ghosts(); ++i) {
    int a = u.ghost_order()[i], b = v.ghost_order()[i];
    map[a] = b;
    used[b] = true;
  }
  // ghost tables must already agree
  for (int a : u.ghost_order())
    for (int b : u.ghost_order())
      if (map[u.mul(a, b)] != v.mul(map[a], map[b])) return std::nullopt;
  if (map[u.one()] >= 0 && map[u.one()] != v.one()) return std::nullopt;

  auto tang = u.tangibles();
  std::vector<int> vtang = v.tangibles();

  auto consistent = [&](int x) {
    for (int y = 0; y < u.size(); ++y) {
      if (map[y] < 0) continue;
      int p = u.mul(x, y);
      if (map[p] >= 0 && map[p] != v.mul(map[x], map[y])) return false;
      if (map[p] < 0 && u.is_tangible(p)) continue;
    }
    return true;
  };

  std::vector<size_t> order(tang.begin(), tang.end());
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == order.size()) {
      // full table check
      for (int a = 0; a < u.size(); ++a)
        for (int b = 0; b < u.size(); ++b)
          if (map[u.mul(a, b)] != v.mul(map[a], map[b])) return false;
      return true;
    }
    int x = static_cast<int>(order[i]);
    for (int y : vtang) {
      if (used[y]) continue;
      if (x == u.one() && y != v.one()) continue;
      if (v.ghost_pos(v.ghost(y)) != u.ghost_pos(u.ghost(x))) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x) && rec(i + 1)) return true;
      map[x] = -1;
      used[y] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

inline bool is_isomorphic(const SupertropicalMonoid& u, const SupertropicalMonoid& v) {
  return find_isomorphism(u, v).has_value();
}

}  // namespace supertrop
