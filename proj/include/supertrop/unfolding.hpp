#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supertrop/transmission.hpp"

namespace supertrop {

// tau: U~(N) -> U, the unfolding of U along a submonoid N containing all
// tangibles and 0. Every member of N acquires a tangible copy; tau sends the
// copy back and is the identity on M.
struct Unfolding {
  MonoidPtr unfolded;
  Transmission tau;
  std::vector<int> lift;        // old id in N -> id of its tangible copy; -1 outside N
  std::vector<int> ghost_image; // old ghost id -> its id in the unfolded monoid
};

inline bool is_submonoid(const SupertropicalMonoid& u, const std::vector<bool>& n) {
  if (!n[u.zero()] || !n[u.one()]) return false;
  for (int x = 0; x < u.size(); ++x) {
    if (!n[x]) continue;
    for (int y = 0; y < u.size(); ++y)
      if (n[y] && !n[u.mul(x, y)]) return false;
  }
  return true;
}

inline std::vector<bool> tangibles_and_zero(const SupertropicalMonoid& u) {
  std::vector<bool> n(u.size(), false);
  n[u.zero()] = true;
  for (int x : u.tangibles()) n[x] = true;
  return n;
}

inline Unfolding unfold(const MonoidPtr& up, const std::vector<bool>& n) {
  const auto& u = *up;
  require(static_cast<int>(n.size()) == u.size(), Err::BadSpec, "submonoid mask size");
  require(is_submonoid(u, n), Err::NotASubmonoid, "N must be a product-closed submonoid");
  for (int x : u.tangibles())
    require(n[x], Err::MissingTangibles, "N must contain every tangible");

  // layout: ghosts of M in order, then a tangible copy of each nonzero member of N
  int ghosts = u.num_ghosts();
  std::vector<int> gpos(u.size(), -1);
  for (int i = 0; i < ghosts; ++i) gpos[u.ghost_order()[i]] = i;
  std::vector<int> lift(u.size(), -1);
  int next = ghosts;
  for (int x = 0; x < u.size(); ++x)
    if (n[x] && x != u.zero()) lift[x] = next++;
  int size = next;

  MonoidSpec spec;
  spec.size = size;
  spec.zero = 0;
  spec.e = gpos[u.e()];
  spec.one = lift[u.one()];
  spec.ghost_order.resize(ghosts);
  std::iota(spec.ghost_order.begin(), spec.ghost_order.end(), 0);
  spec.mul.assign(size * size, 0);
  auto put = [&](int a, int b, int v) { spec.mul[a * size + b] = v; };
  // ghost * ghost
  for (int a = 0; a < u.size(); ++a)
    if (gpos[a] >= 0)
      for (int b = 0; b < u.size(); ++b)
        if (gpos[b] >= 0) put(gpos[a], gpos[b], gpos[u.mul(a, b)]);
  // copy * copy: product inside N, glued at zero
  for (int x = 0; x < u.size(); ++x) {
    if (lift[x] < 0) continue;
    for (int y = 0; y < u.size(); ++y) {
      if (lift[y] < 0) continue;
      int p = u.mul(x, y);
      put(lift[x], lift[y], p == u.zero() ? 0 : lift[p]);
    }
  }
  // copy * ghost through the ghost map
  for (int x = 0; x < u.size(); ++x) {
    if (lift[x] < 0) continue;
    for (int b = 0; b < u.size(); ++b) {
      if (gpos[b] < 0) continue;
      int p = u.mul(u.ghost(x), b);
      put(lift[x], gpos[b], gpos[p]);
      put(gpos[b], lift[x], gpos[p]);
    }
  }
  spec.names.assign(size, "");
  for (int g : u.ghost_order()) spec.names[gpos[g]] = u.name(g);
  for (int x = 0; x < u.size(); ++x)
    if (lift[x] >= 0) spec.names[lift[x]] = u.in_ghost_ideal(x) ? u.name(x) + "~" : u.name(x);
  auto tilde = SupertropicalMonoid::make(std::move(spec), 2 * u.size());

  std::vector<int> tau_map(size, -1);
  for (int g : u.ghost_order()) tau_map[gpos[g]] = g;
  for (int x = 0; x < u.size(); ++x)
    if (lift[x] >= 0) tau_map[lift[x]] = x;
  Transmission tau{tilde, up, std::move(tau_map)};
  require_transmission(tau);
  if (!is_unfolded(*tilde)) internal_error("unfolding produced a folded monoid");
  std::vector<int> gimg(u.size(), -1);
  for (int g : u.ghost_order()) gimg[g] = gpos[g];
  return {tilde, std::move(tau), std::move(lift), std::move(gimg)};
}

// The unique tangible transmission completing the unfolding square of
// alpha : U' -> U along submonoids N' and N with alpha(N') inside N.
inline Transmission tangible_unfolding(const Transmission& alpha, const Unfolding& src,
                                       const Unfolding& tgt) {
  const auto& u1 = *alpha.source;
  for (int x = 0; x < u1.size(); ++x)
    if (src.lift[x] >= 0)
      require(tgt.lift[alpha.map[x]] >= 0, Err::ImageEscapesN,
              "alpha(" + u1.name(x) + ") escapes the target submonoid");
  std::vector<int> m(src.unfolded->size(), -1);
  for (int x = 0; x < u1.size(); ++x) {
    if (src.lift[x] >= 0) m[src.lift[x]] = tgt.lift[alpha.map[x]];
    if (src.ghost_image[x] >= 0) m[src.ghost_image[x]] = tgt.ghost_image[alpha.map[x]];
  }
  Transmission t{src.unfolded, tgt.unfolded, std::move(m)};
  require_transmission(t);
  if (!is_tangible_map(t)) internal_error("tangible unfolding is not tangible");
  // the square commutes elementwise
  for (int x = 0; x < src.unfolded->size(); ++x)
    if (tgt.tau.map[t.map[x]] != alpha.map[src.tau.map[x]])
      internal_error("unfolding square does not commute");
  return t;
}

// The tangible lift of a tangibly surjective transmission out of an unfolded
// source: factor alpha through tau over N = alpha(T(U')_0).
struct TangibleLift {
  Unfolding unfolding;  // of the target, along alpha(T(U')_0)
  Transmission lift;    // U' -> U~(N)
};

inline TangibleLift tangible_lift_of_transmission(const Transmission& alpha) {
  const auto& u1 = *alpha.source;
  const auto& u0 = *alpha.target;
  require(is_unfolded(u1), Err::NotUnfolded, "source must be unfolded");
  std::vector<bool> n(u0.size(), false);
  n[u0.zero()] = true;
  for (int x : u1.tangibles()) n[alpha.map[x]] = true;
  for (int x : u0.tangibles())
    require(n[x], Err::NotTangiblySurjective,
            "tangible " + u0.name(x) + " is not hit by a tangible");
  Unfolding unf = unfold(alpha.target, n);
  std::vector<int> m(u1.size(), -1);
  for (int x = 0; x < u1.size(); ++x) {
    if (u1.is_tangible(x) || x == u1.zero())
      m[x] = alpha.map[x] == u0.zero() ? 0 : unf.lift[alpha.map[x]];
    else
      m[x] = unf.ghost_image[alpha.map[x]];
  }
  Transmission lift{alpha.source, unf.unfolded, std::move(m)};
  require_transmission(lift);
  if (!is_tangible_map(lift)) internal_error("tangible lift is not tangible");
  for (int x = 0; x < u1.size(); ++x)
    if (unf.tau.map[lift.map[x]] != alpha.map[x]) internal_error("lift does not factor alpha");
  return {std::move(unf), std::move(lift)};
}

}  // namespace supertrop
