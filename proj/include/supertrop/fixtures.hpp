#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "supertrop/monoid.hpp"

namespace supertrop::fixtures {

// U = {0, e, 1}: the smallest supertropical monoid with a tangible element.
inline MonoidPtr minimal() {
  MonoidSpec s;
  s.size = 3;
  s.zero = 0;
  s.e = 1;
  s.one = 2;
  s.ghost_order = {0, 1};
  s.names = {"0", "e", "1"};
  s.mul = {
      0, 0, 0,  //
      0, 1, 1,  //
      0, 1, 2,  //
  };
  return SupertropicalMonoid::make(std::move(s));
}

// Two tangible twins x1, x2 over the ghost c; every product among them is c.
inline MonoidPtr twin() {
  MonoidSpec s;
  s.size = 6;
  s.zero = 0;
  s.e = 1;
  s.one = 3;
  s.ghost_order = {0, 1, 2};
  s.names = {"0", "e", "c", "1", "x1", "x2"};
  s.mul = {
      0, 0, 0, 0, 0, 0,  //
      0, 1, 2, 1, 2, 2,  //
      0, 2, 2, 2, 2, 2,  //
      0, 1, 2, 3, 4, 5,  //
      0, 2, 2, 4, 2, 2,  //
      0, 2, 2, 5, 2, 2,  //
  };
  return SupertropicalMonoid::make(std::move(s));
}

// Degree-3 truncation of the polynomial example: tangible monomials x^i y^j
// with i+j <= 3 over the saturating ghost chain e < c < c2 < c3.
inline MonoidPtr plane() {
  struct Mono {
    int i, j;
  };
  std::vector<Mono> monos;
  for (int d = 0; d <= 3; ++d)
    for (int i = d; i >= 0; --i) monos.push_back({i, d - i});
  int ghosts = 5;  // 0, e=c^0, c, c2, c3
  int size = ghosts + static_cast<int>(monos.size());
  MonoidSpec s;
  s.size = size;
  s.zero = 0;
  s.e = 1;
  s.ghost_order = {0, 1, 2, 3, 4};
  s.names.assign(size, "");
  s.names[0] = "0";
  s.names[1] = "e";
  s.names[2] = "c";
  s.names[3] = "c2";
  s.names[4] = "c3";
  auto tid = [&](int k) { return ghosts + k; };
  for (size_t k = 0; k < monos.size(); ++k) {
    auto [i, j] = monos[k];
    std::string nm;
    if (i == 0 && j == 0) nm = "1";
    if (i > 0) nm += (i == 1 ? "x" : "x" + std::to_string(i));
    if (j > 0) nm += (j == 1 ? "y" : "y" + std::to_string(j));
    s.names[tid(static_cast<int>(k))] = nm;
  }
  s.one = tid(0);
  auto gid = [&](int lvl) { return lvl == 0 ? 1 : 1 + lvl; };  // ghost of level 0..3
  auto mono_id = [&](int i, int j) {
    for (size_t k = 0; k < monos.size(); ++k)
      if (monos[k].i == i && monos[k].j == j) return tid(static_cast<int>(k));
    return -1;
  };
  s.mul.assign(size * size, 0);
  auto put = [&](int a, int b, int v) { s.mul[a * size + b] = v; };
  auto glevel = [&](int g) { return g - 1; };  // id 1..4 -> level 0..3
  for (int a = 1; a < ghosts; ++a)
    for (int b = 1; b < ghosts; ++b)
      put(a, b, gid(std::min(glevel(a) + glevel(b), 3)));
  for (size_t k = 0; k < monos.size(); ++k) {
    auto [i, j] = monos[k];
    for (int b = 1; b < ghosts; ++b) {
      int lvl = std::min(i + j + glevel(b), 3);
      put(tid(static_cast<int>(k)), b, gid(lvl));
      put(b, tid(static_cast<int>(k)), gid(lvl));
    }
    for (size_t l = 0; l < monos.size(); ++l) {
      auto [p, q] = monos[l];
      if (i + j + p + q <= 3)
        put(tid(static_cast<int>(k)), tid(static_cast<int>(l)), mono_id(i + p, j + q));
      else
        put(tid(static_cast<int>(k)), tid(static_cast<int>(l)), gid(3));
    }
  }
  return SupertropicalMonoid::make(std::move(s));
}

// Like twin, but the tangible products collapse onto x1; not a semiring.
inline MonoidPtr collapse() {
  MonoidSpec s;
  s.size = 6;
  s.zero = 0;
  s.e = 1;
  s.one = 3;
  s.ghost_order = {0, 1, 2};
  s.names = {"0", "e", "c", "1", "x1", "x2"};
  s.mul = {
      0, 0, 0, 0, 0, 0,  //
      0, 1, 2, 1, 2, 2,  //
      0, 2, 2, 2, 2, 2,  //
      0, 1, 2, 3, 4, 5,  //
      0, 2, 2, 4, 4, 4,  //
      0, 2, 2, 5, 4, 4,  //
  };
  return SupertropicalMonoid::make(std::move(s));
}

// twin plus an involution u over e that swaps the twins.
inline MonoidPtr swap() {
  MonoidSpec s;
  s.size = 7;
  s.zero = 0;
  s.e = 1;
  s.one = 3;
  s.ghost_order = {0, 1, 2};
  s.names = {"0", "e", "c", "1", "x1", "x2", "u"};
  s.mul = {
      0, 0, 0, 0, 0, 0, 0,  //
      0, 1, 2, 1, 2, 2, 1,  //
      0, 2, 2, 2, 2, 2, 2,  //
      0, 1, 2, 3, 4, 5, 6,  //
      0, 2, 2, 4, 2, 2, 5,  //
      0, 2, 2, 5, 2, 2, 4,  //
      0, 1, 2, 6, 5, 4, 3,  //
  };
  return SupertropicalMonoid::make(std::move(s));
}

// x has the tangible son y = x*x over its own ghost m, but x*y is already
// ghost: equalizing the sons of x drags x itself into the ghosts. Frozen from
// a random-table search; the smallest instance where every obstruction
// witness of the isolation criteria exists.
inline MonoidPtr cascade() {
  MonoidSpec s;
  s.size = 6;
  s.zero = 0;
  s.e = 1;
  s.one = 3;
  s.ghost_order = {0, 1, 2};
  s.names = {"0", "e", "m", "1", "x", "y"};
  s.mul = {
      0, 0, 0, 0, 0, 0,  //
      0, 1, 2, 1, 2, 2,  //
      0, 2, 2, 2, 2, 2,  //
      0, 1, 2, 3, 4, 5,  //
      0, 2, 2, 4, 5, 2,  //
      0, 2, 2, 5, 2, 2,  //
  };
  return SupertropicalMonoid::make(std::move(s));
}

// A supertropical semiring with a nontrivial NC-product: ghosts form the
// chain e < c < d with c*c = d, and the tangible x over c has x*x = d.
inline MonoidPtr nc_source() {
  MonoidSpec s;
  s.size = 6;
  s.zero = 0;
  s.e = 1;
  s.one = 4;
  s.ghost_order = {0, 1, 2, 3};
  s.names = {"0", "e", "c", "d", "1", "x"};
  s.mul = {
      0, 0, 0, 0, 0, 0,  //
      0, 1, 2, 3, 1, 2,  //
      0, 2, 3, 3, 2, 3,  //
      0, 3, 3, 3, 3, 3,  //
      0, 1, 2, 3, 4, 5,  //
      0, 2, 3, 3, 5, 3,  //
  };
  return SupertropicalMonoid::make(std::move(s));
}

// Collapse target for nc_source: one ghost g absorbs c and d; t*t = g.
inline MonoidPtr nc_target() {
  MonoidSpec s;
  s.size = 5;
  s.zero = 0;
  s.e = 1;
  s.one = 3;
  s.ghost_order = {0, 1, 2};
  s.names = {"0", "e", "g", "1", "t"};
  s.mul = {
      0, 0, 0, 0, 0,  //
      0, 1, 2, 1, 2,  //
      0, 2, 2, 2, 2,  //
      0, 1, 2, 3, 4,  //
      0, 2, 2, 4, 2,  //
  };
  return SupertropicalMonoid::make(std::move(s));
}

// The saturating ghost chain 0 < e < g2 < ... < gk as an all-ghost monoid.
inline MonoidPtr chain_ghost_monoid(int k) {
  MonoidSpec s;
  s.size = k + 1;
  s.zero = 0;
  s.e = 1;
  s.one = 1;
  s.ghost_order.resize(k + 1);
  std::iota(s.ghost_order.begin(), s.ghost_order.end(), 0);
  s.names.resize(k + 1);
  s.names[0] = "0";
  s.names[1] = "e";
  for (int i = 2; i <= k; ++i) s.names[i] = "g" + std::to_string(i);
  s.mul.assign((k + 1) * (k + 1), 0);
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) s.mul[a * (k + 1) + b] = std::min(a + b - 1, k);
  return SupertropicalMonoid::make(std::move(s));
}

struct NamedMonoid {
  std::string name;
  MonoidPtr monoid;
};

// The standing test catalog.
inline std::vector<NamedMonoid> catalog() {
  return {
      {"minimal", minimal()}, {"twin", twin()},         {"plane", plane()},
      {"collapse", collapse()}, {"swap", swap()},       {"cascade", cascade()},
      {"nc_source", nc_source()}, {"nc_target", nc_target()},
  };
}

}  // namespace supertrop::fixtures
