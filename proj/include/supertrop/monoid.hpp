#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "supertrop/base.hpp"

namespace supertrop {

inline constexpr int kDefaultSizeCap = 64;

enum class Kind { Zero, Tangible, Ghost };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Zero: return "zero";
    case Kind::Tangible: return "tangible";
    case Kind::Ghost: return "ghost";
  }
  return "?";
}

class SupertropicalMonoid;
using MonoidPtr = std::shared_ptr<const SupertropicalMonoid>;

// Raw description of a supertropical monoid, as read from a fixture file or
// assembled by a construction. Validated by SupertropicalMonoid::make.
struct MonoidSpec {
  int size = 0;
  std::vector<int> mul;          // size*size, row-major
  int zero = -1;
  int one = -1;
  int e = -1;
  std::vector<int> ghost_order;  // the ghost ideal eU in ascending order, starting at zero
  std::vector<std::string> names;  // optional; synthesized when empty
};

// A commutative monoid with neutral 1 and absorbing 0, given by its table.
struct MonoidWithZero {
  int size = 0;
  std::vector<int> mul;
  int zero = -1;
  int one = -1;
  std::vector<std::string> names;

  int at(int a, int b) const { return mul[a * size + b]; }
};

// A totally ordered monoid with bottom absorbing 0; addition is max under
// the order, which makes it a bipotent semiring. `one` is its unit.
struct BipotentSemiring {
  int size = 0;
  std::vector<int> mul;
  int zero = -1;
  int one = -1;
  std::vector<int> order;  // ascending, order[0] == zero
  std::vector<std::string> names;

  int at(int a, int b) const { return mul[a * size + b]; }
};

namespace detail {

inline std::string nm(const std::vector<std::string>& names, int x) {
  if (x >= 0 && x < static_cast<int>(names.size()) && !names[x].empty()) return names[x];
  return "#" + std::to_string(x);
}

inline void check_table_monoid(int size, const std::vector<int>& mul, int zero, int one,
                               const std::vector<std::string>& names) {
  require(size >= 1, Err::BadSpec, "empty element set");
  require(static_cast<int>(mul.size()) == size * size, Err::BadSpec, "table size mismatch");
  for (int v : mul) require(0 <= v && v < size, Err::BadSpec, "table entry out of range");
  require(0 <= zero && zero < size, Err::BadSpec, "zero out of range");
  require(0 <= one && one < size, Err::BadSpec, "one out of range");
  auto at = [&](int a, int b) { return mul[a * size + b]; };
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      require(at(a, b) == at(b, a), Err::NonCommutative,
              nm(names, a) + "*" + nm(names, b) + " != " + nm(names, b) + "*" + nm(names, a));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        require(at(at(a, b), c) == at(a, at(b, c)), Err::NonAssociative,
                "(" + nm(names, a) + "*" + nm(names, b) + ")*" + nm(names, c) + " != " +
                    nm(names, a) + "*(" + nm(names, b) + "*" + nm(names, c) + ")");
  for (int a = 0; a < size; ++a) {
    require(at(one, a) == a, Err::BadUnit, "1*" + nm(names, a) + " != " + nm(names, a));
    require(at(zero, a) == zero, Err::BadZero, "0*" + nm(names, a) + " != 0");
  }
}

}  // namespace detail

inline MonoidWithZero make_monoid_with_zero(int size, std::vector<int> mul, int zero, int one,
                                            std::vector<std::string> names = {}) {
  detail::check_table_monoid(size, mul, zero, one, names);
  require(size == 1 || zero != one, Err::BadSpec, "zero equals one in a non-trivial monoid");
  return MonoidWithZero{size, std::move(mul), zero, one, std::move(names)};
}

inline BipotentSemiring make_bipotent_semiring(int size, std::vector<int> mul, int zero, int one,
                                               std::vector<int> order,
                                               std::vector<std::string> names = {}) {
  detail::check_table_monoid(size, mul, zero, one, names);
  require(static_cast<int>(order.size()) == size, Err::BadSpec, "order must list every element");
  std::vector<bool> seen(size, false);
  for (int v : order) {
    require(0 <= v && v < size && !seen[v], Err::BadSpec, "order is not a permutation");
    seen[v] = true;
  }
  require(order[0] == zero, Err::OrderIncompatible, "0 must be the bottom of the order");
  std::vector<int> pos(size);
  for (int i = 0; i < size; ++i) pos[order[i]] = i;
  auto at = [&](int a, int b) { return mul[a * size + b]; };
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (pos[a] <= pos[b])
        for (int c = 0; c < size; ++c)
          require(pos[at(a, c)] <= pos[at(b, c)], Err::OrderIncompatible,
                  detail::nm(names, a) + " <= " + detail::nm(names, b) + " but " +
                      detail::nm(names, a) + "*" + detail::nm(names, c) + " > " +
                      detail::nm(names, b) + "*" + detail::nm(names, c));
  return BipotentSemiring{size, std::move(mul), zero, one, std::move(order), std::move(names)};
}

// A finite supertropical monoid: commutative monoid with absorbing 0 and an
// idempotent e such that ex = 0 forces x = 0, together with a total
// multiplication-compatible order on the ghost ideal M = eU.
class SupertropicalMonoid {
 public:
  static MonoidPtr make(MonoidSpec spec, int size_cap = kDefaultSizeCap) {
    require(spec.size <= size_cap, Err::SizeCapExceeded,
            "monoid size " + std::to_string(spec.size) + " exceeds cap " +
                std::to_string(size_cap));
    detail::check_table_monoid(spec.size, spec.mul, spec.zero, spec.one, spec.names);
    require(spec.size >= 2, Err::BadSpec, "a supertropical monoid needs at least 0 and e");
    require(spec.zero != spec.one, Err::BadSpec, "zero equals one");
    require(0 <= spec.e && spec.e < spec.size, Err::BadSpec, "e out of range");
    require(spec.e != spec.zero, Err::BadZero, "e must be nonzero");

    require(spec.names.empty() || static_cast<int>(spec.names.size()) == spec.size,
            Err::BadSpec, "names must cover every element");
    if (!spec.names.empty()) {
      std::set<std::string> uniq(spec.names.begin(), spec.names.end());
      require(static_cast<int>(uniq.size()) == spec.size, Err::BadSpec, "duplicate element name");
    }

    auto m = std::shared_ptr<SupertropicalMonoid>(new SupertropicalMonoid());
    m->size_ = spec.size;
    m->mul_ = std::move(spec.mul);
    m->zero_ = spec.zero;
    m->one_ = spec.one;
    m->e_ = spec.e;
    m->names_ = std::move(spec.names);
    if (m->names_.empty()) {
      m->names_.resize(m->size_);
      for (int x = 0; x < m->size_; ++x) m->names_[x] = "#" + std::to_string(x);
      m->names_[m->zero_] = "0";
      m->names_[m->one_] = "1";
      if (m->e_ != m->one_) m->names_[m->e_] = "e";
    }

    require(m->mul(m->e_, m->e_) == m->e_, Err::ENotIdempotent, "e*e != e");
    for (int x = 0; x < m->size_; ++x)
      require(m->mul(m->e_, x) != m->zero_ || x == m->zero_, Err::GhostKillsTangible,
              "e*" + m->name(x) + " = 0 but " + m->name(x) + " != 0");

    // The ghost ideal is exactly the image of e; the declared order must list it.
    std::set<int> ideal;
    for (int x = 0; x < m->size_; ++x) ideal.insert(m->mul(m->e_, x));
    std::set<int> declared(spec.ghost_order.begin(), spec.ghost_order.end());
    require(declared == ideal, Err::GhostNotClosed,
            "order line must list exactly the ghost ideal eU");
    require(static_cast<int>(spec.ghost_order.size()) == static_cast<int>(ideal.size()),
            Err::BadSpec, "duplicate ghost in order");
    require(spec.ghost_order[0] == m->zero_, Err::OrderIncompatible, "0 must be bottom");

    m->ghost_order_ = spec.ghost_order;
    m->ghost_pos_.assign(m->size_, -1);
    for (size_t i = 0; i < m->ghost_order_.size(); ++i)
      m->ghost_pos_[m->ghost_order_[i]] = static_cast<int>(i);

    // Multiplication must be monotone in each argument on M.
    int k = static_cast<int>(m->ghost_order_.size());
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        int a = m->ghost_order_[i], b = m->ghost_order_[j];
        for (int t = 0; t < k; ++t) {
          int c = m->ghost_order_[t];
          require(m->ghost_pos_[m->mul(a, c)] <= m->ghost_pos_[m->mul(b, c)],
                  Err::OrderIncompatible,
                  m->name(a) + " <= " + m->name(b) + " but " + m->name(a) + "*" + m->name(c) +
                      " > " + m->name(b) + "*" + m->name(c));
        }
      }
    return m;
  }

  int size() const { return size_; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int e() const { return e_; }

  // ghost map nu: x -> ex
  int ghost(int x) const { return mul(e_, x); }
  bool in_ghost_ideal(int x) const { return ghost_pos_[x] >= 0; }
  int ghost_pos(int x) const { return ghost_pos_[x]; }
  bool ghost_le(int a, int b) const { return ghost_pos_[a] <= ghost_pos_[b]; }

  Kind kind(int x) const {
    if (x == zero_) return Kind::Zero;
    return ghost_pos_[x] >= 0 ? Kind::Ghost : Kind::Tangible;
  }
  bool is_tangible(int x) const { return kind(x) == Kind::Tangible; }
  bool is_ghost(int x) const { return kind(x) == Kind::Ghost; }

  const std::vector<int>& ghost_order() const { return ghost_order_; }
  int num_ghosts() const { return static_cast<int>(ghost_order_.size()); }
  bool all_ghost() const { return num_ghosts() == size_; }

  std::vector<int> tangibles() const {
    std::vector<int> out;
    for (int x = 0; x < size_; ++x)
      if (is_tangible(x)) out.push_back(x);
    return out;
  }

  // U_c = { x : ex = c }; c must lie in the ghost ideal.
  std::vector<int> fiber(int c) const {
    require(in_ghost_ideal(c), Err::NotGhost, name(c) + " is not in the ghost ideal");
    std::vector<int> out;
    for (int x = 0; x < size_; ++x)
      if (ghost(x) == c) out.push_back(x);
    return out;
  }

  // Derived addition: the argument with the larger ghost wins; ties go ghost.
  int add(int x, int y) const {
    int gx = ghost(x), gy = ghost(y);
    if (ghost_pos_[gx] > ghost_pos_[gy]) return x;
    if (ghost_pos_[gx] < ghost_pos_[gy]) return y;
    return gx;
  }

  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  int id_of_name(const std::string& s) const {
    for (int x = 0; x < size_; ++x)
      if (names_[x] == s) return x;
    return -1;
  }

  bool same_table(const SupertropicalMonoid& o) const {
    return size_ == o.size_ && mul_ == o.mul_ && zero_ == o.zero_ && one_ == o.one_ &&
           e_ == o.e_ && ghost_order_ == o.ghost_order_;
  }

 private:
  SupertropicalMonoid() = default;
  int size_ = 0;
  std::vector<int> mul_;
  int zero_ = -1, one_ = -1, e_ = -1;
  std::vector<int> ghost_order_;
  std::vector<int> ghost_pos_;
  std::vector<std::string> names_;
};

inline bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

// ---------------------------------------------------------------------------
// Construction of unfolded supertropical monoids from (N, M, rho).
// Element layout of every constructed monoid in this library: 0 first, then
// the remaining ghosts in ascending order, then the tangibles.
// ---------------------------------------------------------------------------

inline MonoidPtr str_construct(const MonoidWithZero& n, const BipotentSemiring& m,
                               const std::vector<int>& rho, int size_cap = kDefaultSizeCap) {
  require(static_cast<int>(rho.size()) == n.size, Err::BadSpec, "rho must be total on N");
  for (int v : rho) require(0 <= v && v < m.size, Err::BadSpec, "rho value out of range");
  require(rho[n.one] == m.one, Err::RhoUnitMismatch, "rho(1_N) != 1_M");
  for (int x = 0; x < n.size; ++x)
    require(rho[x] != m.zero || x == n.zero, Err::RhoKernelTooBig,
            "rho(" + detail::nm(n.names, x) + ") = 0 for nonzero argument");
  for (int x = 0; x < n.size; ++x)
    for (int y = 0; y < n.size; ++y)
      require(rho[n.at(x, y)] == m.at(rho[x], rho[y]), Err::RhoNotMultiplicative,
              "rho(" + detail::nm(n.names, x) + "*" + detail::nm(n.names, y) + ") != rho(" +
                  detail::nm(n.names, x) + ")*rho(" + detail::nm(n.names, y) + ")");

  int ghosts = m.size;                    // includes 0
  int tang = n.size - 1;                  // N minus its zero
  int size = ghosts + tang;
  // id maps: ghost g of M -> position in ascending order; tangible x of N -> ghosts + rank
  std::vector<int> gid(m.size, -1);
  for (int i = 0; i < m.size; ++i) gid[m.order[i]] = i;
  std::vector<int> tid(n.size, -1);
  {
    int next = ghosts;
    for (int x = 0; x < n.size; ++x)
      if (x != n.zero) tid[x] = next++;
  }
  auto uid = [&](bool ghost_side, int x) { return ghost_side ? gid[x] : tid[x]; };

  MonoidSpec spec;
  spec.size = size;
  spec.zero = 0;
  spec.e = gid[m.one];
  spec.one = tid[n.one];
  spec.mul.assign(size * size, 0);
  auto put = [&](int a, int b, int v) { spec.mul[a * size + b] = v; };
  // ghost * ghost
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b) put(gid[a], gid[b], gid[m.at(a, b)]);
  // tangible * tangible: product in N, glued at zero
  for (int x = 0; x < n.size; ++x) {
    if (x == n.zero) continue;
    for (int y = 0; y < n.size; ++y) {
      if (y == n.zero) continue;
      int p = n.at(x, y);
      put(tid[x], tid[y], p == n.zero ? 0 : tid[p]);
    }
  }
  // mixed: through rho
  for (int x = 0; x < n.size; ++x) {
    if (x == n.zero) continue;
    for (int b = 0; b < m.size; ++b) {
      int p = m.at(rho[x], b);
      put(tid[x], gid[b], gid[p]);
      put(gid[b], tid[x], gid[p]);
    }
  }
  spec.ghost_order.resize(m.size);
  for (int i = 0; i < m.size; ++i) spec.ghost_order[i] = i;

  spec.names.assign(size, "");
  for (int a = 0; a < m.size; ++a) spec.names[gid[a]] = detail::nm(m.names, a);
  for (int x = 0; x < n.size; ++x)
    if (x != n.zero) {
      std::string nm = detail::nm(n.names, x);
      // avoid clashing with a ghost of the same name
      for (int a = 0; a < m.size; ++a)
        if (detail::nm(m.names, a) == nm) { nm += "~"; break; }
      spec.names[tid[x]] = nm;
    }
  spec.names[0] = detail::nm(m.names, m.zero);
  (void)uid;
  return SupertropicalMonoid::make(std::move(spec), size_cap);
}

// ---------------------------------------------------------------------------
// Basic structure queries
// ---------------------------------------------------------------------------

// True iff the tangibles plus zero are closed under multiplication.
inline bool is_unfolded(const SupertropicalMonoid& u) {
  for (int x : u.tangibles())
    for (int y : u.tangibles())
      if (u.is_ghost(u.mul(x, y))) return false;
  return true;
}

struct SemiringWitness {
  int z = -1, x = -1, y = -1;  // z*(x+y) != z*x + z*y
};

// Checks distributivity of the derived addition; the other semiring axioms
// hold automatically for the max-style addition.
inline bool is_semiring(const SupertropicalMonoid& u, SemiringWitness* witness = nullptr) {
  for (int z = 0; z < u.size(); ++z)
    for (int x = 0; x < u.size(); ++x)
      for (int y = 0; y < u.size(); ++y) {
        int lhs = u.mul(z, u.add(x, y));
        int rhs = u.add(u.mul(z, x), u.mul(z, y));
        if (lhs != rhs) {
          if (witness) *witness = {z, x, y};
          return false;
        }
      }
  return true;
}

// S(U): tangible x = yz admitting y' in M with y' < ey and y'z = eyz != 0.
inline std::vector<int> tangible_nc_products(const SupertropicalMonoid& u) {
  std::vector<bool> in(u.size(), false);
  for (int y = 0; y < u.size(); ++y)
    for (int z = 0; z < u.size(); ++z) {
      int x = u.mul(y, z);
      if (!u.is_tangible(x)) continue;
      int ey = u.ghost(y);
      int eyz = u.mul(ey, z);
      if (eyz == u.zero()) continue;
      for (int yp : u.ghost_order()) {
        if (!(u.ghost_le(yp, ey) && yp != ey)) continue;  // y' < ey
        if (u.mul(yp, z) == eyz) { in[x] = true; break; }
      }
    }
  std::vector<int> out;
  for (int x = 0; x < u.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

inline bool divides(const SupertropicalMonoid& u, int x, int z) {
  for (int v = 0; v < u.size(); ++v)
    if (u.mul(v, x) == z) return true;
  return false;
}

// [z : x] = { v : vx = z }
inline std::vector<int> quotient_set(const SupertropicalMonoid& u, int z, int x) {
  std::vector<int> out;
  for (int v = 0; v < u.size(); ++v)
    if (u.mul(v, x) == z) out.push_back(v);
  return out;
}

inline bool is_ideal(const SupertropicalMonoid& u, const std::vector<bool>& a) {
  for (int x = 0; x < u.size(); ++x) {
    if (!a[x]) continue;
    for (int y = 0; y < u.size(); ++y)
      if (!a[u.mul(x, y)]) return false;
  }
  return true;
}

// M u US, the smallest ideal containing the ghost ideal and S.
inline std::vector<bool> ideal_generated(const SupertropicalMonoid& u,
                                         const std::vector<int>& s) {
  std::vector<bool> a(u.size(), false);
  for (int g : u.ghost_order()) a[g] = true;
  for (int x : s)
    for (int v = 0; v < u.size(); ++v) a[u.mul(v, x)] = true;
  return a;
}

// The ghost ideal M as a standalone bipotent semiring, with the id map back
// into U (ids[i] is the U-element at M-id i).
inline std::pair<BipotentSemiring, std::vector<int>> ghost_semiring_of(
    const SupertropicalMonoid& u) {
  const auto& order = u.ghost_order();
  int k = static_cast<int>(order.size());
  std::vector<int> pos(u.size(), -1);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  BipotentSemiring m;
  m.size = k;
  m.zero = 0;
  m.one = pos[u.e()];
  m.order.resize(k);
  std::iota(m.order.begin(), m.order.end(), 0);
  m.mul.assign(k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.mul[i * k + j] = pos[u.mul(order[i], order[j])];
  m.names.resize(k);
  for (int i = 0; i < k; ++i) m.names[i] = u.name(order[i]);
  return {std::move(m), order};
}

// The ghost ideal M as an all-ghost supertropical monoid (e = 1), with the
// map from U-ghost ids to its ids.
inline std::pair<MonoidPtr, std::vector<int>> ghost_monoid_of(const SupertropicalMonoid& u) {
  auto [m, ids] = ghost_semiring_of(u);
  MonoidSpec spec;
  spec.size = m.size;
  spec.mul = m.mul;
  spec.zero = m.zero;
  spec.one = m.one;
  spec.e = m.one;
  spec.ghost_order = m.order;
  spec.names = m.names;
  std::vector<int> to_new(u.size(), -1);
  for (int i = 0; i < m.size; ++i) to_new[ids[i]] = i;
  return {SupertropicalMonoid::make(std::move(spec)), std::move(to_new)};
}

}  // namespace supertrop
