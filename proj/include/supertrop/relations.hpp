#pragma once

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supertrop/monoid.hpp"
#include "supertrop/partition.hpp"
#include "supertrop/transmission.hpp"

namespace supertrop {

// ---------------------------------------------------------------------------
// TE- and MFCE-relations
//
// TE: multiplicative equivalence with ex ~ 0 => x ~ 0.
// MFCE: multiplicative and fiber conserving (x ~ y => ex = ey); classes of
// ghosts are then automatically singletons, so M/E = M.
// ---------------------------------------------------------------------------

struct RelationWitness {
  int x = -1, y = -1, z = -1;
};

inline bool validate_te(const SupertropicalMonoid& u, const Partition& p,
                        RelationWitness* w = nullptr) {
  if (p.size() != u.size()) return false;
  for (auto [x, y] : p.pairs())
    for (int z = 0; z < u.size(); ++z)
      if (!p.same(u.mul(x, z), u.mul(y, z))) {
        if (w) *w = {x, y, z};
        return false;
      }
  for (int x = 0; x < u.size(); ++x)
    if (p.same(u.ghost(x), u.zero()) && !p.same(x, u.zero())) {
      if (w) *w = {x, u.zero(), -1};
      return false;
    }
  return true;
}

inline bool validate_mfce(const SupertropicalMonoid& u, const Partition& p,
                          RelationWitness* w = nullptr) {
  if (p.size() != u.size()) return false;
  for (auto [x, y] : p.pairs()) {
    if (u.ghost(x) != u.ghost(y)) {
      if (w) *w = {x, y, -1};
      return false;
    }
    for (int z = 0; z < u.size(); ++z)
      if (!p.same(u.mul(x, z), u.mul(y, z))) {
        if (w) *w = {x, y, z};
        return false;
      }
  }
  return true;
}

inline Partition diag(const SupertropicalMonoid& u) { return Partition::discrete(u.size()); }

inline Partition relation_of_map(const Transmission& t) {
  return Partition::from_class_ids(t.map);
}

// Finest MFCE containing the seed pairs: close the union under the action of
// every multiplier. Seeds must be fiber compatible.
inline Partition mfce_closure(const SupertropicalMonoid& u,
                              std::vector<std::pair<int, int>> seeds) {
  UnionFind uf(u.size());
  std::deque<std::pair<int, int>> work;
  for (auto [x, y] : seeds) {
    if (u.ghost(x) != u.ghost(y))
      fail(Err::FiberIncompatibleSeed, u.name(x) + " ~ " + u.name(y) + " crosses fibers");
    if (uf.unite(x, y)) work.emplace_back(x, y);
  }
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (int z = 0; z < u.size(); ++z) {
      int a = u.mul(x, z), b = u.mul(y, z);
      if (uf.unite(a, b)) work.emplace_back(a, b);
    }
  }
  return Partition::from_union_find(uf);
}

inline Partition meet(const SupertropicalMonoid&, const Partition& a, const Partition& b) {
  return a.meet(b);
}

// Join of two MFCE-relations: the transitive closure of their union is again
// MFCE, so no multiplicative fixpoint is needed; validation is a safety net.
inline Partition join(const SupertropicalMonoid& u, const Partition& a, const Partition& b) {
  Partition j = a.join_closure(b);
  RelationWitness w;
  if (!validate_mfce(u, j, &w))
    fail(Err::NotMFCE, "join of the given relations is not MFCE near " + u.name(w.x));
  return j;
}

inline bool is_finer(const Partition& a, const Partition& b) { return a.finer_or_equal(b); }

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

struct Quotient {
  Partition relation;
  MonoidPtr monoid;
  Transmission pi;
};

namespace detail {

// Build U/E given any multiplicative equivalence whose ghost classes are
// order-convex. Ghost classes are ordered by their lowest member; the result
// runs through the full validator, which rejects incompatible inputs.
inline Quotient build_quotient(const MonoidPtr& up, const Partition& p) {
  const auto& u = *up;
  auto classes = p.classes();
  int nc = p.num_classes();
  // A class is ghost in the quotient iff it contains a ghost of U (for MFCE
  // relations this is x ~ ex).
  std::vector<int> ghost_min_pos(nc, -1);
  for (int c = 0; c < nc; ++c)
    for (int x : classes[c])
      if (u.in_ghost_ideal(x)) {
        if (ghost_min_pos[c] < 0 || u.ghost_pos(x) < ghost_min_pos[c])
          ghost_min_pos[c] = u.ghost_pos(x);
      }
  std::vector<int> ghost_classes;
  for (int c = 0; c < nc; ++c)
    if (ghost_min_pos[c] >= 0) ghost_classes.push_back(c);
  std::sort(ghost_classes.begin(), ghost_classes.end(),
            [&](int a, int b) { return ghost_min_pos[a] < ghost_min_pos[b]; });

  std::vector<int> new_id(nc, -1);
  int next = 0;
  for (int c : ghost_classes) new_id[c] = next++;
  for (int c = 0; c < nc; ++c)
    if (new_id[c] < 0) new_id[c] = next++;

  // representative of a class: its ghost of lowest position, else lowest member
  std::vector<int> rep(nc, -1);
  for (int c = 0; c < nc; ++c) {
    rep[c] = classes[c][0];
    for (int x : classes[c])
      if (u.in_ghost_ideal(x) &&
          (!u.in_ghost_ideal(rep[c]) || u.ghost_pos(x) < u.ghost_pos(rep[c])))
        rep[c] = x;
  }

  MonoidSpec spec;
  spec.size = nc;
  spec.zero = new_id[p.class_index(u.zero())];
  spec.one = new_id[p.class_index(u.one())];
  spec.e = new_id[p.class_index(u.e())];
  spec.mul.assign(nc * nc, 0);
  for (int c = 0; c < nc; ++c)
    for (int d = 0; d < nc; ++d)
      spec.mul[new_id[c] * nc + new_id[d]] = new_id[p.class_index(u.mul(rep[c], rep[d]))];
  for (int c : ghost_classes) spec.ghost_order.push_back(new_id[c]);
  spec.names.assign(nc, "");
  for (int c = 0; c < nc; ++c) {
    std::string nm = u.name(rep[c]);
    if (classes[c].size() > 1 && !u.in_ghost_ideal(rep[c])) {
      nm.clear();
      for (int x : classes[c]) {
        if (!nm.empty()) nm += "|";
        nm += u.name(x);
      }
    }
    spec.names[new_id[c]] = nm;
  }
  auto q = SupertropicalMonoid::make(std::move(spec), u.size() + 1);
  std::vector<int> map(u.size());
  for (int x = 0; x < u.size(); ++x) map[x] = new_id[p.class_index(x)];
  return {p, q, Transmission{up, q, std::move(map)}};
}

}  // namespace detail

// Quotient by an MFCE-relation. The ghost ideal embeds unchanged.
inline Quotient quotient(const MonoidPtr& up, const Partition& p) {
  RelationWitness w;
  if (!validate_mfce(*up, p, &w))
    fail(Err::NotMFCE, "relation is not MFCE near " + up->name(w.x >= 0 ? w.x : 0));
  auto q = detail::build_quotient(up, p);
  require_transmission(q.pi);
  return q;
}

// Quotient by a TE-relation (ghost classes may merge; they must be
// order-convex, which holds for kernels of transmissions).
inline Quotient quotient_te(const MonoidPtr& up, const Partition& p) {
  RelationWitness w;
  if (!validate_te(*up, p, &w))
    fail(Err::NotTE, "relation is not TE near " + up->name(w.x >= 0 ? w.x : 0));
  auto q = detail::build_quotient(up, p);
  require_transmission(q.pi);
  return q;
}

// The relation F/E induced on U/E by a coarser relation F.
inline Partition induced_relation(const Quotient& q, const Partition& f) {
  if (!q.relation.finer_or_equal(f)) fail(Err::BadSpec, "induced relation needs E inside F");
  std::vector<int> raw(q.monoid->size(), -1);
  for (int x = 0; x < q.pi.source->size(); ++x) raw[q.pi.map[x]] = f.class_index(x);
  return Partition::from_class_ids(raw);
}

// ---------------------------------------------------------------------------
// Ideal compression E(U, A): one class {a} u (A n T)_a per ghost a.
// ---------------------------------------------------------------------------

inline Partition compression_relation(const SupertropicalMonoid& u,
                                      const std::vector<bool>& ideal) {
  require(static_cast<int>(ideal.size()) == u.size(), Err::BadSpec, "ideal mask size");
  for (int g : u.ghost_order())
    require(ideal[g], Err::NotAnIdeal, "ideal must contain the ghost ideal");
  require(is_ideal(u, ideal), Err::NotAnIdeal, "set is not closed under U-multiplication");
  UnionFind uf(u.size());
  for (int x = 0; x < u.size(); ++x)
    if (ideal[x] && u.is_tangible(x)) uf.unite(x, u.ghost(x));
  return Partition::from_union_find(uf);
}

inline std::pair<Partition, Quotient> ideal_compression(const MonoidPtr& up,
                                                        const std::vector<bool>& ideal) {
  Partition p = compression_relation(*up, ideal);
  return {p, quotient(up, p)};
}

// E(U, S) := E(U, M u US) for an arbitrary subset S.
inline Partition compression_of_set(const SupertropicalMonoid& u, const std::vector<int>& s) {
  return compression_relation(u, ideal_generated(u, s));
}

// The supertropical semiring associated to U: compress the ideal generated by
// the tangible NC-products. sigma is the canonical surjection.
inline Quotient hat(const MonoidPtr& up) {
  auto s = tangible_nc_products(*up);
  Partition p = compression_of_set(*up, s);
  Quotient q = quotient(up, p);
  if (!is_semiring(*q.monoid))
    internal_error("compression of the NC-product ideal failed to produce a semiring");
  return q;
}

// ---------------------------------------------------------------------------
// Ghost separating refinement
// ---------------------------------------------------------------------------

// x ~ y survives iff for every z the pair (xz, yz) lies jointly in T u {0},
// in eU, or in [0]_E. The refined relation is again TE and is the coarsest
// ghost separating TE-relation inside E.
inline Partition ghost_separating_refinement(const SupertropicalMonoid& u, const Partition& p) {
  RelationWitness w;
  if (!validate_te(u, p, &w))
    fail(Err::NotTE, "refinement needs a TE-relation; fails near " + u.name(w.x >= 0 ? w.x : 0));
  UnionFind uf(u.size());
  for (auto [x, y] : p.pairs()) {
    bool keep = true;
    for (int z = 0; z < u.size() && keep; ++z) {
      int xz = u.mul(x, z), yz = u.mul(y, z);
      bool both_tang = !u.is_ghost(xz) && !u.is_ghost(yz);
      bool both_ghost = u.in_ghost_ideal(xz) && u.in_ghost_ideal(yz);
      bool zero_class = p.same(xz, u.zero());
      if (!both_tang && !both_ghost && !zero_class) keep = false;
    }
    if (keep) uf.unite(x, y);
  }
  return Partition::from_union_find(uf);
}

// A relation is ghost separating iff no surviving tangible is identified with
// a ghost; for MFCE relations this reads: no tangible x with x ~ ex.
inline bool is_ghost_separating_mfce(const SupertropicalMonoid& u, const Partition& p) {
  for (int x : u.tangibles())
    if (p.same(x, u.ghost(x))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Canonical relations E(nu), its refinement, and E_t
// ---------------------------------------------------------------------------

struct CanonicalRelations {
  Partition e_nu;        // full fibers, the coarsest MFCE
  Partition e_nu_tilde;  // coarsest ghost separating MFCE
  Partition e_t;         // all tangibles merged fiberwise
  bool e_t_multiplicative = false;
};

inline CanonicalRelations canonical_relations(const SupertropicalMonoid& u) {
  CanonicalRelations out;
  std::vector<int> fibers(u.size());
  for (int x = 0; x < u.size(); ++x) fibers[x] = u.ghost(x);
  out.e_nu = Partition::from_class_ids(fibers);

  // same fiber and [M:x] = [M:y]
  UnionFind uf(u.size());
  for (int x = 0; x < u.size(); ++x)
    for (int y = x + 1; y < u.size(); ++y) {
      if (u.ghost(x) != u.ghost(y)) continue;
      bool eq = true;
      for (int z = 0; z < u.size() && eq; ++z)
        if (u.in_ghost_ideal(u.mul(z, x)) != u.in_ghost_ideal(u.mul(z, y))) eq = false;
      if (eq) uf.unite(x, y);
    }
  out.e_nu_tilde = Partition::from_union_find(uf);
  if (out.e_nu_tilde != ghost_separating_refinement(u, out.e_nu))
    internal_error("the divisor-set criterion disagrees with the refinement formula");

  UnionFind et_uf(u.size());
  for (int x : u.tangibles())
    for (int y : u.tangibles())
      if (u.ghost(x) == u.ghost(y)) et_uf.unite(x, y);
  out.e_t = Partition::from_union_find(et_uf);
  out.e_t_multiplicative = validate_mfce(u, out.e_t);
  if (out.e_t_multiplicative && out.e_t != out.e_nu_tilde)
    internal_error("multiplicative E_t must equal the coarsest ghost separating relation");
  return out;
}

// ---------------------------------------------------------------------------
// Classification of MFCE-relations
// ---------------------------------------------------------------------------

struct RelationKind {
  bool is_te = false;
  bool is_mfce = false;
  bool is_ghost_separating = false;  // "tangible"
  bool is_mixing = false;
};

inline RelationKind classify(const SupertropicalMonoid& u, const Partition& p) {
  if (!validate_mfce(u, p)) fail(Err::NotMFCE, "classify expects an MFCE-relation");
  RelationKind k;
  k.is_te = true;
  k.is_mfce = true;
  auto canon = canonical_relations(u);
  k.is_ghost_separating = p.finer_or_equal(canon.e_nu_tilde);
  k.is_mixing = p.meet(canon.e_nu_tilde).is_discrete();
  return k;
}

// Greedy coarsening to a maximal mixing MFCE above E. Mixing relations form a
// lower set, so a fixpoint of one-pair coarsenings is maximal in the lattice.
inline Partition maximal_mixing_above(const MonoidPtr& up, const Partition& start) {
  const auto& u = *up;
  if (!classify(u, start).is_mixing) fail(Err::NotMixing, "starting relation is not mixing");
  Partition cur = start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < u.size() && !grew; ++x)
      for (int y = x + 1; y < u.size() && !grew; ++y) {
        if (cur.same(x, y) || u.ghost(x) != u.ghost(y)) continue;
        auto seeds = cur.pairs();
        seeds.emplace_back(x, y);
        Partition cand = mfce_closure(u, seeds);
        if (classify(u, cand).is_mixing) {
          cur = cand;
          grew = true;
        }
      }
  }
  return cur;
}

}  // namespace supertrop
