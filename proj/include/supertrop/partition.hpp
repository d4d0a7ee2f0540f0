#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "supertrop/base.hpp"

namespace supertrop {

// Union-find over 0..n-1 with path compression.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true if the two elements were in distinct classes.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  mutable std::vector<int> parent_;
};

// A partition of {0..n-1} in canonical form: classes are numbered by first
// occurrence (a restricted growth string), so equal partitions compare
// bit-exactly and classes come out sorted by least member.
class Partition {
 public:
  Partition() = default;

  static Partition discrete(int n) {
    Partition p;
    p.cls_.resize(n);
    std::iota(p.cls_.begin(), p.cls_.end(), 0);
    p.num_classes_ = n;
    return p;
  }

  static Partition from_union_find(const UnionFind& uf) {
    Partition p;
    int n = uf.size();
    p.cls_.assign(n, -1);
    std::vector<int> idx_of_root(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
      int r = uf.find(x);
      if (idx_of_root[r] < 0) idx_of_root[r] = next++;
      p.cls_[x] = idx_of_root[r];
    }
    p.num_classes_ = next;
    return p;
  }

  static Partition from_class_ids(const std::vector<int>& raw) {
    // Renumber arbitrary class labels into restricted-growth form.
    Partition p;
    int n = static_cast<int>(raw.size());
    p.cls_.assign(n, -1);
    std::vector<int> relabel;
    std::vector<int> seen_label;
    for (int x = 0; x < n; ++x) {
      int lab = raw[x];
      int idx = -1;
      for (size_t i = 0; i < seen_label.size(); ++i)
        if (seen_label[i] == lab) { idx = static_cast<int>(i); break; }
      if (idx < 0) {
        idx = static_cast<int>(seen_label.size());
        seen_label.push_back(lab);
      }
      p.cls_[x] = idx;
    }
    p.num_classes_ = static_cast<int>(seen_label.size());
    return p;
  }

  static Partition from_classes(int n, const std::vector<std::vector<int>>& classes) {
    UnionFind uf(n);
    for (const auto& c : classes)
      for (size_t i = 1; i < c.size(); ++i) uf.unite(c[0], c[i]);
    return from_union_find(uf);
  }

  int size() const { return static_cast<int>(cls_.size()); }
  int num_classes() const { return num_classes_; }
  int class_index(int x) const { return cls_[x]; }
  bool same(int a, int b) const { return cls_[a] == cls_[b]; }
  bool is_discrete() const { return num_classes_ == size(); }

  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out(num_classes_);
    for (int x = 0; x < size(); ++x) out[cls_[x]].push_back(x);
    return out;
  }

  // Every class of *this lies inside a class of other.
  bool finer_or_equal(const Partition& other) const {
    for (int x = 0; x < size(); ++x)
      for (int y = x + 1; y < size(); ++y)
        if (same(x, y) && !other.same(x, y)) return false;
    return true;
  }

  // Classwise intersection.
  Partition meet(const Partition& other) const {
    std::vector<int> raw(size());
    for (int x = 0; x < size(); ++x) raw[x] = cls_[x] * other.num_classes() + other.cls_[x];
    return from_class_ids(raw);
  }

  // Transitive closure of the union of the two relations.
  Partition join_closure(const Partition& other) const {
    UnionFind uf(size());
    for (int x = 0; x < size(); ++x)
      for (int y = x + 1; y < size(); ++y)
        if (same(x, y) || other.same(x, y)) uf.unite(x, y);
    return from_union_find(uf);
  }

  // All unordered pairs (x, y), x < y, identified by the partition.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
      for (int y = x + 1; y < size(); ++y)
        if (same(x, y)) out.emplace_back(x, y);
    return out;
  }

  bool operator==(const Partition& other) const { return cls_ == other.cls_; }
  bool operator!=(const Partition& other) const { return cls_ != other.cls_; }

  const std::vector<int>& class_ids() const { return cls_; }

 private:
  std::vector<int> cls_;
  int num_classes_ = 0;
};

}  // namespace supertrop
