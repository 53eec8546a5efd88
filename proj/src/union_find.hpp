#pragma once

#include <numeric>
#include <vector>

namespace hyp::detail {

// Union-find that also tracks a Z/2 offset between each element and its
// root, so identifications can carry an orientation.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    int p = 0;
    return find(x, p);
  }

  // Root of x and the parity of x relative to it.
  int find(int x, int& parity) {
    parity = 0;
    int r = x;
    while (parent_[r] != r) {
      parity ^= parity_[r];
      r = parent_[r];
    }
    // Path compression, fixing parities along the way.
    int acc = parity;
    while (parent_[x] != r) {
      const int next = parent_[x];
      const int own = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= own;
      x = next;
    }
    return r;
  }

  // Records parity(a) ^ parity(b) == rel. Returns false on contradiction.
  bool unite(int a, int b, int rel = 0) {
    int pa = 0, pb = 0;
    const int ra = find(a, pa), rb = find(b, pb);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    return true;
  }

  // Dense 0..k-1 class ids in order of first appearance.
  std::vector<int> classes(int& count) {
    std::vector<int> id(parent_.size(), -1), out(parent_.size());
    count = 0;
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x) {
      const int r = find(x);
      if (id[r] < 0) id[r] = count++;
      out[x] = id[r];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

}  // namespace hyp::detail
