#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "congrlab/algebra.hpp"

namespace congrlab {

/// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when x and y were already together.
  bool unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (size_[x] < size_[y]) {
      std::swap(x, y);
    }
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  [[nodiscard]] std::size_t size() const { return parent_.size(); }

  Partition to_partition() {
    std::vector<std::size_t> roots(parent_.size());
    for (std::size_t e = 0; e < parent_.size(); ++e) {
      roots[e] = find(static_cast<Element>(e));
    }
    return Partition::from_class_ids(roots);
  }

 private:
  std::vector<Element> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace congrlab
