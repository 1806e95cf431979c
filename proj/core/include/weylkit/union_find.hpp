#pragma once

#include <numeric>
#include <vector>

namespace weylkit {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  int component_count() {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      if (find(i) == i) ++count;
    }
    return count;
  }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace weylkit
