#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace pglsym {

class UnionFind {
public:
  explicit UnionFind(std::size_t size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (rank_[a] < rank_[b])
      std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b])
      ++rank_[a];
    return true;
  }

  std::size_t size() const noexcept { return parent_.size(); }

  // Dense labels 0..k-1 ordered by the smallest member of each class.
  std::vector<std::size_t> labels(std::size_t *count = nullptr) {
    std::vector<std::size_t> root_label(parent_.size(), SIZE_MAX);
    std::vector<std::size_t> out(parent_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      auto r = find(i);
      if (root_label[r] == SIZE_MAX)
        root_label[r] = next++;
      out[i] = root_label[r];
    }
    if (count)
      *count = next;
    return out;
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

} // namespace pglsym
