// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace mincut {

// Union-find forest with union by size and path halving. Single-writer;
// concurrent mutation is not supported.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n)
      : parent_(n), size_(n, 1), set_count_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Merges the sets of a and b; returns true iff they were distinct.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = static_cast<std::uint32_t>(a);
    size_[a] += size_[b];
    --set_count_;
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  std::size_t set_count() const { return set_count_; }
  std::size_t element_count() const { return parent_.size(); }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t set_count_;
};

}  // namespace mincut
