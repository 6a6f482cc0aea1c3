#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace wbirkhoff {

// Streaming pairwise sum. Terms are folded left to right inside fixed blocks,
// and the block partials are merged like a binary counter, so the reduction
// tree depends only on the number of terms. Error grows like log(N).
template <class T>
class PairwiseSum {
 public:
  static constexpr std::size_t kBlock = 64;

  void add(const T& x) {
    block_ += x;
    if (++in_block_ == kBlock) flush();
    ++count_;
  }

  T total() const {
    T acc = block_;
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) acc = it->second + acc;
    return acc;
  }

  std::size_t count() const { return count_; }

 private:
  void flush() {
    T partial = block_;
    int level = 0;
    while (!stack_.empty() && stack_.back().first == level) {
      partial = stack_.back().second + partial;
      stack_.pop_back();
      ++level;
    }
    stack_.emplace_back(level, partial);
    block_ = T{};
    in_block_ = 0;
  }

  T block_{};
  std::size_t in_block_ = 0;
  std::size_t count_ = 0;
  std::vector<std::pair<int, T>> stack_;
};

}  // namespace wbirkhoff
