#pragma once

#include <vector>

namespace trisect::detail {

// In-place free reduction with a stack sweep; `cancels(x, y)` is true when y == x^-1.
template <class T, class Cancels>
void free_reduce(std::vector<T>& word, Cancels cancels) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (top > 0 && cancels(word[top - 1], word[i])) {
      --top;
    } else {
      word[top++] = word[i];
    }
  }
  word.resize(top);
}

// Assumes `word` is already freely reduced.
template <class T, class Cancels>
void cyclic_reduce(std::vector<T>& word, Cancels cancels) {
  std::size_t lo = 0;
  std::size_t hi = word.size();
  while (hi - lo >= 2 && cancels(word[hi - 1], word[lo])) {
    ++lo;
    --hi;
  }
  if (lo != 0 || hi != word.size()) {
    word = std::vector<T>(word.begin() + static_cast<std::ptrdiff_t>(lo),
                          word.begin() + static_cast<std::ptrdiff_t>(hi));
  }
}

}  // namespace trisect::detail
