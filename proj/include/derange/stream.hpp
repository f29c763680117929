#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <memory>
#include <ranges>
#include <utility>

#include "derange/word.hpp"

namespace derange {

/// Single-pass, lexicographically ordered stream of words.
///
/// `advance` steps the word to its lexicographic successor and returns false
/// once the last word has been passed; `accept` filters the raw sequence.
/// Each yielded word is wrapped in `T` (constructible from a Word).
template <class T>
class WordStream : public std::ranges::view_interface<WordStream<T>> {
 public:
  using Advance = bool (*)(Word&);
  using Accept = std::function<bool(const Word&)>;

  WordStream() = default;
  WordStream(Word first, Advance advance, Accept accept = {})
      : state_(std::make_shared<State>(State{std::move(first), advance, std::move(accept), false})) {
    if (state_->word.empty()) {
      state_->done = true;
    } else {
      state_->skip_rejected();
    }
  }

 private:
  struct State {
    Word word;
    Advance advance;
    Accept accept;
    bool done;

    void step() {
      if (done) return;
      if (!advance(word)) {
        done = true;
        return;
      }
      skip_rejected();
    }

    void skip_rejected() {
      if (!accept) return;
      while (!done && !accept(word)) {
        if (!advance(word)) done = true;
      }
    }
  };

 public:
  class iterator {
   public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::shared_ptr<typename WordStream::State> state) : state_(std::move(state)) {}

    T operator*() const { return T(state_->word); }
    const Word& word() const { return state_->word; }

    iterator& operator++() {
      state_->step();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.state_ == nullptr || it.state_->done;
    }

   private:
    // shared so that an iterator outlives a temporary stream
    std::shared_ptr<typename WordStream::State> state_;
  };

  iterator begin() { return iterator(state_); }
  std::default_sentinel_t end() const { return {}; }

  /// Drains the stream, returning the number of words it yields.
  std::size_t count() {
    std::size_t total = 0;
    for (auto it = begin(); it != end(); ++it) ++total;
    return total;
  }

 private:
  std::shared_ptr<State> state_;
};

namespace detail {

inline bool next_permutation_word(Word& w) { return std::next_permutation(w.begin(), w.end()); }

/// Odometer over 1 <= f(i) <= i with the last position varying fastest.
inline bool next_subexcedant_word(Word& w) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k] < static_cast<int>(k) + 1) {
      ++w[k];
      return true;
    }
    w[k] = 1;
  }
  return false;
}

}  // namespace detail
}  // namespace derange
