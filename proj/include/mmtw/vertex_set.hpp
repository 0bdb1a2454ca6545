#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mmtw {

/// A set of vertex ids stored as a bitset.
///
/// Storage is a small inline buffer of 64-bit words with heap fallback, so sets
/// over a few hundred vertices stay cheap. Trailing zero words are never kept:
/// two sets are equal iff their word sequences are equal, and `operator<=>`
/// orders sets by the numeric value of the bitset. That order is the canonical
/// edge order used throughout the library.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    int operator*() const { return index_ * kWordBits + std::countr_zero(bits_); }
    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      advance();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.index_ == b.index_ && a.bits_ == b.bits_;
    }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* set, std::size_t index) : set_(set), index_(index) {
      if (index_ < set_->words_.size()) bits_ = set_->words_[index_];
      advance();
    }
    void advance() {
      while (bits_ == 0 && set_ != nullptr && index_ < set_->words_.size()) {
        ++index_;
        bits_ = index_ < set_->words_.size() ? set_->words_[index_] : 0;
      }
    }
    const VertexSet* set_ = nullptr;
    std::size_t index_ = 0;
    Word bits_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices);
  explicit VertexSet(std::span<const int> vertices);

  /// {0, 1, ..., n-1}
  static VertexSet range(int n);

  bool contains(int v) const {
    const auto w = static_cast<std::size_t>(v) / kWordBits;
    return v >= 0 && w < words_.size() && ((words_[w] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(int v);
  void erase(int v);

  bool empty() const { return words_.empty(); }
  int size() const;
  /// Smallest element, or -1 when empty.
  int front() const;
  /// Largest element, or -1 when empty.
  int back() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet with(int v) const {
    VertexSet copy = *this;
    copy.insert(v);
    return copy;
  }
  VertexSet without(int v) const {
    VertexSet copy = *this;
    copy.erase(v);
    return copy;
  }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, words_.size()); }

  std::vector<int> to_vector() const;
  /// "{1,3,4}" with the given id offset applied (1 for file-style ids).
  std::string to_string(int offset = 0) const;

  std::size_t hash() const;
  std::span<const Word> words() const { return {words_.data(), words_.size()}; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.words_ == b.words_; }
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  void trim();
  boost::container::small_vector<Word, 2> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Sorts and removes duplicates, yielding the canonical family order.
void canonicalize(std::vector<VertexSet>& family);

}  // namespace mmtw
