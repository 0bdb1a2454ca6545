#include "mmtw/vertex_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mmtw {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet::VertexSet(std::span<const int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  if (n <= 0) return s;
  s.words_.assign(static_cast<std::size_t>((n + kWordBits - 1) / kWordBits), ~Word{0});
  const int rem = n % kWordBits;
  if (rem != 0) s.words_.back() = (Word{1} << rem) - 1;
  return s;
}

void VertexSet::insert(int v) {
  const auto w = static_cast<std::size_t>(v) / kWordBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(int v) {
  const auto w = static_cast<std::size_t>(v) / kWordBits;
  if (v < 0 || w >= words_.size()) return;
  words_[w] &= ~(Word{1} << (v % kWordBits));
  trim();
}

int VertexSet::size() const {
  int total = 0;
  for (Word w : words_) total += std::popcount(w);
  return total;
}

int VertexSet::front() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
  }
  return -1;
}

int VertexSet::back() const {
  if (words_.empty()) return -1;
  const auto i = words_.size() - 1;
  return static_cast<int>(i) * kWordBits + (kWordBits - 1 - std::countl_zero(words_[i]));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  trim();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  trim();
  return *this;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string(int offset) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : *this) {
    if (!first) os << ',';
    os << v + offset;
    first = false;
  }
  os << '}';
  return os.str();
}

std::size_t VertexSet::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

void VertexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.to_string(); }

void canonicalize(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace mmtw
