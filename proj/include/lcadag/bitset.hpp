// Copyright 2026 The lcadag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fixed-width bit vectors used for leaf subsets, clusters and vertex sets.
//
// Up to 64 bits live inline; wider sets spill into a heap vector. Every
// instance analyzed by the validation harness fits the inline case, so set
// algebra in the hot loops never allocates.
//
// The tag parameter keeps subsets of a ground set (leaf subsets, members of
// a set system) apart from sets of DAG vertices at compile time.

#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lcadag {

template <typename Tag>
class BasicBitset {
 public:
  static constexpr std::size_t kWordBits = 64;

  BasicBitset() = default;
  explicit BasicBitset(std::size_t size) : size_(size) {
    if (size_ > kWordBits) large_.assign(word_count(), 0);
  }

  // Bit i of `mask` becomes element i. Requires size <= 64.
  static BasicBitset from_mask(std::size_t size, std::uint64_t mask) {
    assert(size <= kWordBits);
    BasicBitset b(size);
    b.small_ = mask & b.tail_mask();
    return b;
  }

  static BasicBitset full(std::size_t size) {
    BasicBitset b(size);
    for (std::size_t w = 0; w < b.word_count(); ++w) b.words()[w] = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words()[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  BasicBitset& set(std::size_t i) {
    assert(i < size_);
    words()[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    return *this;
  }
  BasicBitset& reset(std::size_t i) {
    assert(i < size_);
    words()[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
    return *this;
  }
  void clear() {
    for (std::size_t w = 0; w < word_count(); ++w) words()[w] = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < word_count(); ++w) c += std::popcount(words()[w]);
    return c;
  }
  bool any() const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (words()[w] != 0) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const { return next(0); }
  // Index of the lowest set bit at position >= from, or size().
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from / kWordBits;
    std::uint64_t word = words()[w] & (~std::uint64_t{0} << (from % kWordBits));
    while (true) {
      if (word != 0) return w * kWordBits + std::countr_zero(word);
      if (++w >= word_count()) return size_;
      word = words()[w];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < word_count(); ++w) {
      std::uint64_t word = words()[w];
      while (word != 0) {
        f(w * kWordBits + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(const BasicBitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < word_count(); ++w)
      if ((words()[w] & ~o.words()[w]) != 0) return false;
    return true;
  }
  bool is_proper_subset_of(const BasicBitset& o) const { return is_subset_of(o) && *this != o; }
  bool intersects(const BasicBitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < word_count(); ++w)
      if ((words()[w] & o.words()[w]) != 0) return true;
    return false;
  }

  BasicBitset& operator&=(const BasicBitset& o) {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < word_count(); ++w) words()[w] &= o.words()[w];
    return *this;
  }
  BasicBitset& operator|=(const BasicBitset& o) {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < word_count(); ++w) words()[w] |= o.words()[w];
    return *this;
  }
  // Set difference.
  BasicBitset& operator-=(const BasicBitset& o) {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < word_count(); ++w) words()[w] &= ~o.words()[w];
    return *this;
  }
  friend BasicBitset operator&(BasicBitset a, const BasicBitset& b) { return a &= b; }
  friend BasicBitset operator|(BasicBitset a, const BasicBitset& b) { return a |= b; }
  friend BasicBitset operator-(BasicBitset a, const BasicBitset& b) { return a -= b; }

  // Low 64 bits; exact when size() <= 64.
  std::uint64_t to_mask() const { return words()[0]; }

  std::span<const std::uint64_t> word_span() const { return {words(), word_count()}; }

  friend bool operator==(const BasicBitset& a, const BasicBitset& b) {
    if (a.size_ != b.size_) return false;
    if (a.size_ <= kWordBits) return a.small_ == b.small_;
    return a.large_ == b.large_;
  }

  // Numeric order of the bit vectors read as binary numbers (element 0 is
  // the least significant bit); sets of different width order by width.
  friend std::strong_ordering operator<=>(const BasicBitset& a, const BasicBitset& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t w = a.word_count(); w-- > 0;) {
      if (a.words()[w] != b.words()[w]) return a.words()[w] <=> b.words()[w];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
    for (std::size_t w = 0; w < word_count(); ++w)
      h ^= std::hash<std::uint64_t>{}(words()[w]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t word_count() const { return size_ <= kWordBits ? 1 : (size_ + kWordBits - 1) / kWordBits; }
  std::uint64_t* words() { return size_ <= kWordBits ? &small_ : large_.data(); }
  const std::uint64_t* words() const { return size_ <= kWordBits ? &small_ : large_.data(); }
  std::uint64_t tail_mask() const {
    std::size_t r = size_ % kWordBits;
    return r == 0 ? (size_ == 0 ? 0 : ~std::uint64_t{0}) : (std::uint64_t{1} << r) - 1;
  }
  void trim() { words()[word_count() - 1] &= tail_mask(); }

  std::size_t size_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> large_;
};

struct ElementTag;
struct VertexTag;

// A subset of a ground set: a leaf subset of a DAG, a cluster, or a member of
// a set system. Bit i refers to the i-th element in canonical order.
using Subset = BasicBitset<ElementTag>;
// A set of DAG vertices indexed by vertex id.
using VertexSet = BasicBitset<VertexTag>;

// Ascending cardinality, then ascending numeric value. This is the order in
// which certificates (spanning sets, (a') witnesses) are searched.
struct BySizeThenValue {
  template <typename Tag>
  bool operator()(const BasicBitset<Tag>& a, const BasicBitset<Tag>& b) const {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  }
};

}  // namespace lcadag

template <typename Tag>
struct std::hash<lcadag::BasicBitset<Tag>> {
  std::size_t operator()(const lcadag::BasicBitset<Tag>& b) const { return b.hash(); }
};
