// Copyright 2026 The hamverify Authors
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

#ifndef HAMVERIFY_VERTEX_SET_H_
#define HAMVERIFY_VERTEX_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace hamverify {

using Vertex = int;

// A subset of the vertex universe {0, ..., universe-1}, stored as a packed
// bitset so intersection, union and equality are word-parallel.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, int word_index);

    Vertex operator*() const { return word_index_ * kWordBits + std::countr_zero(current_); }
    const_iterator& operator++();
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.word_index_ == b.word_index_ && a.current_ == b.current_;
    }

   private:
    void SkipEmpty();

    const VertexSet* set_ = nullptr;
    int word_index_ = 0;
    Word current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet Full(int universe);
  static VertexSet FromVector(int universe, std::span<const Vertex> members);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const;

  // Out-of-range vertices are rejected with InputError.
  bool Contains(Vertex v) const;
  void Insert(Vertex v);
  void Erase(Vertex v);
  void Clear();

  // Smallest member, or -1 when empty.
  Vertex First() const;

  bool IsSubsetOf(const VertexSet& other) const;
  bool Intersects(const VertexSet& other) const;

  // Binary operators require equal universes.
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  // Complement relative to the universe.
  VertexSet operator~() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, static_cast<int>(words_.size())); }

  std::vector<Vertex> ToVector() const;
  std::span<const Word> words() const { return words_; }

  // Lowest 64 members as a mask; only meaningful when universe() <= 64.
  Word LowWord() const { return words_.empty() ? 0 : words_[0]; }

 private:
  void CheckUniverse(const VertexSet& other) const;
  void CheckVertex(Vertex v) const;

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace hamverify

#endif  // HAMVERIFY_VERTEX_SET_H_
