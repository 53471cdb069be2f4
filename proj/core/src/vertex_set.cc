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

#include "hamverify/vertex_set.h"

#include <algorithm>
#include <string>

#include "hamverify/errors.h"

namespace hamverify {
namespace {

int WordCount(int universe) { return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits; }

}  // namespace

VertexSet::const_iterator::const_iterator(const VertexSet* set, int word_index)
    : set_(set), word_index_(word_index) {
  if (word_index_ < static_cast<int>(set_->words_.size())) {
    current_ = set_->words_[word_index_];
    SkipEmpty();
  }
}

VertexSet::const_iterator& VertexSet::const_iterator::operator++() {
  current_ &= current_ - 1;
  SkipEmpty();
  return *this;
}

void VertexSet::const_iterator::SkipEmpty() {
  const int words = static_cast<int>(set_->words_.size());
  while (current_ == 0 && word_index_ < words) {
    ++word_index_;
    current_ = word_index_ < words ? set_->words_[word_index_] : 0;
  }
}

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw InputError("VertexSet: negative universe");
  words_.assign(WordCount(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) Insert(v);
}

VertexSet VertexSet::Full(int universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (int tail = universe % kWordBits; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

VertexSet VertexSet::FromVector(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.Insert(v);
  return s;
}

int VertexSet::size() const {
  int total = 0;
  for (Word w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::CheckVertex(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                     std::to_string(universe_));
  }
}

void VertexSet::CheckUniverse(const VertexSet& other) const {
  if (universe_ != other.universe_) throw InputError("VertexSet: universe mismatch");
}

bool VertexSet::Contains(Vertex v) const {
  CheckVertex(v);
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1;
}

void VertexSet::Insert(Vertex v) {
  CheckVertex(v);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::Erase(Vertex v) {
  CheckVertex(v);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::Clear() { std::fill(words_.begin(), words_.end(), 0); }

Vertex VertexSet::First() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Vertex>(i) * kWordBits + std::countr_zero(words_[i]);
  }
  return -1;
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool VertexSet::Intersects(const VertexSet& other) const {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  CheckUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::operator~() const { return Full(universe_) - *this; }

std::vector<Vertex> VertexSet::ToVector() const { return std::vector<Vertex>(begin(), end()); }

}  // namespace hamverify
