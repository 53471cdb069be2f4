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

#ifndef HAMVERIFY_GRAPH_SOURCE_H_
#define HAMVERIFY_GRAPH_SOURCE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamverify/graph.h"

namespace hamverify {

// Single-producer stream of graphs. Implementations are not thread-safe;
// the scanner serializes calls to Next().
class GraphSource {
 public:
  virtual ~GraphSource() = default;

  // nullopt once exhausted.
  virtual std::optional<Graph> Next() = 0;
  virtual std::string Describe() const = 0;
};

class VectorSource : public GraphSource {
 public:
  explicit VectorSource(std::vector<Graph> graphs, std::string description = "in-memory")
      : graphs_(std::move(graphs)), description_(std::move(description)) {}

  std::optional<Graph> Next() override {
    if (next_ >= graphs_.size()) return std::nullopt;
    return graphs_[next_++];
  }
  std::string Describe() const override { return description_; }

 private:
  std::vector<Graph> graphs_;
  std::string description_;
  std::size_t next_ = 0;
};

}  // namespace hamverify

#endif  // HAMVERIFY_GRAPH_SOURCE_H_
