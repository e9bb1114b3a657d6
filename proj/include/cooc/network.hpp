// Copyright 2026 The cooc Authors.
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

// Directed weighted co-occurrence network.
//
// Nodes are the words that take part in at least one link; node indices are
// dense and ordered by WordId. Edges are stored twice in compressed sparse
// row form (by source and by target), each row sorted by neighbor index.

#ifndef COOC_NETWORK_HPP_
#define COOC_NETWORK_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cooc/corpus.hpp"

namespace cooc {

using NodeIndex = std::uint32_t;
using Weight = std::uint64_t;

struct Edge {
  WordId source;
  WordId target;
  Weight weight;
  bool operator==(const Edge&) const = default;
};

class CooccurrenceNetwork {
 public:
  struct Adjacent {
    NodeIndex node;
    Weight weight;
  };

  CooccurrenceNetwork() : lexicon_(std::make_shared<const Lexicon>()) {}

  // Merges duplicate (source, target) pairs by summing their weights. Zero
  // weights and ids outside the lexicon are rejected.
  static CooccurrenceNetwork from_edges(std::shared_ptr<const Lexicon> lexicon, int window,
                                        std::vector<Edge> edges);

  std::size_t node_count() const { return words_.size(); }
  std::size_t edge_count() const { return out_targets_.size(); }
  int window() const { return window_; }
  Weight total_weight() const { return total_weight_; }
  Weight max_weight() const { return max_weight_; }
  const Lexicon& lexicon() const { return *lexicon_; }
  std::shared_ptr<const Lexicon> shared_lexicon() const { return lexicon_; }

  WordId word(NodeIndex node) const { return words_[node]; }
  const std::vector<WordId>& words() const { return words_; }
  std::optional<NodeIndex> node_of(WordId word) const;
  std::optional<NodeIndex> node_of(std::string_view lexeme) const;

  std::span<const NodeIndex> out_neighbors(NodeIndex u) const {
    return row(out_offsets_, out_targets_, u);
  }
  std::span<const Weight> out_weights(NodeIndex u) const {
    return row(out_offsets_, out_weights_, u);
  }
  std::span<const NodeIndex> in_neighbors(NodeIndex u) const {
    return row(in_offsets_, in_sources_, u);
  }
  std::span<const Weight> in_weights(NodeIndex u) const {
    return row(in_offsets_, in_weights_, u);
  }

  // Weight of u -> v, 0 if absent.
  Weight weight(NodeIndex u, NodeIndex v) const;

  // Edges in (source node, target node) order.
  std::vector<Edge> edges() const;

 private:
  template <typename T>
  static std::span<const T> row(const std::vector<std::size_t>& offsets,
                                const std::vector<T>& values, NodeIndex u) {
    return {values.data() + offsets[u], offsets[u + 1] - offsets[u]};
  }

  std::shared_ptr<const Lexicon> lexicon_;
  int window_ = 1;
  std::vector<WordId> words_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeIndex> out_targets_;
  std::vector<Weight> out_weights_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeIndex> in_sources_;
  std::vector<Weight> in_weights_;
  Weight total_weight_ = 0;
  Weight max_weight_ = 0;
};

// Links each word to the next `window` words of the same sentence; every
// pair occurrence adds 1 to the link weight. Throws InvalidParameter for
// window < 1.
CooccurrenceNetwork build_network(const Corpus& corpus, int window = 1);

// "source<TAB>target<TAB>weight\n" per edge, sorted by (source, target)
// lexeme byte order.
std::string export_edge_list(const CooccurrenceNetwork& network);

// Inverse of export_edge_list(); the lexicon is rebuilt from the lexemes.
CooccurrenceNetwork parse_edge_list(std::string_view text, int window = 1);

// Graphviz rendering; edges with weight > 1 are labelled.
std::string export_dot(const CooccurrenceNetwork& network);

}  // namespace cooc

#endif  // COOC_NETWORK_HPP_
