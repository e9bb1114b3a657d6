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

// Network measures.
//
// Distances and clustering are taken on the undirected projection of the
// directed network: antiparallel links are merged and their weights summed,
// self-loops are dropped. Distances are hop counts.
//
//   d_i = sum_j d_ij / N                  average distance of node i
//   L   = sum_{i != j} d_ij / (N (N-1))   average path length
//   D   = max_{i,j} d_ij                  diameter
//   c_i = 1 / (k_i (k_i - 1)) * sum_{j != k} (w_ij w_ik w_jk)^(1/3)
//         with w normalized by the largest projected weight, 0 if k_i < 2
//   C   = mean of c_i
//
// N in the distance formulas and in C is the node count of the largest
// weakly connected component whenever there is more than one component.
// Strength is the sum of incident directed weights, selectivity is
// strength / degree, both per direction.

#ifndef COOC_METRICS_HPP_
#define COOC_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cooc/network.hpp"

namespace cooc {

class UndirectedProjection {
 public:
  explicit UndirectedProjection(const CooccurrenceNetwork& network);

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  std::size_t degree(NodeIndex u) const { return offsets_[u + 1] - offsets_[u]; }
  std::span<const NodeIndex> neighbors(NodeIndex u) const {
    return {neighbors_.data() + offsets_[u], degree(u)};
  }
  std::span<const Weight> weights(NodeIndex u) const {
    return {weights_.data() + offsets_[u], degree(u)};
  }
  Weight max_weight() const { return max_weight_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeIndex> neighbors_;
  std::vector<Weight> weights_;
  Weight max_weight_ = 0;
};

struct Components {
  std::size_t count = 0;
  // Component id per node. Ids are assigned in order of each component's
  // smallest node index.
  std::vector<std::uint32_t> membership;
  std::vector<std::size_t> node_counts;
  // Directed edges inside each component, self-loops included.
  std::vector<std::size_t> edge_counts;
  // Most nodes, then most edges, then smallest WordId. Meaningless if count == 0.
  std::uint32_t largest = 0;

  std::vector<NodeIndex> members(std::uint32_t component) const;
};

Components components(const CooccurrenceNetwork& network);

struct DistanceOptions {
  // 0 runs a traversal from every node. A positive value smaller than the
  // component size draws that many distinct sources uniformly at random.
  std::size_t sample_sources = 0;
  std::uint64_t sample_seed = 0;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

inline constexpr std::uint32_t kUnreachable = 0xFFFFFFFFu;

// Hop counts from `source`; kUnreachable for nodes in other components.
std::vector<std::uint32_t> bfs_hops(const UndirectedProjection& graph, NodeIndex source);

struct DistanceResult {
  // Nodes of the largest component, ascending.
  std::vector<NodeIndex> component;
  // Traversal sources; all of `component` when exact.
  std::vector<NodeIndex> sources;
  // d_i for each source, same order as `sources`.
  std::vector<double> average_distance;
  std::vector<std::uint32_t> eccentricity;
  std::uint64_t distance_sum = 0;
  // Ordered (source, target) pairs with source != target that were summed.
  std::uint64_t reachable_pairs = 0;
  bool exact = true;

  // Throws UndefinedMeasure when the component has fewer than 2 nodes.
  double average_path_length() const;
  std::uint32_t diameter() const;
  // max_i d_i. Not the diameter; kept as a diagnostic.
  double max_average_distance() const;
};

DistanceResult distances(const CooccurrenceNetwork& network, const DistanceOptions& options = {});

double average_path_length(const CooccurrenceNetwork& network, const DistanceOptions& options = {});
std::uint32_t diameter(const CooccurrenceNetwork& network, const DistanceOptions& options = {});

// c_i for every node, indexed by NodeIndex.
std::vector<double> clustering_coefficients(const CooccurrenceNetwork& network);
// Same, ignoring weights (plain triangle density of the projection).
std::vector<double> unweighted_clustering_coefficients(const CooccurrenceNetwork& network);

// Throws NotFound when the word is not a node.
double clustering_coefficient(const CooccurrenceNetwork& network, WordId word);

// Throws UndefinedMeasure for an empty network.
double average_clustering(const CooccurrenceNetwork& network);

struct NodeMetrics {
  WordId word = 0;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  Weight in_strength = 0;
  Weight out_strength = 0;
  // Empty when the corresponding degree is 0.
  std::optional<double> in_selectivity;
  std::optional<double> out_selectivity;
  double clustering = 0.0;
};

// Throws NotFound when the word is not a node.
NodeMetrics node_metrics(const CooccurrenceNetwork& network, WordId word);
std::vector<NodeMetrics> all_node_metrics(const CooccurrenceNetwork& network);

struct NetworkSummary {
  std::size_t nodes = 0;             // N
  std::size_t edges = 0;             // K
  double average_path_length = 0.0;  // L
  std::uint32_t diameter = 0;        // D
  double clustering = 0.0;           // C
  std::size_t components = 0;        // omega

  // "exact" or "sampled".
  std::string distance_estimator = "exact";
  std::size_t distance_sources = 0;
  double max_average_distance = 0.0;
  double unweighted_clustering = 0.0;
  Weight total_weight = 0;
};

NetworkSummary summarize(const CooccurrenceNetwork& network, const DistanceOptions& options = {});

// {N, K, L, D, C, omega, diagnostics: {...}}
nlohmann::ordered_json to_json(const NetworkSummary& summary);

// Header "word,k_in,k_out,s_in,s_out,e_in,e_out,c"; undefined selectivities
// are left empty.
std::string node_metrics_csv(const CooccurrenceNetwork& network,
                             const std::vector<NodeMetrics>& metrics);

}  // namespace cooc

#endif  // COOC_METRICS_HPP_
