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

#include "cooc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <tuple>

#include "cooc/error.hpp"
#include "cooc/random.hpp"
#include "cooc/text.hpp"

namespace cooc {

UndirectedProjection::UndirectedProjection(const CooccurrenceNetwork& network) {
  struct Pair {
    NodeIndex a, b;
    Weight w;
  };
  std::vector<Pair> pairs;
  pairs.reserve(network.edge_count());
  for (NodeIndex u = 0; u < network.node_count(); ++u) {
    auto targets = network.out_neighbors(u);
    auto weights = network.out_weights(u);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const NodeIndex v = targets[i];
      if (u == v) continue;
      pairs.push_back({std::min(u, v), std::max(u, v), weights[i]});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& x, const Pair& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  std::vector<Pair> merged;
  for (const Pair& p : pairs) {
    if (!merged.empty() && merged.back().a == p.a && merged.back().b == p.b) {
      merged.back().w += p.w;
    } else {
      merged.push_back(p);
    }
  }

  const std::size_t n = network.node_count();
  offsets_.assign(n + 1, 0);
  for (const Pair& p : merged) {
    ++offsets_[p.a + 1];
    ++offsets_[p.b + 1];
    max_weight_ = std::max(max_weight_, p.w);
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  neighbors_.resize(merged.size() * 2);
  weights_.resize(merged.size() * 2);
  std::vector<std::size_t> pos(offsets_.begin(), offsets_.end() - 1);
  for (const Pair& p : merged) {
    neighbors_[pos[p.a]] = p.b;
    weights_[pos[p.a]++] = p.w;
    neighbors_[pos[p.b]] = p.a;
    weights_[pos[p.b]++] = p.w;
  }
  // Rows come out unsorted for the `b` side; sort each row by neighbor.
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t lo = offsets_[u];
    const std::size_t hi = offsets_[u + 1];
    std::vector<std::pair<NodeIndex, Weight>> row;
    row.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) row.emplace_back(neighbors_[i], weights_[i]);
    std::sort(row.begin(), row.end());
    for (std::size_t i = lo; i < hi; ++i) {
      neighbors_[i] = row[i - lo].first;
      weights_[i] = row[i - lo].second;
    }
  }
}

std::vector<NodeIndex> Components::members(std::uint32_t component) const {
  std::vector<NodeIndex> out;
  for (NodeIndex u = 0; u < membership.size(); ++u) {
    if (membership[u] == component) out.push_back(u);
  }
  return out;
}

Components components(const CooccurrenceNetwork& network) {
  const std::size_t n = network.node_count();
  std::vector<NodeIndex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeIndex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v : network.out_neighbors(u)) {
      const NodeIndex ru = find(u);
      const NodeIndex rv = find(v);
      if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
  }

  Components c;
  c.membership.assign(n, 0);
  std::vector<std::uint32_t> id_of_root(n, kUnreachable);
  for (NodeIndex u = 0; u < n; ++u) {
    const NodeIndex r = find(u);
    if (id_of_root[r] == kUnreachable) {
      id_of_root[r] = static_cast<std::uint32_t>(c.count++);
      c.node_counts.push_back(0);
      c.edge_counts.push_back(0);
    }
    c.membership[u] = id_of_root[r];
    ++c.node_counts[c.membership[u]];
    c.edge_counts[c.membership[u]] += network.out_neighbors(u).size();
  }
  // Ids follow the smallest node index, and node indices follow WordId, so
  // the lowest id wins the final tie-break.
  for (std::uint32_t id = 1; id < c.count; ++id) {
    const auto key = std::make_pair(c.node_counts[id], c.edge_counts[id]);
    const auto best = std::make_pair(c.node_counts[c.largest], c.edge_counts[c.largest]);
    if (key > best) c.largest = id;
  }
  return c;
}

std::vector<std::uint32_t> bfs_hops(const UndirectedProjection& graph, NodeIndex source) {
  std::vector<std::uint32_t> dist(graph.node_count(), kUnreachable);
  std::vector<NodeIndex> queue;
  queue.reserve(graph.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeIndex u = queue[head];
    for (NodeIndex v : graph.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

double DistanceResult::average_path_length() const {
  if (component.size() < 2) {
    throw UndefinedMeasure("average path length needs at least 2 connected nodes");
  }
  return static_cast<double>(distance_sum) / static_cast<double>(reachable_pairs);
}

std::uint32_t DistanceResult::diameter() const {
  if (component.size() < 2) throw UndefinedMeasure("diameter needs at least 2 connected nodes");
  return eccentricity.empty() ? 0 : *std::max_element(eccentricity.begin(), eccentricity.end());
}

double DistanceResult::max_average_distance() const {
  if (component.size() < 2) {
    throw UndefinedMeasure("average distance needs at least 2 connected nodes");
  }
  return *std::max_element(average_distance.begin(), average_distance.end());
}

DistanceResult distances(const CooccurrenceNetwork& network, const DistanceOptions& options) {
  DistanceResult result;
  const Components comps = components(network);
  if (comps.count == 0) return result;
  result.component = comps.members(comps.largest);
  const std::size_t n = result.component.size();

  if (options.sample_sources > 0 && options.sample_sources < n) {
    result.exact = false;
    Rng rng(options.sample_seed);
    for (std::uint64_t i : rng.sample_sorted(n, options.sample_sources)) {
      result.sources.push_back(result.component[static_cast<std::size_t>(i)]);
    }
  } else {
    result.sources = result.component;
  }

  const UndirectedProjection graph(network);
  const std::size_t s = result.sources.size();
  std::vector<std::uint64_t> sums(s, 0);
  result.eccentricity.assign(s, 0);

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(s, 1))));

  // Each worker owns a contiguous block of sources and writes only its own
  // slots, so the reduction below sees the same values in the same order
  // regardless of the thread count.
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> dist(graph.node_count(), kUnreachable);
    std::vector<NodeIndex> queue;
    queue.reserve(n);
    for (std::size_t k = begin; k < end; ++k) {
      queue.clear();
      queue.push_back(result.sources[k]);
      dist[result.sources[k]] = 0;
      std::uint64_t sum = 0;
      std::uint32_t ecc = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeIndex u = queue[head];
        const std::uint32_t du = dist[u];
        sum += du;
        ecc = std::max(ecc, du);
        for (NodeIndex v : graph.neighbors(u)) {
          if (dist[v] == kUnreachable) {
            dist[v] = du + 1;
            queue.push_back(v);
          }
        }
      }
      for (NodeIndex u : queue) dist[u] = kUnreachable;
      sums[k] = sum;
      result.eccentricity[k] = ecc;
    }
  };

  if (threads == 1) {
    work(0, s);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (s + threads - 1) / threads;
    for (std::size_t begin = 0; begin < s; begin += chunk) {
      pool.emplace_back(work, begin, std::min(s, begin + chunk));
    }
    for (auto& t : pool) t.join();
  }

  result.average_distance.reserve(s);
  for (std::size_t k = 0; k < s; ++k) {
    result.distance_sum += sums[k];
    result.average_distance.push_back(static_cast<double>(sums[k]) / static_cast<double>(n));
  }
  result.reachable_pairs = static_cast<std::uint64_t>(s) * (n - 1);
  return result;
}

double average_path_length(const CooccurrenceNetwork& network, const DistanceOptions& options) {
  return distances(network, options).average_path_length();
}

std::uint32_t diameter(const CooccurrenceNetwork& network, const DistanceOptions& options) {
  return distances(network, options).diameter();
}

namespace {

// Calls visit(u, v, w, w_uv, w_uw, w_vw) once per triangle of the projection.
// Edges are oriented from lower to higher (degree, index) rank, which bounds
// the work by O(m^1.5).
template <typename Visit>
void for_each_triangle(const UndirectedProjection& graph, Visit&& visit) {
  const std::size_t n = graph.node_count();
  auto before = [&](NodeIndex a, NodeIndex b) {
    const std::size_t da = graph.degree(a);
    const std::size_t db = graph.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<Weight> mark(n, 0);
  for (NodeIndex u = 0; u < n; ++u) {
    auto nu = graph.neighbors(u);
    auto wu = graph.weights(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (before(u, nu[i])) mark[nu[i]] = wu[i];
    }
    for (std::size_t i = 0; i < nu.size(); ++i) {
      const NodeIndex v = nu[i];
      if (!before(u, v)) continue;
      auto nv = graph.neighbors(v);
      auto wv = graph.weights(v);
      for (std::size_t j = 0; j < nv.size(); ++j) {
        const NodeIndex w = nv[j];
        if (mark[w] != 0 && before(v, w)) visit(u, v, w, wu[i], mark[w], wv[j]);
      }
    }
    for (NodeIndex v : nu) mark[v] = 0;
  }
}

std::vector<double> clustering_from_sums(const UndirectedProjection& graph,
                                         const std::vector<double>& triangle_sums) {
  std::vector<double> c(graph.node_count(), 0.0);
  for (NodeIndex u = 0; u < graph.node_count(); ++u) {
    const auto k = static_cast<double>(graph.degree(u));
    if (graph.degree(u) >= 2) c[u] = 2.0 * triangle_sums[u] / (k * (k - 1.0));
  }
  return c;
}

NodeIndex require_node(const CooccurrenceNetwork& network, WordId word) {
  auto node = network.node_of(word);
  if (!node) throw NotFound("word id " + std::to_string(word) + " is not a network node");
  return *node;
}

}  // namespace

std::vector<double> clustering_coefficients(const CooccurrenceNetwork& network) {
  const UndirectedProjection graph(network);
  std::vector<double> sums(graph.node_count(), 0.0);
  const auto max_w = static_cast<double>(graph.max_weight());
  for_each_triangle(graph, [&](NodeIndex u, NodeIndex v, NodeIndex w, Weight uv, Weight uw,
                               Weight vw) {
    const double t = std::cbrt(static_cast<double>(uv) * static_cast<double>(uw) *
                               static_cast<double>(vw)) / max_w;
    sums[u] += t;
    sums[v] += t;
    sums[w] += t;
  });
  return clustering_from_sums(graph, sums);
}

std::vector<double> unweighted_clustering_coefficients(const CooccurrenceNetwork& network) {
  const UndirectedProjection graph(network);
  std::vector<double> sums(graph.node_count(), 0.0);
  for_each_triangle(graph, [&](NodeIndex u, NodeIndex v, NodeIndex w, Weight, Weight, Weight) {
    sums[u] += 1.0;
    sums[v] += 1.0;
    sums[w] += 1.0;
  });
  return clustering_from_sums(graph, sums);
}

double clustering_coefficient(const CooccurrenceNetwork& network, WordId word) {
  const NodeIndex node = require_node(network, word);
  return clustering_coefficients(network)[node];
}

namespace {

double average_over_largest(const CooccurrenceNetwork& network, const std::vector<double>& c) {
  if (network.node_count() == 0) throw UndefinedMeasure("clustering of an empty network");
  const Components comps = components(network);
  double sum = 0.0;
  std::size_t count = 0;
  for (NodeIndex u = 0; u < network.node_count(); ++u) {
    if (comps.count > 1 && comps.membership[u] != comps.largest) continue;
    sum += c[u];
    ++count;
  }
  return sum / static_cast<double>(count);
}

}  // namespace

double average_clustering(const CooccurrenceNetwork& network) {
  return average_over_largest(network, clustering_coefficients(network));
}

namespace {

NodeMetrics metrics_for(const CooccurrenceNetwork& network, NodeIndex u, double clustering) {
  NodeMetrics m;
  m.word = network.word(u);
  m.out_degree = network.out_neighbors(u).size();
  m.in_degree = network.in_neighbors(u).size();
  for (Weight w : network.out_weights(u)) m.out_strength += w;
  for (Weight w : network.in_weights(u)) m.in_strength += w;
  if (m.out_degree > 0) {
    m.out_selectivity = static_cast<double>(m.out_strength) / static_cast<double>(m.out_degree);
  }
  if (m.in_degree > 0) {
    m.in_selectivity = static_cast<double>(m.in_strength) / static_cast<double>(m.in_degree);
  }
  m.clustering = clustering;
  return m;
}

}  // namespace

NodeMetrics node_metrics(const CooccurrenceNetwork& network, WordId word) {
  const NodeIndex node = require_node(network, word);
  return metrics_for(network, node, clustering_coefficients(network)[node]);
}

std::vector<NodeMetrics> all_node_metrics(const CooccurrenceNetwork& network) {
  const auto c = clustering_coefficients(network);
  std::vector<NodeMetrics> out;
  out.reserve(network.node_count());
  for (NodeIndex u = 0; u < network.node_count(); ++u) out.push_back(metrics_for(network, u, c[u]));
  return out;
}

NetworkSummary summarize(const CooccurrenceNetwork& network, const DistanceOptions& options) {
  NetworkSummary s;
  s.nodes = network.node_count();
  s.edges = network.edge_count();
  s.total_weight = network.total_weight();
  s.components = components(network).count;

  const DistanceResult d = distances(network, options);
  s.average_path_length = d.average_path_length();
  s.diameter = d.diameter();
  s.max_average_distance = d.max_average_distance();
  s.distance_estimator = d.exact ? "exact" : "sampled";
  s.distance_sources = d.sources.size();

  s.clustering = average_clustering(network);
  s.unweighted_clustering = average_over_largest(network, unweighted_clustering_coefficients(network));
  return s;
}

nlohmann::ordered_json to_json(const NetworkSummary& s) {
  return {{"N", s.nodes},
          {"K", s.edges},
          {"L", s.average_path_length},
          {"D", s.diameter},
          {"C", s.clustering},
          {"omega", s.components},
          {"diagnostics",
           {{"distance_estimator", s.distance_estimator},
            {"distance_sources", s.distance_sources},
            {"max_average_distance", s.max_average_distance},
            {"unweighted_clustering", s.unweighted_clustering},
            {"total_weight", s.total_weight}}}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q.push_back('"');
    q.push_back(c);
  }
  return q + "\"";
}

}  // namespace

std::string node_metrics_csv(const CooccurrenceNetwork& network,
                             const std::vector<NodeMetrics>& metrics) {
  std::string out = "word,k_in,k_out,s_in,s_out,e_in,e_out,c\n";
  for (const NodeMetrics& m : metrics) {
    out += csv_field(network.lexicon().lexeme(m.word));
    out += ',' + std::to_string(m.in_degree) + ',' + std::to_string(m.out_degree) + ',' +
           std::to_string(m.in_strength) + ',' + std::to_string(m.out_strength) + ',';
    if (m.in_selectivity) out += text::format_double(*m.in_selectivity);
    out += ',';
    if (m.out_selectivity) out += text::format_double(*m.out_selectivity);
    out += ',' + text::format_double(m.clustering) + '\n';
  }
  return out;
}

}  // namespace cooc
