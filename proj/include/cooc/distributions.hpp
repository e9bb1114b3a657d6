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

// Rank distributions (values sorted descending against rank 1..M) and
// sentence-length histograms, in plot-ready form.

#ifndef COOC_DISTRIBUTIONS_HPP_
#define COOC_DISTRIBUTIONS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/metrics.hpp"

namespace cooc {

struct RankPoint {
  std::size_t rank;
  double value;
  bool operator==(const RankPoint&) const = default;
};

struct RankSeries {
  std::string label;
  std::vector<RankPoint> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

enum class Direction { kIn, kOut };

std::string_view to_string(Direction direction);

// Sorts descending. Equal values keep their input order and receive
// consecutive ranks.
RankSeries rank_series(std::vector<double> values, std::string label);

RankSeries degree_rank(const std::vector<NodeMetrics>& metrics, Direction direction);
RankSeries strength_rank(const std::vector<NodeMetrics>& metrics, Direction direction);
// Nodes without links in `direction` have no selectivity and are left out.
RankSeries selectivity_rank(const std::vector<NodeMetrics>& metrics, Direction direction);

RankSeries degree_rank(const CooccurrenceNetwork& network, Direction direction);
RankSeries strength_rank(const CooccurrenceNetwork& network, Direction direction);
RankSeries selectivity_rank(const CooccurrenceNetwork& network, Direction direction);

// (length, frequency), ascending by length.
std::vector<std::pair<std::size_t, std::size_t>> sentence_length_histogram_series(
    const CorpusStats& stats);

struct DominanceReport {
  std::size_t positions = 0;
  // Share of compared ranks where a > b.
  double dominance = 0.0;
  // |a - b| / a over the compared ranks.
  double max_relative_deviation = 0.0;
  double mean_relative_deviation = 0.0;
};

// Compares ranks 1..ceil(top_fraction * min(|a|, |b|)). Throws InvalidInput
// for an empty series and InvalidParameter unless 0 < top_fraction <= 1.
DominanceReport series_compare(const RankSeries& a, const RankSeries& b, double top_fraction);
// Compares ranks 1..min(max_rank, |a|, |b|).
DominanceReport series_compare_top(const RankSeries& a, const RankSeries& b, std::size_t max_rank);

nlohmann::ordered_json to_json(const DominanceReport& report);

// "rank,value" with a header line.
std::string rank_series_csv(const RankSeries& series);
RankSeries parse_rank_series_csv(std::string_view csv, std::string label);

// Long format with header "corpus_label,series,rank,value".
struct LabelledSeries {
  std::string corpus_label;
  const RankSeries* series;
};
std::string long_format_csv(const std::vector<LabelledSeries>& all);

std::string histogram_csv(const std::vector<std::pair<std::size_t, std::size_t>>& histogram);

}  // namespace cooc

#endif  // COOC_DISTRIBUTIONS_HPP_
