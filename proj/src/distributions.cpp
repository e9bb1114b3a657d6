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

#include "cooc/distributions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "cooc/error.hpp"
#include "cooc/text.hpp"

namespace cooc {

std::string_view to_string(Direction direction) {
  return direction == Direction::kIn ? "in" : "out";
}

RankSeries rank_series(std::vector<double> values, std::string label) {
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  RankSeries series{std::move(label), {}};
  series.points.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) series.points.push_back({i + 1, values[i]});
  return series;
}

RankSeries degree_rank(const std::vector<NodeMetrics>& metrics, Direction direction) {
  std::vector<double> values;
  values.reserve(metrics.size());
  for (const auto& m : metrics) {
    values.push_back(static_cast<double>(direction == Direction::kIn ? m.in_degree : m.out_degree));
  }
  return rank_series(std::move(values), std::string(to_string(direction)) + "_degree");
}

RankSeries strength_rank(const std::vector<NodeMetrics>& metrics, Direction direction) {
  std::vector<double> values;
  values.reserve(metrics.size());
  for (const auto& m : metrics) {
    values.push_back(
        static_cast<double>(direction == Direction::kIn ? m.in_strength : m.out_strength));
  }
  return rank_series(std::move(values), std::string(to_string(direction)) + "_strength");
}

RankSeries selectivity_rank(const std::vector<NodeMetrics>& metrics, Direction direction) {
  std::vector<double> values;
  for (const auto& m : metrics) {
    const auto& e = direction == Direction::kIn ? m.in_selectivity : m.out_selectivity;
    if (e) values.push_back(*e);
  }
  return rank_series(std::move(values), std::string(to_string(direction)) + "_selectivity");
}

RankSeries degree_rank(const CooccurrenceNetwork& network, Direction direction) {
  return degree_rank(all_node_metrics(network), direction);
}

RankSeries strength_rank(const CooccurrenceNetwork& network, Direction direction) {
  return strength_rank(all_node_metrics(network), direction);
}

RankSeries selectivity_rank(const CooccurrenceNetwork& network, Direction direction) {
  return selectivity_rank(all_node_metrics(network), direction);
}

std::vector<std::pair<std::size_t, std::size_t>> sentence_length_histogram_series(
    const CorpusStats& stats) {
  return {stats.sentence_length_histogram.begin(), stats.sentence_length_histogram.end()};
}

DominanceReport series_compare_top(const RankSeries& a, const RankSeries& b,
                                   std::size_t max_rank) {
  if (a.empty() || b.empty()) throw InvalidInput("cannot compare an empty rank series");
  const std::size_t m = std::min({max_rank, a.size(), b.size()});
  if (m == 0) throw InvalidParameter("no rank positions to compare");
  DominanceReport r;
  r.positions = m;
  std::size_t wins = 0;
  double dev_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double va = a.points[i].value;
    const double vb = b.points[i].value;
    if (va > vb) ++wins;
    double dev;
    if (va == vb) {
      dev = 0.0;
    } else if (va == 0.0) {
      dev = std::numeric_limits<double>::infinity();
    } else {
      dev = std::abs(va - vb) / std::abs(va);
    }
    r.max_relative_deviation = std::max(r.max_relative_deviation, dev);
    dev_sum += dev;
  }
  r.dominance = static_cast<double>(wins) / static_cast<double>(m);
  r.mean_relative_deviation = dev_sum / static_cast<double>(m);
  return r;
}

DominanceReport series_compare(const RankSeries& a, const RankSeries& b, double top_fraction) {
  if (!(top_fraction > 0.0 && top_fraction <= 1.0)) {
    throw InvalidParameter("top fraction must lie in (0, 1]");
  }
  if (a.empty() || b.empty()) throw InvalidInput("cannot compare an empty rank series");
  const auto shorter = static_cast<double>(std::min(a.size(), b.size()));
  const auto m = static_cast<std::size_t>(std::ceil(top_fraction * shorter));
  return series_compare_top(a, b, std::max<std::size_t>(m, 1));
}

nlohmann::ordered_json to_json(const DominanceReport& r) {
  return {{"positions", r.positions},
          {"dominance", r.dominance},
          {"max_relative_deviation", r.max_relative_deviation},
          {"mean_relative_deviation", r.mean_relative_deviation}};
}

std::string rank_series_csv(const RankSeries& series) {
  std::string out = "rank,value\n";
  for (const auto& p : series.points) {
    out += std::to_string(p.rank) + ',' + text::format_double(p.value) + '\n';
  }
  return out;
}

RankSeries parse_rank_series_csv(std::string_view csv, std::string label) {
  RankSeries series{std::move(label), {}};
  std::size_t line_no = 0;
  for (std::string_view line : text::split(csv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || (line_no == 1 && line == "rank,value")) continue;
    auto fields = text::split(line, ',');
    std::size_t rank = 0;
    double value = 0.0;
    bool ok = fields.size() == 2;
    if (ok) {
      auto r1 = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), rank);
      auto r2 = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), value);
      ok = r1.ec == std::errc() && r2.ec == std::errc() &&
           r1.ptr == fields[0].data() + fields[0].size() &&
           r2.ptr == fields[1].data() + fields[1].size();
    }
    if (!ok || rank != series.points.size() + 1) {
      throw InvalidInput("rank series line " + std::to_string(line_no) + " is malformed");
    }
    if (!series.points.empty() && value > series.points.back().value) {
      throw InvalidInput("rank series line " + std::to_string(line_no) + " increases in value");
    }
    series.points.push_back({rank, value});
  }
  return series;
}

std::string long_format_csv(const std::vector<LabelledSeries>& all) {
  std::string out = "corpus_label,series,rank,value\n";
  for (const auto& [corpus_label, series] : all) {
    for (const auto& p : series->points) {
      out += corpus_label + ',' + series->label + ',' + std::to_string(p.rank) + ',' +
             text::format_double(p.value) + '\n';
    }
  }
  return out;
}

std::string histogram_csv(const std::vector<std::pair<std::size_t, std::size_t>>& histogram) {
  std::string out = "length,frequency\n";
  for (const auto& [length, freq] : histogram) {
    out += std::to_string(length) + ',' + std::to_string(freq) + '\n';
  }
  return out;
}

}  // namespace cooc
