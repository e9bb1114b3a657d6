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

#include <cmath>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/distributions.hpp"
#include "cooc/error.hpp"
#include "cooc/network.hpp"
#include "cooc/shuffle.hpp"
#include "doctest.h"
#include "oracle.hpp"

using cooc::Direction;
using cooc::RankPoint;

namespace {

cooc::RankSeries series(std::vector<double> v) { return cooc::rank_series(std::move(v), "s"); }

}  // namespace

TEST_CASE("rank_series") {
  CHECK(series({3, 1, 2}).points == std::vector<RankPoint>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(series({2, 2, 1}).points == std::vector<RankPoint>{{1, 2}, {2, 2}, {3, 1}});
  CHECK(series({}).empty());
}

TEST_CASE("network rank series") {
  SUBCASE("directed 3-cycle") {
    auto net = oracle::to_network({{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}, 3);
    auto s = cooc::degree_rank(net, Direction::kOut);
    CHECK(s.points == std::vector<RankPoint>{{1, 1}, {2, 1}, {3, 1}});
    CHECK(s.label == "out_degree");
  }
  SUBCASE("strength") {
    auto net = oracle::to_network({{0, 1, 3}, {0, 2, 1}, {1, 2, 2}}, 3);
    auto s = cooc::strength_rank(net, Direction::kOut);
    CHECK(s.points == std::vector<RankPoint>{{1, 4}, {2, 2}, {3, 0}});
  }
  SUBCASE("selectivity skips zero-degree nodes") {
    auto net = oracle::to_network({{0, 1, 3}, {0, 2, 1}, {1, 2, 2}}, 3);
    CHECK(cooc::selectivity_rank(net, Direction::kOut).size() == 2);
    CHECK(cooc::selectivity_rank(net, Direction::kIn).size() == 2);
    CHECK(cooc::selectivity_rank(net, Direction::kIn).label == "in_selectivity");
  }
}

TEST_CASE("sentence length histogram series") {
  auto h = cooc::sentence_length_histogram_series(cooc::stats(cooc::ingest("a. b c.")));
  CHECK(h == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}});
  CHECK(cooc::sentence_length_histogram_series(cooc::stats(cooc::Corpus())).empty());
}

TEST_CASE("text-level shuffle keeps the histogram mass") {
  auto c = cooc::ingest("a b c d e f. g h. i. j k l.");
  auto total = [](const cooc::Corpus& x) {
    std::size_t n = 0;
    for (auto [len, f] : cooc::sentence_length_histogram_series(cooc::stats(x))) n += f;
    return n;
  };
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(total(cooc::shuffle_text_level(c, seed)) == total(c));
  }
}

TEST_CASE("series_compare") {
  SUBCASE("full dominance") {
    auto r = cooc::series_compare(series({4, 2}), series({2, 1}), 1.0);
    CHECK(r.dominance == 1.0);
    CHECK(r.positions == 2);
    CHECK(r.max_relative_deviation == 0.5);
  }
  SUBCASE("identical series") {
    auto r = cooc::series_compare(series({4, 2, 1}), series({4, 2, 1}), 1.0);
    CHECK(r.dominance == 0.0);
    CHECK(r.max_relative_deviation == 0.0);
  }
  SUBCASE("half dominance") {
    cooc::RankSeries a{"a", {{1, 4}, {2, 1}}};
    cooc::RankSeries b{"b", {{1, 2}, {2, 2}}};
    auto r = cooc::series_compare(a, b, 1.0);
    CHECK(r.dominance == 0.5);
    CHECK(r.max_relative_deviation == 1.0);
    CHECK(r.mean_relative_deviation == 0.75);
  }
  SUBCASE("top fraction rounds up over the shorter series") {
    auto r = cooc::series_compare(series({9, 8, 7, 6, 5}), series({1, 1, 1, 1, 1, 1, 1}), 0.3);
    CHECK(r.positions == 2);
  }
  SUBCASE("fixed top ranks") {
    auto r = cooc::series_compare_top(series({9, 8, 7}), series({9, 9, 9}), 100);
    CHECK(r.positions == 3);
    CHECK(r.dominance == 0.0);
    CHECK(r.max_relative_deviation == doctest::Approx(2.0 / 7.0));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(cooc::series_compare(series({}), series({1}), 1.0), cooc::InvalidInput);
    CHECK_THROWS_AS(cooc::series_compare(series({1}), series({1}), 0.0), cooc::InvalidParameter);
    CHECK_THROWS_AS(cooc::series_compare(series({1}), series({1}), 1.5), cooc::InvalidParameter);
  }
}

TEST_CASE("rank series csv round trips") {
  auto s = series({5, 2.5, 2.5, 0.125});
  auto parsed = cooc::parse_rank_series_csv(cooc::rank_series_csv(s), "s");
  CHECK(parsed.points == s.points);
  CHECK_THROWS_AS(cooc::parse_rank_series_csv("rank,value\n1,1\n3,1\n", "x"), cooc::InvalidInput);
  CHECK_THROWS_AS(cooc::parse_rank_series_csv("rank,value\n1,1\n2,4\n", "x"), cooc::InvalidInput);
}

TEST_CASE("long format and histogram csv") {
  auto s = series({2, 1});
  s.label = "in_degree";
  CHECK(cooc::long_format_csv({{"original", &s}}) ==
        "corpus_label,series,rank,value\noriginal,in_degree,1,2\noriginal,in_degree,2,1\n");
  CHECK(cooc::histogram_csv({{1, 3}, {4, 1}}) == "length,frequency\n1,3\n4,1\n");
}

TEST_CASE("property: rank series is non-increasing with consecutive ranks") {
  std::mt19937_64 gen(51);
  std::uniform_real_distribution<double> value(0, 10);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> v(static_cast<std::size_t>(i % 17));
    for (auto& x : v) x = std::floor(value(gen));
    auto s = series(v);
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(s.points[k].rank == k + 1);
      if (k) CHECK(s.points[k].value <= s.points[k - 1].value);
    }
  }
}
