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

#include <filesystem>
#include <string>

#include "cooc/error.hpp"
#include "cooc/report.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

cooc::SummaryRow row(double l, double d, double c) {
  cooc::SummaryRow r;
  r.average_path_length = l;
  r.diameter = d;
  r.clustering = c;
  return r;
}

fs::path scratch(const char* name) {
  auto dir = fs::temp_directory_path() / ("cooc_report_test_" + std::string(name));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const char* kText =
    "the cat sat on the mat. the dog sat on the log. a cat and a dog met. "
    "the mat was red and the log was brown. a bird sat on the dog.";

}  // namespace

TEST_CASE("trend verdicts") {
  SUBCASE("published original against text-level shuffle") {
    auto v = cooc::trend_verdicts(row(3.097, 23, 0.317), row(2.997, 10, 0.354));
    CHECK(v.path_length_decreased);
    CHECK(v.diameter_not_increased);
    CHECK(v.clustering_increased);
    CHECK(v.all());
    CHECK(v.original_l == 3.097);
    CHECK(v.shuffled_d == 10);
  }
  SUBCASE("identical") {
    auto v = cooc::trend_verdicts(row(2, 5, 0.5), row(2, 5, 0.5));
    CHECK_FALSE(v.path_length_decreased);
    CHECK(v.diameter_not_increased);
    CHECK_FALSE(v.clustering_increased);
  }
  SUBCASE("all worse") {
    auto v = cooc::trend_verdicts(row(2, 5, 0.5), row(3, 6, 0.4));
    CHECK_FALSE(v.path_length_decreased);
    CHECK_FALSE(v.diameter_not_increased);
    CHECK_FALSE(v.clustering_increased);
  }
}

TEST_CASE("median row") {
  cooc::NetworkSummary a, b, c;
  a.average_path_length = 3;
  b.average_path_length = 1;
  c.average_path_length = 2;
  a.diameter = 4;
  b.diameter = 6;
  CHECK(cooc::median_row({a, b, c}).average_path_length == 2);
  CHECK(cooc::median_row({a, b}).diameter == 5);
}

TEST_CASE("two-word corpus gives identical summaries") {
  cooc::ExperimentConfig cfg;
  cfg.seeds = {1, 2, 3};
  auto report = cooc::compare_corpus(cooc::ingest("a b."), cfg);
  const auto& o = report.original.summary;
  for (const auto& v : report.shuffled) {
    CHECK(v.summary.nodes == o.nodes);
    CHECK(v.summary.edges == o.edges);
    CHECK(v.summary.average_path_length == o.average_path_length);
    CHECK(v.summary.diameter == o.diameter);
    CHECK(v.summary.clustering == o.clustering);
  }
  CHECK(report.all_preserved());
}

TEST_CASE("compare_corpus writes the expected artifacts") {
  auto dir = scratch("artifacts");
  cooc::ExperimentConfig cfg;
  cfg.seeds = {1, 2};
  cfg.out_dir = dir;
  auto report = cooc::compare_corpus(cooc::ingest(kText), cfg);
  CHECK(report.shuffled.size() == 4);
  CHECK(report.modes.size() == 2);
  CHECK(report.find(cooc::ShuffleMode::kTextLevel) != nullptr);
  CHECK(report.find(cooc::ShuffleMode::kWithinSentence) == nullptr);
  for (const char* f : {"report.json", "report.txt", "summaries/original.json",
                        "summaries/sentence_seed1.json", "networks/text_seed2.edgelist",
                        "series/original_in_selectivity.csv", "series/all_series.csv",
                        "series/original_sentence_lengths.csv"}) {
    CHECK_MESSAGE(fs::exists(dir / f), f);
  }
  auto text = report.to_text();
  for (const char* label : {"N", "K", "L", "D", "C", "omega"}) {
    CHECK(text.find(label) != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("reports are reproducible byte for byte") {
  auto a = scratch("det_a");
  auto b = scratch("det_b");
  cooc::ExperimentConfig cfg;
  cfg.seeds = {4, 5};
  cfg.out_dir = a;
  auto ra = cooc::compare_corpus(cooc::ingest(kText), cfg);
  cfg.out_dir = b;
  auto rb = cooc::compare_corpus(cooc::ingest(kText), cfg);
  CHECK(ra.to_json().dump() == rb.to_json().dump());
  CHECK(cooc::read_file(a / "report.json") == cooc::read_file(b / "report.json"));
  CHECK(cooc::read_file(a / "series/all_series.csv") == cooc::read_file(b / "series/all_series.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("run_experiment tags errors with their stage") {
  cooc::ExperimentConfig cfg;
  SUBCASE("missing input") {
    cfg.inputs = {"/nonexistent/cooc/input.txt"};
    try {
      cooc::run_experiment(cfg);
      FAIL("expected StageError");
    } catch (const cooc::StageError& e) {
      CHECK(e.stage() == "ingest");
    }
  }
  SUBCASE("bad window") {
    cfg.window = 0;
    try {
      cooc::run_experiment(cfg);
      FAIL("expected StageError");
    } catch (const cooc::StageError& e) {
      CHECK(e.stage() == "config");
    }
  }
}

TEST_CASE("ingest_files closes an unterminated file") {
  auto dir = scratch("ingest");
  cooc::write_file(dir / "one.txt", "a b");
  cooc::write_file(dir / "two.txt", "c d.");
  cooc::IngestDiagnostics diag;
  auto c = cooc::ingest_files({dir / "one.txt", dir / "two.txt"}, {}, &diag);
  CHECK(c.sentence_count() == 2);
  CHECK(c.total_words() == 4);
  fs::remove_all(dir);
}
