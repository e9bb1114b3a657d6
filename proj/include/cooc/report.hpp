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

// End-to-end comparison of a corpus against its shuffled counterparts.
//
// For every shuffle mode and seed the pipeline builds the shuffled corpus,
// checks what the shuffle must preserve, builds the network, and measures it.
// Per-mode results are aggregated by the median over seeds and compared with
// the original: summary trends (L down, D not up, C up), selectivity
// dominance over the top ranks, and degree/strength rank-curve deviation.

#ifndef COOC_REPORT_HPP_
#define COOC_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/distributions.hpp"
#include "cooc/metrics.hpp"
#include "cooc/shuffle.hpp"

namespace cooc {

struct ExperimentConfig {
  std::vector<std::filesystem::path> inputs;
  TokenizeConfig tokenize;
  int window = 1;
  std::vector<std::uint64_t> seeds{1};
  std::vector<ShuffleMode> modes{ShuffleMode::kSentenceLevel, ShuffleMode::kTextLevel};
  DistanceOptions distance;
  // Share of top ranks used for selectivity dominance.
  double selectivity_top_fraction = 0.1;
  // Number of top ranks used for degree/strength deviation.
  std::size_t preservation_top_ranks = 100;
  // Nothing is written when empty.
  std::filesystem::path out_dir;

  // Throws InvalidParameter.
  void validate() const;
};

// One Table 1 column. Integer measures become doubles so that medians over
// an even number of seeds stay exact.
struct SummaryRow {
  double nodes = 0, edges = 0, average_path_length = 0, diameter = 0, clustering = 0,
         components = 0;

  static SummaryRow from(const NetworkSummary& s);
};

SummaryRow median_row(const std::vector<NetworkSummary>& summaries);

struct TrendVerdicts {
  bool path_length_decreased = false;  // L_shuffled < L_original
  bool diameter_not_increased = false;  // D_shuffled <= D_original
  bool clustering_increased = false;  // C_shuffled > C_original
  double original_l = 0, shuffled_l = 0;
  double original_d = 0, shuffled_d = 0;
  double original_c = 0, shuffled_c = 0;

  bool all() const { return path_length_decreased && diameter_not_increased && clustering_increased; }
};

TrendVerdicts trend_verdicts(const SummaryRow& original, const SummaryRow& shuffled);
TrendVerdicts trend_verdicts(const NetworkSummary& original, const NetworkSummary& shuffled);

// The six per-node rank series of one network, keyed by series label
// ("in_degree", "out_strength", ...).
using SeriesSet = std::map<std::string, RankSeries>;
SeriesSet node_series(const std::vector<NodeMetrics>& metrics);

struct VariantResult {
  std::string name;
  std::optional<ShuffleMode> mode;
  std::optional<std::uint64_t> seed;
  CorpusStats corpus_stats;
  NetworkSummary summary;
  std::optional<PreservationReport> preservation;
  SeriesSet series;
};

struct SeriesComparison {
  std::string series;
  std::vector<DominanceReport> per_seed;
  double median_dominance = 0;
  double median_max_deviation = 0;
  double median_mean_deviation = 0;
};

struct ModeComparison {
  ShuffleMode mode;
  SummaryRow median;
  TrendVerdicts verdicts;
  std::vector<TrendVerdicts> per_seed_verdicts;
  // Over the top selectivity_top_fraction of ranks.
  SeriesComparison in_selectivity, out_selectivity;
  // Over the top preservation_top_ranks ranks.
  SeriesComparison in_degree, out_degree, in_strength, out_strength;
};

struct ComparisonReport {
  ExperimentConfig config;
  IngestDiagnostics ingest;
  VariantResult original;
  std::vector<VariantResult> shuffled;
  std::vector<ModeComparison> modes;

  bool all_preserved() const;
  const ModeComparison* find(ShuffleMode mode) const;

  nlohmann::ordered_json to_json() const;
  // Table 1 layout: rows N, K, L, D, C, omega; one column per variant group.
  std::string to_text() const;
};

// Reads and concatenates config.inputs, then runs compare_corpus(). Errors are
// rethrown as StageError tagged with the failing stage.
ComparisonReport run_experiment(const ExperimentConfig& config);

// Same pipeline on an already ingested corpus. When config.out_dir is set,
// writes report.json, report.txt, summaries/<variant>.json,
// series/<variant>_<series>.csv, series/all_series.csv and
// networks/<variant>.edgelist.
ComparisonReport compare_corpus(const Corpus& corpus, const ExperimentConfig& config,
                                const IngestDiagnostics& ingest = {});

// Tokenizes each file, closes any unterminated final sentence, and joins the
// results into one corpus.
Corpus ingest_files(const std::vector<std::filesystem::path>& paths, const TokenizeConfig& config,
                    IngestDiagnostics* diagnostics = nullptr);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace cooc

#endif  // COOC_REPORT_HPP_
