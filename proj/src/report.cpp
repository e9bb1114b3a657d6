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

#include "cooc/report.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "cooc/error.hpp"
#include "cooc/network.hpp"
#include "cooc/text.hpp"

namespace cooc {

namespace fs = std::filesystem;

void ExperimentConfig::validate() const {
  if (window < 1) throw InvalidParameter("window must be at least 1");
  if (seeds.empty()) throw InvalidParameter("at least one shuffle seed is required");
  if (!(selectivity_top_fraction > 0.0 && selectivity_top_fraction <= 1.0)) {
    throw InvalidParameter("selectivity top fraction must lie in (0, 1]");
  }
  if (preservation_top_ranks == 0) throw InvalidParameter("preservation rank count must be positive");
}

SummaryRow SummaryRow::from(const NetworkSummary& s) {
  return {static_cast<double>(s.nodes),    static_cast<double>(s.edges),
          s.average_path_length,           static_cast<double>(s.diameter),
          s.clustering,                    static_cast<double>(s.components)};
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

template <typename T, typename F>
double median_of(const std::vector<T>& items, F field) {
  std::vector<double> v;
  v.reserve(items.size());
  for (const auto& item : items) v.push_back(field(item));
  return median(std::move(v));
}

}  // namespace

SummaryRow median_row(const std::vector<NetworkSummary>& summaries) {
  std::vector<SummaryRow> rows;
  for (const auto& s : summaries) rows.push_back(SummaryRow::from(s));
  return {median_of(rows, [](const SummaryRow& r) { return r.nodes; }),
          median_of(rows, [](const SummaryRow& r) { return r.edges; }),
          median_of(rows, [](const SummaryRow& r) { return r.average_path_length; }),
          median_of(rows, [](const SummaryRow& r) { return r.diameter; }),
          median_of(rows, [](const SummaryRow& r) { return r.clustering; }),
          median_of(rows, [](const SummaryRow& r) { return r.components; })};
}

TrendVerdicts trend_verdicts(const SummaryRow& original, const SummaryRow& shuffled) {
  TrendVerdicts v;
  v.original_l = original.average_path_length;
  v.shuffled_l = shuffled.average_path_length;
  v.original_d = original.diameter;
  v.shuffled_d = shuffled.diameter;
  v.original_c = original.clustering;
  v.shuffled_c = shuffled.clustering;
  v.path_length_decreased = v.shuffled_l < v.original_l;
  v.diameter_not_increased = v.shuffled_d <= v.original_d;
  v.clustering_increased = v.shuffled_c > v.original_c;
  return v;
}

TrendVerdicts trend_verdicts(const NetworkSummary& original, const NetworkSummary& shuffled) {
  return trend_verdicts(SummaryRow::from(original), SummaryRow::from(shuffled));
}

SeriesSet node_series(const std::vector<NodeMetrics>& metrics) {
  SeriesSet set;
  for (Direction d : {Direction::kIn, Direction::kOut}) {
    for (RankSeries s : {degree_rank(metrics, d), strength_rank(metrics, d),
                         selectivity_rank(metrics, d)}) {
      std::string label = s.label;
      set.emplace(std::move(label), std::move(s));
    }
  }
  return set;
}

bool ComparisonReport::all_preserved() const {
  return std::all_of(shuffled.begin(), shuffled.end(), [](const VariantResult& v) {
    return v.preservation && v.preservation->all_passed();
  });
}

const ModeComparison* ComparisonReport::find(ShuffleMode mode) const {
  for (const auto& m : modes) {
    if (m.mode == mode) return &m;
  }
  return nullptr;
}

namespace {

nlohmann::ordered_json row_json(const SummaryRow& r) {
  return {{"N", r.nodes}, {"K", r.edges}, {"L", r.average_path_length},
          {"D", r.diameter}, {"C", r.clustering}, {"omega", r.components}};
}

nlohmann::ordered_json verdict_json(const TrendVerdicts& v) {
  return {{"L_decreased", {{"holds", v.path_length_decreased},
                           {"original", v.original_l}, {"shuffled", v.shuffled_l}}},
          {"D_not_increased", {{"holds", v.diameter_not_increased},
                               {"original", v.original_d}, {"shuffled", v.shuffled_d}}},
          {"C_increased", {{"holds", v.clustering_increased},
                           {"original", v.original_c}, {"shuffled", v.shuffled_c}}}};
}

nlohmann::ordered_json series_comparison_json(const SeriesComparison& c) {
  nlohmann::ordered_json per_seed = nlohmann::ordered_json::array();
  for (const auto& r : c.per_seed) per_seed.push_back(to_json(r));
  return {{"series", c.series},
          {"median_dominance", c.median_dominance},
          {"median_max_relative_deviation", c.median_max_deviation},
          {"median_mean_relative_deviation", c.median_mean_deviation},
          {"per_seed", per_seed}};
}

nlohmann::ordered_json variant_json(const VariantResult& v) {
  nlohmann::ordered_json j = {{"name", v.name}};
  j["mode"] = v.mode ? nlohmann::ordered_json(std::string(to_string(*v.mode))) : nullptr;
  j["seed"] = v.seed ? nlohmann::ordered_json(*v.seed) : nullptr;
  j["corpus"] = to_json(v.corpus_stats);
  j["summary"] = to_json(v.summary);
  if (v.preservation) j["preservation"] = to_json(*v.preservation);
  return j;
}

}  // namespace

nlohmann::ordered_json ComparisonReport::to_json() const {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
  for (const auto& p : config.inputs) inputs.push_back(p.filename().string());
  nlohmann::ordered_json modes_cfg = nlohmann::ordered_json::array();
  for (ShuffleMode m : config.modes) modes_cfg.push_back(std::string(to_string(m)));

  nlohmann::ordered_json j;
  j["config"] = {{"inputs", inputs},
                 {"delimiters", text::encode_utf8(config.tokenize.delimiters)},
                 {"case_fold", config.tokenize.case_fold},
                 {"window", config.window},
                 {"seeds", config.seeds},
                 {"modes", modes_cfg},
                 {"sample_sources", config.distance.sample_sources},
                 {"sample_seed", config.distance.sample_seed},
                 {"selectivity_top_fraction", config.selectivity_top_fraction},
                 {"preservation_top_ranks", config.preservation_top_ranks}};
  j["ingest"] = cooc::to_json(ingest);
  j["original"] = variant_json(original);

  nlohmann::ordered_json cmp = nlohmann::ordered_json::array();
  for (const auto& m : modes) {
    nlohmann::ordered_json per_seed = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.per_seed_verdicts.size(); ++i) {
      per_seed.push_back({{"seed", config.seeds[i]}, {"verdicts", verdict_json(m.per_seed_verdicts[i])}});
    }
    cmp.push_back({{"mode", std::string(to_string(m.mode))},
                   {"median", row_json(m.median)},
                   {"verdicts", verdict_json(m.verdicts)},
                   {"per_seed_verdicts", per_seed},
                   {"selectivity", {{"in", series_comparison_json(m.in_selectivity)},
                                    {"out", series_comparison_json(m.out_selectivity)}}},
                   {"degree", {{"in", series_comparison_json(m.in_degree)},
                               {"out", series_comparison_json(m.out_degree)}}},
                   {"strength", {{"in", series_comparison_json(m.in_strength)},
                                 {"out", series_comparison_json(m.out_strength)}}}});
  }
  j["comparisons"] = cmp;

  nlohmann::ordered_json variants = nlohmann::ordered_json::array();
  for (const auto& v : shuffled) variants.push_back(variant_json(v));
  j["variants"] = variants;
  j["all_preserved"] = all_preserved();
  return j;
}

std::string ComparisonReport::to_text() const {
  std::ostringstream out;
  auto num = [](double v, int precision) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << v;
    return s.str();
  };
  auto yes = [](bool b) { return b ? "yes" : "no"; };

  std::vector<std::pair<std::string, SummaryRow>> columns{
      {"original", SummaryRow::from(original.summary)}};
  for (const auto& m : modes) columns.emplace_back(std::string(to_string(m.mode)), m.median);

  out << "Network measures (shuffled columns: median over " << config.seeds.size()
      << " seed(s); distances " << original.summary.distance_estimator << ")\n\n";
  out << std::left << std::setw(8) << "";
  for (const auto& [name, row] : columns) out << std::right << std::setw(18) << name;
  out << "\n";
  struct RowSpec {
    const char* label;
    std::function<std::string(const SummaryRow&)> value;
  };
  const std::vector<RowSpec> rows{
      {"N", [&](const SummaryRow& r) { return num(r.nodes, 0); }},
      {"K", [&](const SummaryRow& r) { return num(r.edges, 0); }},
      {"L", [&](const SummaryRow& r) { return num(r.average_path_length, 3); }},
      {"D", [&](const SummaryRow& r) { return num(r.diameter, 0); }},
      {"C", [&](const SummaryRow& r) { return num(r.clustering, 6); }},
      {"omega", [&](const SummaryRow& r) { return num(r.components, 0); }},
  };
  for (const auto& spec : rows) {
    out << std::left << std::setw(8) << spec.label;
    for (const auto& [name, row] : columns) out << std::right << std::setw(18) << spec.value(row);
    out << "\n";
  }

  for (const auto& m : modes) {
    const auto& v = m.verdicts;
    out << "\n[" << to_string(m.mode) << "]\n";
    out << "  L decreased:       " << yes(v.path_length_decreased) << "  (" << num(v.original_l, 4)
        << " -> " << num(v.shuffled_l, 4) << ")\n";
    out << "  D not increased:   " << yes(v.diameter_not_increased) << "  (" << num(v.original_d, 0)
        << " -> " << num(v.shuffled_d, 1) << ")\n";
    out << "  C increased:       " << yes(v.clustering_increased) << "  (" << num(v.original_c, 6)
        << " -> " << num(v.shuffled_c, 6) << ")\n";
    out << "  in-selectivity  original above shuffled at " << num(100 * m.in_selectivity.median_dominance, 1)
        << "% of top ranks\n";
    out << "  out-selectivity original above shuffled at "
        << num(100 * m.out_selectivity.median_dominance, 1) << "% of top ranks\n";
    for (const SeriesComparison* c : {&m.in_degree, &m.out_degree, &m.in_strength, &m.out_strength}) {
      out << "  " << std::left << std::setw(14) << c->series << " max deviation "
          << num(100 * c->median_max_deviation, 1) << "%, mean "
          << num(100 * c->median_mean_deviation, 1) << "%\n";
    }
  }
  out << "\npreservation checks: " << (all_preserved() ? "all passed" : "FAILED") << "\n";
  for (const auto& v : shuffled) {
    if (v.preservation && !v.preservation->all_passed()) {
      for (const auto& c : v.preservation->checks) {
        if (!c.passed) out << "  " << v.name << ": " << c.name << " failed\n";
      }
    }
  }
  return out.str();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("cannot read " + path.string());
  return buf.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << contents;
  out.close();
  if (!out) throw Error("cannot write " + path.string());
}

Corpus ingest_files(const std::vector<fs::path>& paths, const TokenizeConfig& config,
                    IngestDiagnostics* diagnostics) {
  std::vector<Token> tokens;
  bool unterminated = false;
  std::size_t synthetic = 0;
  for (const auto& path : paths) {
    const std::string content = read_file(path);
    std::vector<Token> file_tokens;
    try {
      file_tokens = tokenize(content, config);
    } catch (const DecodeError& e) {
      throw DecodeError(e.offset(), path.string());
    }
    if (!file_tokens.empty() && std::holds_alternative<WordToken>(file_tokens.back())) {
      unterminated = true;
      file_tokens.push_back(DelimiterToken{config.delimiters.front()});
      ++synthetic;
    }
    tokens.insert(tokens.end(), std::make_move_iterator(file_tokens.begin()),
                  std::make_move_iterator(file_tokens.end()));
  }
  IngestDiagnostics diag;
  Corpus corpus = segment(tokens, &diag);
  diag.delimiter_tokens -= synthetic;
  diag.unterminated_tail = unterminated;
  if (diagnostics != nullptr) *diagnostics = diag;
  return corpus;
}

namespace {

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

struct Measured {
  NetworkSummary summary;
  SeriesSet series;
};

Measured measure(const CooccurrenceNetwork& network, const DistanceOptions& options) {
  Measured m;
  m.summary = stage("measure", [&] { return summarize(network, options); });
  m.series = stage("distributions", [&] { return node_series(all_node_metrics(network)); });
  return m;
}

SeriesComparison compare_series(const std::string& label, const RankSeries& original,
                                const std::vector<const RankSeries*>& shuffled,
                                const std::function<DominanceReport(const RankSeries&,
                                                                    const RankSeries&)>& cmp) {
  SeriesComparison c;
  c.series = label;
  for (const RankSeries* s : shuffled) c.per_seed.push_back(cmp(original, *s));
  c.median_dominance = median_of(c.per_seed, [](const DominanceReport& r) { return r.dominance; });
  c.median_max_deviation =
      median_of(c.per_seed, [](const DominanceReport& r) { return r.max_relative_deviation; });
  c.median_mean_deviation =
      median_of(c.per_seed, [](const DominanceReport& r) { return r.mean_relative_deviation; });
  return c;
}

class ArtifactWriter {
 public:
  explicit ArtifactWriter(fs::path root) : root_(std::move(root)) {}

  bool enabled() const { return !root_.empty(); }

  void variant(const std::string& name, const CooccurrenceNetwork& network, const Measured& m,
               const CorpusStats& stats) {
    if (!enabled()) return;
    stage("write", [&] {
      write_file(root_ / "summaries" / (name + ".json"), to_json(m.summary).dump(2) + "\n");
      write_file(root_ / "networks" / (name + ".edgelist"), export_edge_list(network));
      for (const auto& [label, series] : m.series) {
        write_file(root_ / "series" / (name + "_" + label + ".csv"), rank_series_csv(series));
      }
      write_file(root_ / "series" / (name + "_sentence_lengths.csv"),
                 histogram_csv(sentence_length_histogram_series(stats)));
      return 0;
    });
  }

  void finish(const ComparisonReport& report) {
    if (!enabled()) return;
    stage("write", [&] {
      std::vector<LabelledSeries> rows;
      auto add = [&](const VariantResult& v) {
        for (const auto& [label, series] : v.series) rows.push_back({v.name, &series});
      };
      add(report.original);
      for (const auto& v : report.shuffled) add(v);
      write_file(root_ / "series" / "all_series.csv", long_format_csv(rows));
      write_file(root_ / "report.json", report.to_json().dump(2) + "\n");
      write_file(root_ / "report.txt", report.to_text());
      return 0;
    });
  }

 private:
  fs::path root_;
};

std::string variant_name(ShuffleMode mode, std::uint64_t seed) {
  return std::string(to_string(mode)) + "_seed" + std::to_string(seed);
}

}  // namespace

ComparisonReport compare_corpus(const Corpus& corpus, const ExperimentConfig& config,
                                const IngestDiagnostics& ingest) {
  stage("config", [&] {
    config.validate();
    return 0;
  });
  ComparisonReport report;
  report.config = config;
  report.ingest = ingest;
  ArtifactWriter writer(config.out_dir);

  {
    const auto network = stage("build", [&] { return build_network(corpus, config.window); });
    Measured m = measure(network, config.distance);
    report.original.name = "original";
    report.original.corpus_stats = stats(corpus);
    writer.variant("original", network, m, report.original.corpus_stats);
    report.original.summary = std::move(m.summary);
    report.original.series = std::move(m.series);
  }

  for (ShuffleMode mode : config.modes) {
    std::vector<NetworkSummary> summaries;
    const std::size_t first = report.shuffled.size();
    for (std::uint64_t seed : config.seeds) {
      VariantResult v;
      v.name = variant_name(mode, seed);
      v.mode = mode;
      v.seed = seed;
      const Corpus shuffled = stage("shuffle", [&] { return shuffle(corpus, mode, seed); });
      v.preservation = stage("shuffle", [&] { return preservation_check(corpus, shuffled, mode); });
      v.corpus_stats = stats(shuffled);
      const auto network = stage("build", [&] { return build_network(shuffled, config.window); });
      Measured m = measure(network, config.distance);
      writer.variant(v.name, network, m, v.corpus_stats);
      v.summary = std::move(m.summary);
      v.series = std::move(m.series);
      summaries.push_back(v.summary);
      report.shuffled.push_back(std::move(v));
    }

    ModeComparison mc;
    mc.mode = mode;
    mc.median = median_row(summaries);
    mc.verdicts = trend_verdicts(SummaryRow::from(report.original.summary), mc.median);
    for (const auto& s : summaries) mc.per_seed_verdicts.push_back(trend_verdicts(report.original.summary, s));

    auto collect = [&](const std::string& label) {
      std::vector<const RankSeries*> out;
      for (std::size_t i = first; i < report.shuffled.size(); ++i) {
        out.push_back(&report.shuffled[i].series.at(label));
      }
      return out;
    };
    auto by_fraction = [&](const RankSeries& a, const RankSeries& b) {
      return series_compare(a, b, config.selectivity_top_fraction);
    };
    auto by_rank = [&](const RankSeries& a, const RankSeries& b) {
      return series_compare_top(a, b, config.preservation_top_ranks);
    };
    stage("compare", [&] {
      const auto& o = report.original.series;
      mc.in_selectivity = compare_series("in_selectivity", o.at("in_selectivity"),
                                         collect("in_selectivity"), by_fraction);
      mc.out_selectivity = compare_series("out_selectivity", o.at("out_selectivity"),
                                          collect("out_selectivity"), by_fraction);
      mc.in_degree = compare_series("in_degree", o.at("in_degree"), collect("in_degree"), by_rank);
      mc.out_degree = compare_series("out_degree", o.at("out_degree"), collect("out_degree"), by_rank);
      mc.in_strength = compare_series("in_strength", o.at("in_strength"), collect("in_strength"), by_rank);
      mc.out_strength =
          compare_series("out_strength", o.at("out_strength"), collect("out_strength"), by_rank);
      return 0;
    });
    report.modes.push_back(std::move(mc));
  }

  writer.finish(report);
  return report;
}

ComparisonReport run_experiment(const ExperimentConfig& config) {
  stage("config", [&] {
    config.validate();
    if (config.inputs.empty()) throw InvalidParameter("no input files");
    return 0;
  });
  IngestDiagnostics diag;
  const Corpus corpus = stage("ingest", [&] { return ingest_files(config.inputs, config.tokenize, &diag); });
  return compare_corpus(corpus, config, diag);
}

}  // namespace cooc
