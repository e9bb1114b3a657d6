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

// cooc: word co-occurrence networks and shuffled null models.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cooc/corpus.hpp"
#include "cooc/distributions.hpp"
#include "cooc/error.hpp"
#include "cooc/metrics.hpp"
#include "cooc/network.hpp"
#include "cooc/report.hpp"
#include "cooc/shuffle.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
  std::string delimiters = ".!?";
  bool no_case_fold = false;

  cooc::TokenizeConfig tokenize() const {
    cooc::TokenizeConfig config;
    config.delimiters = cooc::TokenizeConfig::parse_delimiters(delimiters);
    config.case_fold = !no_case_fold;
    return config;
  }
};

// Writes to `path`, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    cooc::write_file(path, contents);
  }
}

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const cooc::StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw cooc::StageError(name, e.what());
  }
}

cooc::Corpus load_corpus(const std::string& path) {
  return stage("read", [&] { return cooc::parse_serialized(cooc::read_file(path)); });
}

std::vector<std::uint64_t> parse_seeds(const std::string& list) {
  std::vector<std::uint64_t> seeds;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const auto value = std::stoull(item, &used);
    if (used != item.size()) throw cooc::InvalidParameter("bad seed '" + item + "'");
    seeds.push_back(value);
  }
  if (seeds.empty()) throw cooc::InvalidParameter("no seeds given");
  return seeds;
}

cooc::ShuffleMode parse_mode(const std::string& name) {
  auto mode = cooc::parse_shuffle_mode(name);
  if (!mode) throw cooc::InvalidParameter("unknown shuffle mode '" + name + "'");
  return *mode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and analyse word co-occurrence networks of texts and their shuffles"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--delimiters", global.delimiters, "Sentence delimiter characters")
      ->capture_default_str();
  app.add_flag("--no-case-fold", global.no_case_fold, "Keep the original letter case");

  // ingest
  std::vector<std::string> ingest_inputs;
  std::string ingest_out, ingest_stats;
  auto* ingest = app.add_subcommand("ingest", "Tokenize text files into the line corpus format");
  ingest->add_option("inputs", ingest_inputs, "UTF-8 text files")->required()->check(CLI::ExistingFile);
  ingest->add_option("-o,--output", ingest_out, "Corpus output (default stdout)");
  ingest->add_option("--stats", ingest_stats, "Write corpus statistics JSON here");

  // shuffle
  std::string shuffle_input, shuffle_out, shuffle_mode = "sentence";
  std::uint64_t shuffle_seed = 1;
  auto* shuffle = app.add_subcommand("shuffle", "Shuffle a corpus");
  shuffle->add_option("corpus", shuffle_input, "Corpus in line format")->required()->check(CLI::ExistingFile);
  shuffle->add_option("--mode", shuffle_mode, "sentence | text | within-sentence")
      ->capture_default_str()
      ->check(CLI::IsMember({"sentence", "text", "within-sentence"}));
  shuffle->add_option("--seed", shuffle_seed, "Random seed")->capture_default_str();
  shuffle->add_option("-o,--output", shuffle_out, "Output (default stdout)");

  // build
  std::string build_input, build_out, build_dot;
  int build_window = 1;
  auto* build = app.add_subcommand("build", "Build the co-occurrence network as an edge list");
  build->add_option("corpus", build_input, "Corpus in line format")->required()->check(CLI::ExistingFile);
  build->add_option("--window", build_window, "Co-occurrence window")->capture_default_str();
  build->add_option("-o,--output", build_out, "Edge list output (default stdout)");
  build->add_option("--dot", build_dot, "Also write a Graphviz file");

  // measure
  std::string measure_input, measure_out, measure_nodes;
  bool measure_edgelist = false;
  int measure_window = 1;
  std::size_t measure_samples = 0;
  std::uint64_t measure_sample_seed = 0;
  auto* measure = app.add_subcommand("measure", "Summary measures (N, K, L, D, C, omega)");
  measure->add_option("input", measure_input, "Corpus in line format")->required()->check(CLI::ExistingFile);
  measure->add_flag("--edgelist", measure_edgelist, "Input is an edge list instead of a corpus");
  measure->add_option("--window", measure_window, "Co-occurrence window")->capture_default_str();
  measure->add_option("--sample-sources", measure_samples, "Estimate distances from this many sources (0 = exact)")
      ->capture_default_str();
  measure->add_option("--sample-seed", measure_sample_seed, "Seed for source sampling")->capture_default_str();
  measure->add_option("-o,--output", measure_out, "Summary JSON output (default stdout)");
  measure->add_option("--nodes", measure_nodes, "Write per-node metrics CSV here");

  // dist
  std::string dist_input, dist_out_dir, dist_label = "corpus";
  int dist_window = 1;
  auto* dist = app.add_subcommand("dist", "Rank distributions and sentence-length histogram");
  dist->add_option("corpus", dist_input, "Corpus in line format")->required()->check(CLI::ExistingFile);
  dist->add_option("--window", dist_window, "Co-occurrence window")->capture_default_str();
  dist->add_option("--label", dist_label, "Corpus label used in file names")->capture_default_str();
  dist->add_option("--out-dir", dist_out_dir, "Output directory")->required();

  // compare
  std::string compare_a, compare_b;
  double compare_fraction = 1.0;
  std::size_t compare_ranks = 0;
  auto* compare = app.add_subcommand("compare", "Compare two rank series (a against b)");
  compare->add_option("a", compare_a, "Rank series CSV")->required()->check(CLI::ExistingFile);
  compare->add_option("b", compare_b, "Rank series CSV")->required()->check(CLI::ExistingFile);
  auto* fraction_opt =
      compare->add_option("--top-fraction", compare_fraction, "Share of top ranks to compare")
          ->capture_default_str();
  compare->add_option("--top-ranks", compare_ranks, "Compare this many top ranks instead")
      ->excludes(fraction_opt);

  // pipeline
  std::vector<std::string> pipe_inputs, pipe_modes;
  std::string pipe_seeds = "1", pipe_out_dir;
  int pipe_window = 1;
  std::size_t pipe_samples = 1000;
  std::uint64_t pipe_sample_seed = 0;
  auto* pipeline = app.add_subcommand("pipeline", "Full original-versus-shuffled comparison");
  pipeline->add_option("inputs", pipe_inputs, "UTF-8 text files")->required()->check(CLI::ExistingFile);
  pipeline->add_option("--window", pipe_window, "Co-occurrence window")->capture_default_str();
  pipeline->add_option("--seeds", pipe_seeds, "Comma-separated shuffle seeds")->capture_default_str();
  pipeline->add_option("--mode", pipe_modes, "Shuffle mode, repeatable (default: sentence and text)")
      ->check(CLI::IsMember({"sentence", "text", "within-sentence"}));
  pipeline->add_option("--sample-sources", pipe_samples, "Distance sources (0 = exact)")
      ->capture_default_str();
  pipeline->add_option("--sample-seed", pipe_sample_seed, "Seed for source sampling")->capture_default_str();
  pipeline->add_option("--out-dir", pipe_out_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      std::vector<fs::path> paths(ingest_inputs.begin(), ingest_inputs.end());
      cooc::IngestDiagnostics diag;
      const auto corpus =
          stage("ingest", [&] { return cooc::ingest_files(paths, global.tokenize(), &diag); });
      emit(ingest_out, cooc::serialize(corpus));
      const auto stats_json = cooc::to_json(cooc::stats(corpus)).dump(2) + "\n";
      if (!ingest_stats.empty()) cooc::write_file(ingest_stats, stats_json);
      std::cerr << "ingest: " << cooc::to_json(diag).dump() << "\n";
    } else if (*shuffle) {
      const auto corpus = load_corpus(shuffle_input);
      const auto mode = parse_mode(shuffle_mode);
      const auto out = stage("shuffle", [&] { return cooc::shuffle(corpus, mode, shuffle_seed); });
      emit(shuffle_out, cooc::serialize(out));
    } else if (*build) {
      const auto corpus = load_corpus(build_input);
      const auto net = stage("build", [&] { return cooc::build_network(corpus, build_window); });
      emit(build_out, cooc::export_edge_list(net));
      if (!build_dot.empty()) cooc::write_file(build_dot, cooc::export_dot(net));
    } else if (*measure) {
      const auto net = stage("build", [&] {
        if (measure_edgelist) {
          return cooc::parse_edge_list(cooc::read_file(measure_input), measure_window);
        }
        return cooc::build_network(cooc::parse_serialized(cooc::read_file(measure_input)),
                                   measure_window);
      });
      cooc::DistanceOptions options;
      options.sample_sources = measure_samples;
      options.sample_seed = measure_sample_seed;
      const auto summary = stage("measure", [&] { return cooc::summarize(net, options); });
      emit(measure_out, cooc::to_json(summary).dump(2) + "\n");
      if (!measure_nodes.empty()) {
        cooc::write_file(measure_nodes, cooc::node_metrics_csv(net, cooc::all_node_metrics(net)));
      }
    } else if (*dist) {
      const auto corpus = load_corpus(dist_input);
      const auto net = stage("build", [&] { return cooc::build_network(corpus, dist_window); });
      const auto series = stage("distributions", [&] { return cooc::node_series(cooc::all_node_metrics(net)); });
      const fs::path dir(dist_out_dir);
      std::vector<cooc::LabelledSeries> rows;
      for (const auto& [label, s] : series) {
        cooc::write_file(dir / (dist_label + "_" + label + ".csv"), cooc::rank_series_csv(s));
        rows.push_back({dist_label, &s});
      }
      cooc::write_file(dir / (dist_label + "_all_series.csv"), cooc::long_format_csv(rows));
      cooc::write_file(dir / (dist_label + "_sentence_lengths.csv"),
                       cooc::histogram_csv(cooc::sentence_length_histogram_series(cooc::stats(corpus))));
    } else if (*compare) {
      const auto a = stage("read", [&] { return cooc::parse_rank_series_csv(cooc::read_file(compare_a), compare_a); });
      const auto b = stage("read", [&] { return cooc::parse_rank_series_csv(cooc::read_file(compare_b), compare_b); });
      const auto report = stage("compare", [&] {
        return compare_ranks > 0 ? cooc::series_compare_top(a, b, compare_ranks)
                                 : cooc::series_compare(a, b, compare_fraction);
      });
      std::cout << cooc::to_json(report).dump(2) << "\n";
    } else if (*pipeline) {
      cooc::ExperimentConfig config;
      config.inputs.assign(pipe_inputs.begin(), pipe_inputs.end());
      config.tokenize = stage("config", [&] { return global.tokenize(); });
      config.window = pipe_window;
      config.seeds = stage("config", [&] { return parse_seeds(pipe_seeds); });
      if (!pipe_modes.empty()) {
        config.modes.clear();
        for (const auto& m : pipe_modes) config.modes.push_back(parse_mode(m));
      }
      config.distance.sample_sources = pipe_samples;
      config.distance.sample_seed = pipe_sample_seed;
      config.out_dir = pipe_out_dir;
      const auto report = cooc::run_experiment(config);
      std::cout << report.to_text();
    }
  } catch (const cooc::StageError& e) {
    std::cerr << "cooc: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "cooc: [" << app.get_subcommands().front()->get_name() << "] " << e.what() << "\n";
    return 1;
  }
  return 0;
}
