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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Usage: cooc_acceptance [corpus.txt]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/metrics.hpp"
#include "cooc/network.hpp"
#include "cooc/report.hpp"
#include "cooc/shuffle.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Metric oracle equivalence on random directed weighted graphs.
Outcome ac1() {
  const auto start = Clock::now();
  std::mt19937_64 gen(2026);
  std::uniform_int_distribution<std::uint32_t> size(2, 40);
  std::uniform_real_distribution<double> prob(0.1, 0.5);
  int mismatches = 0, graphs = 0;
  double worst_c = 0.0;
  while (graphs < 100) {
    const std::uint32_t n = size(gen);
    auto edges = oracle::random_edges(gen, n, prob(gen), 5);
    auto dense = oracle::Dense::from(edges);
    if (dense.largest_component().size() < 2) continue;
    ++graphs;
    auto net = oracle::to_network(edges, n);

    auto totals = dense.path_totals();
    auto d = cooc::distances(net);
    // L compared as the exact rational sum/pairs.
    if (d.distance_sum != totals.sum || d.reachable_pairs != totals.pairs) ++mismatches;
    if (d.diameter() != totals.diameter) ++mismatches;

    auto metrics = cooc::all_node_metrics(net);
    if (metrics.size() != dense.n()) {
      ++mismatches;
      continue;
    }
    for (std::size_t i = 0; i < dense.n(); ++i) {
      const auto& m = metrics[i];
      worst_c = std::max(worst_c, std::abs(m.clustering - dense.clustering(i)));
      const auto s_in = dense.in_strength(i), s_out = dense.out_strength(i);
      const auto k_in = dense.in_degree(i), k_out = dense.out_degree(i);
      if (m.in_strength != s_in || m.out_strength != s_out || m.in_degree != k_in ||
          m.out_degree != k_out) {
        ++mismatches;
      }
      // With s and k exact integers, e must be the nearest double to the
      // rational s/k, which is what a single IEEE division yields.
      auto check_e = [&](const std::optional<double>& e, std::uint64_t s, std::size_t k) {
        if (k == 0) return !e.has_value();
        return e.has_value() && *e == static_cast<double>(s) / static_cast<double>(k);
      };
      if (!check_e(m.in_selectivity, s_in, k_in) || !check_e(m.out_selectivity, s_out, k_out)) {
        ++mismatches;
      }
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = mismatches == 0 && worst_c <= 1e-12 && elapsed < 10.0;
  return {ok, std::to_string(graphs) + " graphs, " + std::to_string(mismatches) +
                  " mismatches, max |dc| " + fmt("%.3g", worst_c) + ", " +
                  fmt("%.2f", elapsed) + " s (limit 10 s)"};
}

std::map<std::string, int> occurrences(const cooc::Corpus& c) {
  std::map<std::string, int> out;
  for (const auto& s : c.sentences()) {
    for (auto id : s) ++out[c.lexicon().lexeme(id)];
  }
  return out;
}

std::vector<std::size_t> lengths(const cooc::Corpus& c) {
  std::vector<std::size_t> out;
  for (const auto& s : c.sentences()) out.push_back(s.size());
  return out;
}

// Preservation invariants over random small corpora.
Outcome ac2() {
  std::mt19937_64 gen(7);
  int failures = 0, runs = 0;
  for (int corpus = 0; corpus < 50; ++corpus) {
    auto c = oracle::random_corpus(gen);
    const auto occ = occurrences(c);
    const auto len = lengths(c);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      for (auto mode : {cooc::ShuffleMode::kSentenceLevel, cooc::ShuffleMode::kTextLevel}) {
        ++runs;
        auto s = cooc::shuffle(c, mode, seed);
        bool ok = occurrences(s) == occ && s.sentence_count() == c.sentence_count();
        if (mode == cooc::ShuffleMode::kSentenceLevel) ok = ok && lengths(s) == len;
        failures += !ok;
      }
    }
  }
  return {failures == 0, std::to_string(runs) + " shuffles, " + std::to_string(failures) +
                             " failures (allowed 0)"};
}

const char* mode_name(cooc::ShuffleMode m) {
  return m == cooc::ShuffleMode::kSentenceLevel ? "sentence" : "text";
}

// Summary trends on the reference corpus.
Outcome ac3(const cooc::ComparisonReport& r, double elapsed) {
  bool ok = elapsed < 300.0;
  std::ostringstream os;
  os << "words " << r.original.corpus_stats.total_words << "; ";
  ok = ok && r.original.corpus_stats.total_words >= 50000;
  for (const auto& m : r.modes) {
    const auto& v = m.verdicts;
    os << mode_name(m.mode) << ": L " << fmt("%.4f", v.original_l) << "->"
       << fmt("%.4f", v.shuffled_l) << (v.path_length_decreased ? " ok" : " FAIL") << ", D "
       << v.original_d << "->" << v.shuffled_d << (v.diameter_not_increased ? " ok" : " FAIL")
       << ", C " << fmt("%.6f", v.original_c) << "->" << fmt("%.6f", v.shuffled_c)
       << (v.clustering_increased ? " ok" : " FAIL") << "; ";
    ok = ok && v.all();
  }
  os << fmt("%.1f", elapsed) << " s (limit 300 s)";
  return {ok, os.str()};
}

// Selectivity separation over the top 10% of ranks.
Outcome ac4(const cooc::ComparisonReport& r) {
  bool ok = true;
  std::ostringstream os;
  for (const auto& m : r.modes) {
    for (const auto* s : {&m.in_selectivity, &m.out_selectivity}) {
      os << mode_name(m.mode) << " " << s->series << " " << fmt("%.3f", s->median_dominance)
         << "; ";
      ok = ok && s->median_dominance >= 0.95;
    }
  }
  os << "threshold 0.95";
  return {ok, os.str()};
}

// Degree and strength rank curves over the top 100 ranks.
Outcome ac5(const cooc::ComparisonReport& r) {
  bool ok = true;
  std::ostringstream os;
  for (const auto& m : r.modes) {
    for (const auto* s : {&m.in_degree, &m.out_degree}) {
      os << mode_name(m.mode) << " " << s->series << " " << fmt("%.3f", s->median_max_deviation)
         << "; ";
      ok = ok && s->median_max_deviation <= 0.15;
    }
    for (const auto* s : {&m.in_strength, &m.out_strength}) {
      os << mode_name(m.mode) << " " << s->series << " " << fmt("%.3f", s->median_max_deviation)
         << "; ";
      ok = ok && s->median_max_deviation <= 0.05;
    }
  }
  os << "limits degree 0.15, strength 0.05";
  return {ok, os.str()};
}

cooc::Weight edge_weight_sum(const cooc::CooccurrenceNetwork& net) {
  cooc::Weight sum = 0;
  for (const auto& e : net.edges()) sum += e.weight;
  return sum;
}

// Window-one weight sum survives sentence-level shuffling.
Outcome ac6(const cooc::Corpus& reference) {
  int checked = 0, failures = 0;
  auto check = [&](const cooc::Corpus& c, std::uint64_t seed) {
    ++checked;
    const auto a = edge_weight_sum(cooc::build_network(c, 1));
    const auto b = edge_weight_sum(cooc::build_network(cooc::shuffle_sentence_level(c, seed), 1));
    failures += a != b;
  };
  std::mt19937_64 gen(7);
  for (int corpus = 0; corpus < 50; ++corpus) {
    auto c = oracle::random_corpus(gen);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) check(c, seed);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) check(reference, seed);
  return {failures == 0, std::to_string(checked) + " corpus/seed pairs, " +
                             std::to_string(failures) + " mismatches"};
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = cooc::read_file(e.path());
  }
  return out;
}

// Two full pipeline runs produce identical files.
Outcome ac7(const fs::path& a, const fs::path& b) {
  const auto ta = tree(a);
  const auto tb = tree(b);
  std::size_t differing = 0;
  for (const auto& [name, bytes] : ta) {
    auto it = tb.find(name);
    differing += it == tb.end() || it->second != bytes;
  }
  const bool ok = !ta.empty() && ta.size() == tb.size() && differing == 0;
  return {ok, std::to_string(ta.size()) + " files vs " + std::to_string(tb.size()) + ", " +
                  std::to_string(differing) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path corpus_path = argc > 1 ? fs::path(argv[1]) : fs::path(COOC_ACCEPTANCE_CORPUS);
  const fs::path work = fs::temp_directory_path() / "cooc_acceptance";
  fs::remove_all(work);

  std::vector<std::pair<std::string, Outcome>> results;
  results.emplace_back("AC-1", ac1());
  results.emplace_back("AC-2", ac2());

  cooc::ExperimentConfig config;
  config.inputs = {corpus_path};
  config.window = 1;
  config.seeds = {1, 2, 3, 4, 5};
  config.distance.sample_sources = 1000;
  config.distance.sample_seed = 0;
  config.selectivity_top_fraction = 0.1;
  config.preservation_top_ranks = 100;

  try {
    config.out_dir = work / "run_a";
    const auto start = Clock::now();
    const auto report = cooc::run_experiment(config);
    const double elapsed = seconds_since(start);
    results.emplace_back("AC-3", ac3(report, elapsed));
    results.emplace_back("AC-4", ac4(report));
    results.emplace_back("AC-5", ac5(report));
    results.emplace_back("AC-6", ac6(cooc::ingest_files(config.inputs, config.tokenize)));
    config.out_dir = work / "run_b";
    cooc::run_experiment(config);
    results.emplace_back("AC-7", ac7(work / "run_a", work / "run_b"));
  } catch (const std::exception& e) {
    for (const char* id : {"AC-3", "AC-4", "AC-5", "AC-6", "AC-7"}) {
      bool seen = false;
      for (const auto& [name, o] : results) seen = seen || name == id;
      if (!seen) results.emplace_back(id, Outcome{false, std::string("error: ") + e.what()});
    }
  }
  fs::remove_all(work);

  int failed = 0;
  for (const auto& [name, o] : results) {
    std::printf("%s %s  %s\n", name.c_str(), o.passed ? "PASS" : "FAIL", o.detail.c_str());
    failed += !o.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
