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

#include "cooc/shuffle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cooc/error.hpp"
#include "cooc/random.hpp"

namespace cooc {

namespace {

constexpr std::size_t kDiffSampleSize = 5;

std::vector<WordId> flatten(const Corpus& corpus) {
  std::vector<WordId> words;
  words.reserve(corpus.total_words());
  for (const Sentence& s : corpus.sentences()) words.insert(words.end(), s.begin(), s.end());
  return words;
}

std::vector<Sentence> deal(const std::vector<WordId>& words,
                           const std::vector<std::size_t>& lengths) {
  std::vector<Sentence> sentences;
  sentences.reserve(lengths.size());
  auto it = words.begin();
  for (std::size_t len : lengths) {
    sentences.emplace_back(it, it + static_cast<std::ptrdiff_t>(len));
    it += static_cast<std::ptrdiff_t>(len);
  }
  return sentences;
}

std::vector<std::size_t> composition(std::size_t total, std::size_t parts, Rng& rng) {
  if (total < parts) {
    throw InfeasibleComposition("cannot split " + std::to_string(total) + " words into " +
                                std::to_string(parts) + " non-empty sentences");
  }
  if (parts == 0) {
    if (total != 0) throw InfeasibleComposition("cannot split words into zero sentences");
    return {};
  }
  // parts-1 distinct cut points among the total-1 gaps between words.
  const auto cuts = rng.sample_sorted(total - 1, parts - 1);
  std::vector<std::size_t> lengths;
  lengths.reserve(parts);
  std::size_t prev = 0;
  for (std::uint64_t gap : cuts) {
    const auto cut = static_cast<std::size_t>(gap) + 1;
    lengths.push_back(cut - prev);
    prev = cut;
  }
  lengths.push_back(total - prev);
  return lengths;
}

std::map<std::string, std::size_t> occurrence_counts(const Corpus& corpus) {
  std::vector<std::size_t> by_id(corpus.lexicon().size(), 0);
  for (const Sentence& s : corpus.sentences()) {
    for (WordId w : s) ++by_id[w];
  }
  std::map<std::string, std::size_t> counts;
  for (WordId id = 0; id < by_id.size(); ++id) {
    if (by_id[id] > 0) counts[corpus.lexicon().lexeme(id)] = by_id[id];
  }
  return counts;
}

}  // namespace

std::string_view to_string(ShuffleMode mode) {
  switch (mode) {
    case ShuffleMode::kSentenceLevel:
      return "sentence";
    case ShuffleMode::kTextLevel:
      return "text";
    case ShuffleMode::kWithinSentence:
      return "within-sentence";
  }
  return "unknown";
}

std::optional<ShuffleMode> parse_shuffle_mode(std::string_view name) {
  if (name == "sentence") return ShuffleMode::kSentenceLevel;
  if (name == "text") return ShuffleMode::kTextLevel;
  if (name == "within-sentence") return ShuffleMode::kWithinSentence;
  return std::nullopt;
}

Corpus shuffle_sentence_level(const Corpus& corpus, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<WordId> words = flatten(corpus);
  rng.shuffle(std::span<WordId>(words));
  std::vector<std::size_t> lengths;
  lengths.reserve(corpus.sentence_count());
  for (const Sentence& s : corpus.sentences()) lengths.push_back(s.size());
  return corpus.with_sentences(deal(words, lengths));
}

Corpus shuffle_text_level(const Corpus& corpus, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<WordId> words = flatten(corpus);
  auto lengths = composition(words.size(), corpus.sentence_count(), rng);
  rng.shuffle(std::span<WordId>(words));
  return corpus.with_sentences(deal(words, lengths));
}

Corpus shuffle_within_sentence(const Corpus& corpus, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Sentence> sentences = corpus.sentences();
  for (Sentence& s : sentences) rng.shuffle(std::span<WordId>(s));
  return corpus.with_sentences(std::move(sentences));
}

Corpus shuffle(const Corpus& corpus, ShuffleMode mode, std::uint64_t seed) {
  switch (mode) {
    case ShuffleMode::kSentenceLevel:
      return shuffle_sentence_level(corpus, seed);
    case ShuffleMode::kTextLevel:
      return shuffle_text_level(corpus, seed);
    case ShuffleMode::kWithinSentence:
      return shuffle_within_sentence(corpus, seed);
  }
  throw InvalidParameter("unknown shuffle mode");
}

std::vector<std::size_t> random_composition(std::size_t total, std::size_t parts,
                                            std::uint64_t seed) {
  Rng rng(seed);
  return composition(total, parts, rng);
}

bool PreservationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PreservationCheck& c) { return c.passed; });
}

const PreservationCheck* PreservationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

PreservationReport preservation_check(const Corpus& original, const Corpus& shuffled,
                                      ShuffleMode mode) {
  PreservationReport report{mode, {}};

  const auto a = occurrence_counts(original);
  const auto b = occurrence_counts(shuffled);

  PreservationCheck vocabulary{"vocabulary", true, {}};
  {
    std::set<std::string> va(original.lexicon().lexemes().begin(),
                             original.lexicon().lexemes().end());
    std::set<std::string> vb(shuffled.lexicon().lexemes().begin(),
                             shuffled.lexicon().lexemes().end());
    for (const auto& [w, n] : a) va.insert(w);
    for (const auto& [w, n] : b) vb.insert(w);
    std::vector<std::string> diff;
    std::set_symmetric_difference(va.begin(), va.end(), vb.begin(), vb.end(),
                                  std::back_inserter(diff));
    vocabulary.passed = diff.empty();
    for (std::size_t i = 0; i < diff.size() && i < kDiffSampleSize; ++i) {
      vocabulary.diff_sample.push_back((va.count(diff[i]) ? "-" : "+") + diff[i]);
    }
  }
  report.checks.push_back(std::move(vocabulary));

  PreservationCheck multiset{"word_multiset", true, {}};
  {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      std::string entry;
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        entry = ia->first + ": " + std::to_string(ia->second) + " -> 0";
        ++ia;
      } else if (ia == a.end() || ib->first < ia->first) {
        entry = ib->first + ": 0 -> " + std::to_string(ib->second);
        ++ib;
      } else {
        if (ia->second != ib->second) {
          entry = ia->first + ": " + std::to_string(ia->second) + " -> " +
                  std::to_string(ib->second);
        }
        ++ia;
        ++ib;
      }
      if (!entry.empty()) {
        multiset.passed = false;
        if (multiset.diff_sample.size() < kDiffSampleSize) multiset.diff_sample.push_back(entry);
      }
    }
  }
  report.checks.push_back(std::move(multiset));

  PreservationCheck count{"sentence_count", true, {}};
  if (original.sentence_count() != shuffled.sentence_count()) {
    count.passed = false;
    count.diff_sample.push_back(std::to_string(original.sentence_count()) + " -> " +
                                std::to_string(shuffled.sentence_count()));
  }
  report.checks.push_back(std::move(count));

  if (mode != ShuffleMode::kTextLevel) {
    PreservationCheck lengths{"sentence_lengths", true, {}};
    const auto& sa = original.sentences();
    const auto& sb = shuffled.sentences();
    const std::size_t n = std::max(sa.size(), sb.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t la = i < sa.size() ? sa[i].size() : 0;
      const std::size_t lb = i < sb.size() ? sb[i].size() : 0;
      if (la != lb) {
        lengths.passed = false;
        if (lengths.diff_sample.size() < kDiffSampleSize) {
          lengths.diff_sample.push_back("sentence " + std::to_string(i) + ": " +
                                        std::to_string(la) + " -> " + std::to_string(lb));
        }
      }
    }
    report.checks.push_back(std::move(lengths));
  }
  return report;
}

nlohmann::ordered_json to_json(const PreservationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"diff_sample", c.diff_sample}});
  }
  return {{"mode", std::string(to_string(report.mode))},
          {"all_passed", report.all_passed()},
          {"checks", checks}};
}

}  // namespace cooc
