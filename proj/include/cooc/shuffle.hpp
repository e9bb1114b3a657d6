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

// Null-model corpora. Every shuffler is a pure function of (corpus, seed)
// and keeps the lexicon and the multiset of word occurrences intact.

#ifndef COOC_SHUFFLE_HPP_
#define COOC_SHUFFLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cooc/corpus.hpp"

namespace cooc {

enum class ShuffleMode {
  // Global word permutation dealt back into the original sentence slots.
  kSentenceLevel,
  // Global word permutation cut into a fresh random composition of the same
  // number of sentences.
  kTextLevel,
  // Each sentence permuted on its own.
  kWithinSentence,
};

std::string_view to_string(ShuffleMode mode);
// Accepts "sentence", "text" and "within-sentence".
std::optional<ShuffleMode> parse_shuffle_mode(std::string_view name);

Corpus shuffle_sentence_level(const Corpus& corpus, std::uint64_t seed);

// Throws InfeasibleComposition when the corpus has fewer words than
// sentences (not reachable from a valid Corpus, but kept as a contract).
Corpus shuffle_text_level(const Corpus& corpus, std::uint64_t seed);

Corpus shuffle_within_sentence(const Corpus& corpus, std::uint64_t seed);

Corpus shuffle(const Corpus& corpus, ShuffleMode mode, std::uint64_t seed);

// Cuts `total` items into `parts` positive lengths; every composition is
// equally likely.
std::vector<std::size_t> random_composition(std::size_t total, std::size_t parts,
                                            std::uint64_t seed);

struct PreservationCheck {
  std::string name;
  bool passed = true;
  // A few differing entries when the check failed.
  std::vector<std::string> diff_sample;
};

struct PreservationReport {
  ShuffleMode mode;
  std::vector<PreservationCheck> checks;

  bool all_passed() const;
  const PreservationCheck* find(std::string_view name) const;
};

// Compares by lexeme, so the two corpora may use different id assignments.
PreservationReport preservation_check(const Corpus& original, const Corpus& shuffled,
                                      ShuffleMode mode);

nlohmann::ordered_json to_json(const PreservationReport& report);

}  // namespace cooc

#endif  // COOC_SHUFFLE_HPP_
