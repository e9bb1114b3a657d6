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

// Corpus ingestion: tokenization, sentence segmentation, word interning and
// corpus statistics.
//
// A corpus is an ordered list of non-empty sentences, each an ordered list of
// dense word ids. The lexicon maps ids to lexemes and back. Sentences are
// delimited by a configurable character set; other punctuation separates
// words but is otherwise discarded.

#ifndef COOC_CORPUS_HPP_
#define COOC_CORPUS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "json.hpp"

namespace cooc {

using WordId = std::uint32_t;

struct WordToken {
  std::string lexeme;
  bool operator==(const WordToken&) const = default;
};

struct DelimiterToken {
  char32_t symbol;
  bool operator==(const DelimiterToken&) const = default;
};

using Token = std::variant<WordToken, DelimiterToken>;

struct TokenizeConfig {
  std::u32string delimiters = U".!?";
  bool case_fold = true;

  // Parses a UTF-8 delimiter list such as ".!?".
  static std::u32string parse_delimiters(std::string_view utf8);
};

std::vector<Token> tokenize(std::string_view text, const TokenizeConfig& config = {});

class Lexicon {
 public:
  // Returns the id of `lexeme`, assigning the next dense id on first sight.
  WordId intern(std::string_view lexeme);

  std::optional<WordId> find(std::string_view lexeme) const;
  const std::string& lexeme(WordId id) const { return lexemes_.at(id); }
  std::size_t size() const { return lexemes_.size(); }
  const std::vector<std::string>& lexemes() const { return lexemes_; }

  bool operator==(const Lexicon& other) const { return lexemes_ == other.lexemes_; }

 private:
  std::vector<std::string> lexemes_;
  std::unordered_map<std::string, WordId> ids_;
};

using Sentence = std::vector<WordId>;

// Counters collected while segmenting; not part of the corpus value.
struct IngestDiagnostics {
  std::size_t word_tokens = 0;
  std::size_t delimiter_tokens = 0;
  std::size_t empty_segments = 0;
  bool unterminated_tail = false;
};

class Corpus {
 public:
  Corpus() = default;
  Corpus(Lexicon lexicon, std::vector<Sentence> sentences);

  const Lexicon& lexicon() const { return lexicon_; }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  std::size_t sentence_count() const { return sentences_.size(); }
  std::size_t total_words() const;

  // Same lexicon, different sentences. Used by the shufflers.
  Corpus with_sentences(std::vector<Sentence> sentences) const;

  bool operator==(const Corpus& other) const = default;

 private:
  Lexicon lexicon_;
  std::vector<Sentence> sentences_;
};

Corpus segment(const std::vector<Token>& tokens, IngestDiagnostics* diagnostics = nullptr);

// tokenize + segment.
Corpus ingest(std::string_view text, const TokenizeConfig& config = {},
              IngestDiagnostics* diagnostics = nullptr);

struct CorpusStats {
  std::size_t total_words = 0;
  std::size_t unique_words = 0;
  std::size_t sentence_count = 0;
  std::map<std::size_t, std::size_t> sentence_length_histogram;
};

CorpusStats stats(const Corpus& corpus);

// Line-oriented serialization: one sentence per line, lexemes separated by a
// single space, every line terminated by '\n'.
std::string serialize(const Corpus& corpus);

// Inverse of serialize(). Blank lines are skipped; the lexicon is rebuilt in
// first-occurrence order.
Corpus parse_serialized(std::string_view text);

nlohmann::ordered_json to_json(const CorpusStats& stats);
nlohmann::ordered_json to_json(const IngestDiagnostics& diagnostics);

}  // namespace cooc

#endif  // COOC_CORPUS_HPP_
