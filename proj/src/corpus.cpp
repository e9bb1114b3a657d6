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

#include "cooc/corpus.hpp"

#include <algorithm>

#include "cooc/error.hpp"
#include "cooc/text.hpp"

namespace cooc {

namespace {

bool is_delimiter(char32_t cp, const std::u32string& delimiters) {
  return delimiters.find(cp) != std::u32string::npos;
}

}  // namespace

std::u32string TokenizeConfig::parse_delimiters(std::string_view utf8) {
  std::u32string cps = text::decode_utf8(utf8);
  std::u32string out;
  for (char32_t cp : cps) {
    if (text::is_space(cp)) {
      throw InvalidParameter("whitespace cannot be a sentence delimiter");
    }
    if (out.find(cp) == std::u32string::npos) out.push_back(cp);
  }
  if (out.empty()) throw InvalidParameter("delimiter set is empty");
  return out;
}

std::vector<Token> tokenize(std::string_view input, const TokenizeConfig& config) {
  const std::u32string cps = text::decode_utf8(input);
  std::vector<Token> tokens;
  std::u32string word;

  auto flush = [&] {
    if (word.empty()) return;
    tokens.push_back(WordToken{text::encode_utf8(word)});
    word.clear();
  };
  auto is_word_char = [&](char32_t cp) {
    return !text::is_space(cp) && !text::is_punct(cp) && !is_delimiter(cp, config.delimiters);
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_delimiter(cp, config.delimiters)) {
      flush();
      tokens.push_back(DelimiterToken{cp});
    } else if (is_word_char(cp)) {
      word.push_back(config.case_fold ? text::to_lower(cp) : cp);
    } else if (text::is_joiner(cp) && !word.empty() && i + 1 < cps.size() &&
               is_word_char(cps[i + 1])) {
      word.push_back(cp);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

WordId Lexicon::intern(std::string_view lexeme) {
  auto it = ids_.find(std::string(lexeme));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<WordId>(lexemes_.size());
  lexemes_.emplace_back(lexeme);
  ids_.emplace(lexemes_.back(), id);
  return id;
}

std::optional<WordId> Lexicon::find(std::string_view lexeme) const {
  auto it = ids_.find(std::string(lexeme));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Corpus::Corpus(Lexicon lexicon, std::vector<Sentence> sentences)
    : lexicon_(std::move(lexicon)), sentences_(std::move(sentences)) {
  std::vector<bool> seen(lexicon_.size(), false);
  for (const Sentence& s : sentences_) {
    if (s.empty()) throw InvalidInput("corpus contains an empty sentence");
    for (WordId w : s) {
      if (w >= lexicon_.size()) {
        throw InvalidInput("word id " + std::to_string(w) + " is not in the lexicon");
      }
      seen[w] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidInput("lexicon contains a word that occurs in no sentence");
  }
}

std::size_t Corpus::total_words() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences_) n += s.size();
  return n;
}

Corpus Corpus::with_sentences(std::vector<Sentence> sentences) const {
  return Corpus(lexicon_, std::move(sentences));
}

Corpus segment(const std::vector<Token>& tokens, IngestDiagnostics* diagnostics) {
  IngestDiagnostics diag;
  Lexicon lexicon;
  std::vector<Sentence> sentences;
  Sentence current;
  for (const Token& token : tokens) {
    if (const auto* w = std::get_if<WordToken>(&token)) {
      ++diag.word_tokens;
      current.push_back(lexicon.intern(w->lexeme));
    } else {
      ++diag.delimiter_tokens;
      if (current.empty()) {
        ++diag.empty_segments;
      } else {
        sentences.push_back(std::move(current));
        current.clear();
      }
    }
  }
  if (!current.empty()) {
    diag.unterminated_tail = true;
    sentences.push_back(std::move(current));
  }
  if (diagnostics != nullptr) *diagnostics = diag;
  return Corpus(std::move(lexicon), std::move(sentences));
}

Corpus ingest(std::string_view input, const TokenizeConfig& config,
              IngestDiagnostics* diagnostics) {
  return segment(tokenize(input, config), diagnostics);
}

CorpusStats stats(const Corpus& corpus) {
  CorpusStats s;
  s.unique_words = corpus.lexicon().size();
  s.sentence_count = corpus.sentence_count();
  for (const Sentence& sentence : corpus.sentences()) {
    s.total_words += sentence.size();
    ++s.sentence_length_histogram[sentence.size()];
  }
  return s;
}

std::string serialize(const Corpus& corpus) {
  std::string out;
  for (const Sentence& sentence : corpus.sentences()) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += corpus.lexicon().lexeme(sentence[i]);
    }
    out.push_back('\n');
  }
  return out;
}

Corpus parse_serialized(std::string_view input) {
  text::decode_utf8(input);  // validation only
  Lexicon lexicon;
  std::vector<Sentence> sentences;
  for (std::string_view line : text::split(input, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Sentence sentence;
    for (std::string_view lexeme : text::split(line, ' ')) {
      if (!lexeme.empty()) sentence.push_back(lexicon.intern(lexeme));
    }
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
  }
  return Corpus(std::move(lexicon), std::move(sentences));
}

nlohmann::ordered_json to_json(const CorpusStats& stats) {
  nlohmann::ordered_json histogram = nlohmann::ordered_json::array();
  for (const auto& [length, freq] : stats.sentence_length_histogram) {
    histogram.push_back({length, freq});
  }
  return {{"total_words", stats.total_words},
          {"unique_words", stats.unique_words},
          {"sentence_count", stats.sentence_count},
          {"histogram", histogram}};
}

nlohmann::ordered_json to_json(const IngestDiagnostics& d) {
  return {{"word_tokens", d.word_tokens},
          {"delimiter_tokens", d.delimiter_tokens},
          {"empty_segments", d.empty_segments},
          {"unterminated_tail", d.unterminated_tail}};
}

}  // namespace cooc
