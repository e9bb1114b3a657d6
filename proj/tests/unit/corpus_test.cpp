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

#include <random>
#include <string>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/error.hpp"
#include "doctest.h"
#include "oracle.hpp"

using cooc::DelimiterToken;
using cooc::Token;
using cooc::WordToken;

namespace {

Token W(const char* s) { return WordToken{s}; }
Token D(char32_t c = U'.') { return DelimiterToken{c}; }

std::vector<std::vector<std::string>> words_of(const cooc::Corpus& c) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : c.sentences()) {
    out.emplace_back();
    for (auto id : s) out.back().push_back(c.lexicon().lexeme(id));
  }
  return out;
}

}  // namespace

TEST_CASE("tokenize splits words and keeps delimiters") {
  auto t = cooc::tokenize("Ja sam tu. Dobro!");
  std::vector<Token> want{W("ja"), W("sam"), W("tu"), D(U'.'), W("dobro"), D(U'!')};
  CHECK(t == want);
}

TEST_CASE("tokenize of empty input") { CHECK(cooc::tokenize("").empty()); }

TEST_CASE("tokenize strips non-delimiter punctuation") {
  auto t = cooc::tokenize("Ana, idi kući.");
  std::vector<Token> want{W("ana"), W("idi"), W("kući"), D(U'.')};
  CHECK(t == want);
}

TEST_CASE("tokenize details") {
  SUBCASE("digits are words") {
    CHECK(cooc::tokenize("in 1769") == std::vector<Token>{W("in"), W("1769")});
  }
  SUBCASE("consecutive delimiters") {
    CHECK(cooc::tokenize("a?!") == std::vector<Token>{W("a"), D(U'?'), D(U'!')});
  }
  SUBCASE("inner apostrophe and hyphen join") {
    CHECK(cooc::tokenize("Don't well-known") == std::vector<Token>{W("don't"), W("well-known")});
  }
  SUBCASE("edge hyphens and quotes are dropped") {
    CHECK(cooc::tokenize("\"-a- 'b'\"") == std::vector<Token>{W("a"), W("b")});
  }
  SUBCASE("case folding covers non-ASCII letters") {
    CHECK(cooc::tokenize("ŠUMA Ćup") == std::vector<Token>{W("šuma"), W("ćup")});
  }
  SUBCASE("case folding can be disabled") {
    cooc::TokenizeConfig cfg;
    cfg.case_fold = false;
    CHECK(cooc::tokenize("Ab", cfg) == std::vector<Token>{W("Ab")});
  }
  SUBCASE("custom delimiters") {
    cooc::TokenizeConfig cfg;
    cfg.delimiters = U";";
    CHECK(cooc::tokenize("a. b; c", cfg) == std::vector<Token>{W("a"), W("b"), D(U';'), W("c")});
  }
}

TEST_CASE("tokenize rejects invalid UTF-8 with its offset") {
  auto offset_of = [](const std::string& bytes) -> std::size_t {
    try {
      cooc::tokenize(bytes);
    } catch (const cooc::DecodeError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("ab\xC3(") == 3);  // bad continuation byte
  CHECK(offset_of("ab\xFF") == 2);   // bad lead byte
  CHECK(offset_of("a\xC0\x80") == 1);  // overlong
  CHECK(offset_of("ok") == std::string::npos);
}

TEST_CASE("segment groups words into sentences") {
  auto c = cooc::segment({W("a"), W("b"), D(), W("a"), D()});
  CHECK(words_of(c) == std::vector<std::vector<std::string>>{{"a", "b"}, {"a"}});
  CHECK(c.lexicon().size() == 2);
}

TEST_CASE("segment drops empty segments") {
  cooc::IngestDiagnostics diag;
  auto c = cooc::segment({D(), D()}, &diag);
  CHECK(c.sentence_count() == 0);
  CHECK(diag.empty_segments == 2);
}

TEST_CASE("segment keeps an unterminated final sentence") {
  cooc::IngestDiagnostics diag;
  auto c = cooc::segment({W("a")}, &diag);
  CHECK(words_of(c) == std::vector<std::vector<std::string>>{{"a"}});
  CHECK(diag.unterminated_tail);
}

TEST_CASE("stats") {
  SUBCASE("small corpus") {
    auto s = cooc::stats(cooc::segment({W("a"), W("b"), D(), W("a"), D()}));
    CHECK(s.total_words == 3);
    CHECK(s.unique_words == 2);
    CHECK(s.sentence_count == 2);
    CHECK(s.sentence_length_histogram == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}});
  }
  SUBCASE("empty corpus") {
    auto s = cooc::stats(cooc::Corpus());
    CHECK(s.total_words == 0);
    CHECK(s.unique_words == 0);
    CHECK(s.sentence_count == 0);
    CHECK(s.sentence_length_histogram.empty());
  }
}

TEST_CASE("stats json layout") {
  auto j = cooc::to_json(cooc::stats(cooc::ingest("a b. a.")));
  CHECK(j.dump() ==
        R"({"total_words":3,"unique_words":2,"sentence_count":2,"histogram":[[1,1],[2,1]]})");
}

TEST_CASE("corpus constructor validates its input") {
  cooc::Lexicon lex;
  auto a = lex.intern("a");
  CHECK_THROWS_AS(cooc::Corpus(lex, std::vector<cooc::Sentence>{cooc::Sentence{}}), cooc::InvalidInput);
  CHECK_THROWS_AS(cooc::Corpus(lex, std::vector<cooc::Sentence>{{a, 7}}), cooc::InvalidInput);
  lex.intern("unused");
  CHECK_THROWS_AS(cooc::Corpus(lex, std::vector<cooc::Sentence>{cooc::Sentence{a}}), cooc::InvalidInput);
}

TEST_CASE("parse_serialized skips blank lines") {
  auto c = cooc::parse_serialized("a b\n\nc\n");
  CHECK(words_of(c) == std::vector<std::vector<std::string>>{{"a", "b"}, {"c"}});
  CHECK_THROWS_AS(cooc::parse_serialized("a \xFF\n"), cooc::DecodeError);
}

TEST_CASE("property: serialize round trips") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    auto c = oracle::random_corpus(gen);
    CHECK(cooc::parse_serialized(cooc::serialize(c)) == c);
  }
}

TEST_CASE("property: stats invariants") {
  std::mt19937_64 gen(12);
  for (int i = 0; i < 200; ++i) {
    auto c = oracle::random_corpus(gen);
    auto s = cooc::stats(c);
    std::size_t freq = 0, words = 0;
    for (auto [len, f] : s.sentence_length_histogram) {
      freq += f;
      words += len * f;
    }
    CHECK(freq == s.sentence_count);
    CHECK(words == s.total_words);
    CHECK(s.unique_words <= s.total_words);
    CHECK(s.unique_words == c.lexicon().size());
  }
}

TEST_CASE("property: rejoined sentences tokenize back to the same corpus") {
  std::mt19937_64 gen(13);
  for (int i = 0; i < 200; ++i) {
    auto c = oracle::random_corpus(gen);
    std::string text;
    for (const auto& s : c.sentences()) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) text += ' ';
        text += c.lexicon().lexeme(s[k]);
      }
      text += ". ";
    }
    CHECK(cooc::ingest(text) == c);
  }
}
