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

#include "cooc/network.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "cooc/error.hpp"
#include "cooc/text.hpp"

namespace cooc {

namespace {

std::uint64_t pack(WordId a, WordId b) { return (std::uint64_t{a} << 32) | b; }

}  // namespace

CooccurrenceNetwork CooccurrenceNetwork::from_edges(std::shared_ptr<const Lexicon> lexicon,
                                                    int window, std::vector<Edge> edges) {
  if (window < 1) throw InvalidParameter("window must be at least 1");
  CooccurrenceNetwork net;
  net.lexicon_ = std::move(lexicon);
  net.window_ = window;

  for (const Edge& e : edges) {
    if (e.weight == 0) throw InvalidInput("edge weight must be positive");
    if (e.source >= net.lexicon_->size() || e.target >= net.lexicon_->size()) {
      throw InvalidInput("edge refers to a word outside the lexicon");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  std::vector<Edge> merged;
  merged.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!merged.empty() && merged.back().source == e.source && merged.back().target == e.target) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  for (const Edge& e : merged) {
    net.words_.push_back(e.source);
    net.words_.push_back(e.target);
  }
  std::sort(net.words_.begin(), net.words_.end());
  net.words_.erase(std::unique(net.words_.begin(), net.words_.end()), net.words_.end());

  const std::size_t n = net.words_.size();
  auto index = [&](WordId w) {
    return static_cast<NodeIndex>(
        std::lower_bound(net.words_.begin(), net.words_.end(), w) - net.words_.begin());
  };

  net.out_offsets_.assign(n + 1, 0);
  net.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : merged) {
    ++net.out_offsets_[index(e.source) + 1];
    ++net.in_offsets_[index(e.target) + 1];
    net.total_weight_ += e.weight;
    net.max_weight_ = std::max(net.max_weight_, e.weight);
  }
  for (std::size_t i = 0; i < n; ++i) {
    net.out_offsets_[i + 1] += net.out_offsets_[i];
    net.in_offsets_[i + 1] += net.in_offsets_[i];
  }
  net.out_targets_.resize(merged.size());
  net.out_weights_.resize(merged.size());
  net.in_sources_.resize(merged.size());
  net.in_weights_.resize(merged.size());
  std::vector<std::size_t> out_pos(net.out_offsets_.begin(), net.out_offsets_.end() - 1);
  std::vector<std::size_t> in_pos(net.in_offsets_.begin(), net.in_offsets_.end() - 1);
  // merged is sorted by (source, target), so both row sets come out sorted.
  for (const Edge& e : merged) {
    const NodeIndex u = index(e.source);
    const NodeIndex v = index(e.target);
    net.out_targets_[out_pos[u]] = v;
    net.out_weights_[out_pos[u]++] = e.weight;
    net.in_sources_[in_pos[v]] = u;
    net.in_weights_[in_pos[v]++] = e.weight;
  }
  return net;
}

std::optional<NodeIndex> CooccurrenceNetwork::node_of(WordId word) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), word);
  if (it == words_.end() || *it != word) return std::nullopt;
  return static_cast<NodeIndex>(it - words_.begin());
}

std::optional<NodeIndex> CooccurrenceNetwork::node_of(std::string_view lexeme) const {
  auto id = lexicon_->find(lexeme);
  if (!id) return std::nullopt;
  return node_of(*id);
}

Weight CooccurrenceNetwork::weight(NodeIndex u, NodeIndex v) const {
  auto targets = out_neighbors(u);
  auto it = std::lower_bound(targets.begin(), targets.end(), v);
  if (it == targets.end() || *it != v) return 0;
  return out_weights(u)[static_cast<std::size_t>(it - targets.begin())];
}

std::vector<Edge> CooccurrenceNetwork::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeIndex u = 0; u < node_count(); ++u) {
    auto targets = out_neighbors(u);
    auto weights = out_weights(u);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      out.push_back({words_[u], words_[targets[i]], weights[i]});
    }
  }
  return out;
}

CooccurrenceNetwork build_network(const Corpus& corpus, int window) {
  if (window < 1) throw InvalidParameter("window must be at least 1, got " + std::to_string(window));
  const auto w = static_cast<std::size_t>(window);

  std::vector<std::uint64_t> pairs;
  for (const Sentence& s : corpus.sentences()) {
    for (std::size_t p = 0; p + 1 < s.size(); ++p) {
      const std::size_t last = std::min(s.size() - 1, p + w);
      for (std::size_t q = p + 1; q <= last; ++q) pairs.push_back(pack(s[p], s[q]));
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    edges.push_back({static_cast<WordId>(pairs[i] >> 32),
                     static_cast<WordId>(pairs[i] & 0xFFFFFFFFu), j - i});
    i = j;
  }
  return CooccurrenceNetwork::from_edges(std::make_shared<const Lexicon>(corpus.lexicon()), window,
                                         std::move(edges));
}

std::string export_edge_list(const CooccurrenceNetwork& network) {
  const Lexicon& lex = network.lexicon();
  std::vector<Edge> edges = network.edges();
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    const std::string& as = lex.lexeme(a.source);
    const std::string& bs = lex.lexeme(b.source);
    if (as != bs) return as < bs;
    return lex.lexeme(a.target) < lex.lexeme(b.target);
  });
  std::string out;
  for (const Edge& e : edges) {
    out += lex.lexeme(e.source);
    out.push_back('\t');
    out += lex.lexeme(e.target);
    out.push_back('\t');
    out += std::to_string(e.weight);
    out.push_back('\n');
  }
  return out;
}

CooccurrenceNetwork parse_edge_list(std::string_view input, int window) {
  auto lexicon = std::make_shared<Lexicon>();
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(input, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw InvalidInput("edge list line " + std::to_string(line_no) +
                         ": expected source<TAB>target<TAB>weight");
    }
    Weight weight = 0;
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), weight);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size() || weight == 0) {
      throw InvalidInput("edge list line " + std::to_string(line_no) + ": bad weight '" +
                         std::string(fields[2]) + "'");
    }
    const WordId s = lexicon->intern(fields[0]);
    const WordId t = lexicon->intern(fields[1]);
    edges.push_back({s, t, weight});
  }
  return CooccurrenceNetwork::from_edges(std::move(lexicon), window, std::move(edges));
}

std::string export_dot(const CooccurrenceNetwork& network) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q.push_back('\\');
      q.push_back(c);
    }
    return q + "\"";
  };
  const Lexicon& lex = network.lexicon();
  std::string out = "digraph cooccurrence {\n";
  for (WordId w : network.words()) out += "  " + quote(lex.lexeme(w)) + ";\n";
  for (const Edge& e : network.edges()) {
    out += "  " + quote(lex.lexeme(e.source)) + " -> " + quote(lex.lexeme(e.target));
    if (e.weight > 1) out += " [label=\"" + std::to_string(e.weight) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cooc
