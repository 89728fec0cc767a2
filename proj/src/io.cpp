// Copyright 2026 The Hypermatch Authors.
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

#include "hypermatch/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hypermatch::io {

LabelId LabelDictionary::intern(std::string_view name) {
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<LabelId>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

const std::string& LabelDictionary::name(LabelId id) const {
  if (id >= names_.size()) throw std::out_of_range("unknown label id " + std::to_string(id));
  return names_[id];
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint64_t parse_count(const Token& tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line_no, tok.column,
                     "expected a non-negative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text, LabelDictionary& labels) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t declared_vertices = 0, declared_edges = 0;
  std::vector<LabelId> vertex_labels;
  std::vector<bool> defined;
  std::size_t vertex_lines = 0;
  std::vector<std::vector<VertexId>> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto toks = tokenize(line);
    if (toks.empty() || toks[0].text == "c") continue;
    const std::string_view kind = toks[0].text;
    if (kind == "t") {
      if (have_header) throw ParseError(line_no, 1, "duplicate 't' header");
      if (toks.size() != 3) throw ParseError(line_no, 1, "expected 't <num_vertices> <num_hyperedges>'");
      declared_vertices = parse_count(toks[1], line_no);
      declared_edges = parse_count(toks[2], line_no);
      have_header = true;
      vertex_labels.assign(declared_vertices, 0);
      defined.assign(declared_vertices, false);
    } else if (kind == "v") {
      if (!have_header) throw ParseError(line_no, 1, "'v' record before 't' header");
      if (toks.size() != 3) throw ParseError(line_no, 1, "expected 'v <vertex_id> <label>'");
      ++vertex_lines;
      if (vertex_lines > declared_vertices) {
        throw ParseError(line_no, 1,
                         "more 'v' records than the " + std::to_string(declared_vertices) +
                             " declared vertices");
      }
      const auto id = parse_count(toks[1], line_no);
      if (id >= declared_vertices) {
        throw ParseError(line_no, toks[1].column,
                         "vertex id " + std::to_string(id) + " out of range");
      }
      if (defined[id]) {
        throw ParseError(line_no, toks[1].column, "vertex " + std::to_string(id) + " redefined");
      }
      defined[id] = true;
      vertex_labels[id] = labels.intern(toks[2].text);
    } else if (kind == "e") {
      if (!have_header) throw ParseError(line_no, 1, "'e' record before 't' header");
      if (toks.size() < 2) throw ParseError(line_no, 1, "hyperedge has no vertices");
      if (edges.size() >= declared_edges) {
        throw ParseError(line_no, 1,
                         "more 'e' records than the " + std::to_string(declared_edges) +
                             " declared hyperedges");
      }
      std::vector<VertexId> edge;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto v = parse_count(toks[i], line_no);
        if (v >= declared_vertices) {
          throw ParseError(line_no, toks[i].column,
                           "vertex id " + std::to_string(v) + " is not declared");
        }
        edge.push_back(static_cast<VertexId>(v));
      }
      edges.push_back(std::move(edge));
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, toks[0].column, "unknown record type '" + std::string(kind) + "'");
    }
  }

  if (!have_header) throw ParseError(line_no, 1, "missing 't' header");
  if (vertex_lines != declared_vertices) {
    throw ParseError(line_no, 1,
                     "declared " + std::to_string(declared_vertices) + " vertices but found " +
                         std::to_string(vertex_lines) + " 'v' records");
  }
  if (edges.size() != declared_edges) {
    throw ParseError(line_no, 1,
                     "declared " + std::to_string(declared_edges) + " hyperedges but found " +
                         std::to_string(edges.size()) + " 'e' records");
  }
  try {
    return Hypergraph::canonicalize(std::move(vertex_labels), edges);
  } catch (const HypergraphError& err) {
    throw ParseError(line_no, 1, err.what());
  }
}

Hypergraph read_hypergraph(const std::filesystem::path& path, LabelDictionary& labels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hypergraph(buf.str(), labels);
  } catch (const ParseError& err) {
    throw std::runtime_error(path.string() + ": " + err.what());
  }
}

std::string write_hypergraph(const Hypergraph& graph, const LabelDictionary& labels) {
  std::ostringstream out;
  out << "t " << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    out << "v " << v << ' ' << labels.name(graph.label(v)) << '\n';
  }
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    out << 'e';
    for (VertexId v : graph.edge(e)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

void save_hypergraph(const std::filesystem::path& path, const Hypergraph& graph,
                     const LabelDictionary& labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_hypergraph(graph, labels);
}

}  // namespace hypermatch::io
