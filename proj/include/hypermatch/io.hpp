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

#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch::io {

/// Bidirectional string label <-> dense id map. Ids are handed out in order
/// of first appearance.
class LabelDictionary {
 public:
  LabelId intern(std::string_view name);
  const std::string& name(LabelId id) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, LabelId> ids_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Text format, one whitespace-separated record per line, `c` lines are
/// comments:
///
///   t <num_vertices> <num_hyperedges>
///   v <vertex_id> <label>        (num_vertices lines)
///   e <v_1> ... <v_k>            (num_hyperedges lines)
///
/// The result is canonicalized. Labels are interned into `labels`, so a
/// data graph and its queries parsed with one dictionary share label ids.
Hypergraph parse_hypergraph(std::string_view text, LabelDictionary& labels);
Hypergraph read_hypergraph(const std::filesystem::path& path, LabelDictionary& labels);

std::string write_hypergraph(const Hypergraph& graph, const LabelDictionary& labels);
void save_hypergraph(const std::filesystem::path& path, const Hypergraph& graph,
                     const LabelDictionary& labels);

}  // namespace hypermatch::io
