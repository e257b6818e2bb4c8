// Copyright 2026 The HIRO Authors
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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hiro/errors.h"
#include "hiro/graph.h"

namespace hiro {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
bool ParseNumber(std::string_view token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Parses "key=value" pairs from the header comment.
bool HeaderValue(const std::vector<std::string_view>& tokens,
                 std::string_view key, long long& out) {
  for (std::string_view t : tokens) {
    if (t.size() > key.size() && t.substr(0, key.size()) == key &&
        t[key.size()] == '=') {
      return ParseNumber(t.substr(key.size() + 1), out);
    }
  }
  return false;
}

}  // namespace

Graph LoadGraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  std::string line;
  int line_no = 0;
  long long n = -1, d = -1, undirected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto tokens = SplitWhitespace(line);
    if (tokens.front() != "#") {
      throw ParseError(path, line_no, "missing '# n=<n> d=<d>' header");
    }
    if (!HeaderValue(tokens, "n", n) || !HeaderValue(tokens, "d", d) ||
        n < 1 || d < 0) {
      throw ParseError(path, line_no, "header must define n>=1 and d>=0");
    }
    HeaderValue(tokens, "undirected", undirected);
    break;
  }
  if (n < 0) throw ParseError(path, line_no, "empty graph file");

  GraphBuilder builder(static_cast<int>(n), static_cast<int>(d));
  std::vector<double> x(d);
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (static_cast<long long>(tokens.size()) != 2 + d) {
      throw ParseError(path, line_no,
                       "expected " + std::to_string(2 + d) + " columns, got " +
                           std::to_string(tokens.size()));
    }
    long long src, dst;
    if (!ParseNumber(tokens[0], src) || !ParseNumber(tokens[1], dst)) {
      throw ParseError(path, line_no, "node ids must be integers");
    }
    if (src < 0 || src >= n || dst < 0 || dst >= n) {
      throw ParseError(path, line_no,
                       "node index outside [0," + std::to_string(n) + ")");
    }
    for (long long j = 0; j < d; ++j) {
      if (!ParseNumber(tokens[2 + j], x[j])) {
        throw ParseError(path, line_no,
                         "bad feature value '" + std::string(tokens[2 + j]) +
                             "'");
      }
    }
    try {
      if (undirected) {
        builder.AddEdge(static_cast<NodeId>(src), static_cast<NodeId>(dst), x);
      } else {
        builder.AddArc(static_cast<NodeId>(src), static_cast<NodeId>(dst), x);
      }
    } catch (const ParameterError& e) {
      throw ParseError(path, line_no, e.what());
    }
  }
  try {
    return std::move(builder).Build();
  } catch (const ParameterError& e) {
    throw ParseError(path, line_no, e.what());
  }
}

void SaveGraph(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file '" + path + "'");
  out << "# n=" << graph.num_nodes() << " d=" << graph.feature_dim();
  if (graph.undirected()) out << " undirected=1";
  out << '\n';
  const int step = graph.undirected() ? 2 : 1;
  char buf[32];
  for (ArcId e = 0; e < graph.num_arcs(); e += step) {
    out << graph.src(e) << ' ' << graph.dst(e);
    for (double v : graph.features(e)) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out << ' ' << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace hiro
