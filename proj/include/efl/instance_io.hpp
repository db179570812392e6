// Copyright 2026 The efl-color Authors
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

// Reading and writing the `.efl` instance format:
//
//   line 1        decimal n (n >= 1)
//   next n lines  n whitespace-separated vertex tokens each
//
// Blank lines and lines whose first non-blank character is '#' are ignored
// anywhere. LF and CRLF line endings are accepted. Output always uses LF,
// single spaces and no comments.

#ifndef EFL_INSTANCE_IO_HPP
#define EFL_INSTANCE_IO_HPP

#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "efl/instance.hpp"

namespace efl {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string token, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) +
                           (token.empty() ? "" : " ('" + token + "')") +
                           ": " + what),
        line_(line),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

namespace detail {

struct SourceLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<SourceLine> significant_lines(std::string_view text) {
  std::vector<SourceLine> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    SourceLine line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

inline Instance parse_grammar(std::string_view text, bool reject_duplicates) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "", "missing header line");

  const auto& header = lines.front();
  if (header.tokens.size() != 1) {
    throw ParseError(header.number, header.tokens.front(),
                     "header must be a single integer n");
  }
  const std::string& head = header.tokens.front();
  int n = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc{} || ptr != head.data() + head.size()) {
    throw ParseError(header.number, head, "malformed header");
  }
  if (n < 1) throw ParseError(header.number, head, "n must be positive");

  const auto want = static_cast<std::size_t>(n);
  if (lines.size() - 1 != want) {
    auto where = lines.size() - 1 > want ? lines[want + 1].number
                                         : lines.back().number;
    throw ParseError(where, "",
                     "expected " + std::to_string(n) + " clique lines, found " +
                         std::to_string(lines.size() - 1));
  }

  std::vector<std::vector<VertexId>> cliques;
  cliques.reserve(want);
  for (std::size_t c = 1; c <= want; ++c) {
    const auto& line = lines[c];
    if (line.tokens.size() != want) {
      throw ParseError(line.number, line.tokens.back(),
                       "clique " + std::to_string(c) + " has " +
                           std::to_string(line.tokens.size()) +
                           " vertices, expected " + std::to_string(n));
    }
    std::vector<VertexId> clique;
    std::set<std::string_view> seen;
    for (const auto& token : line.tokens) {
      if (!VertexId::is_valid_token(token)) {
        throw ParseError(line.number, token, "invalid vertex token");
      }
      if (reject_duplicates && !seen.insert(token).second) {
        throw ParseError(line.number, token,
                         "duplicate vertex in clique " + std::to_string(c));
      }
      clique.emplace_back(token);
    }
    cliques.push_back(std::move(clique));
  }
  return Instance(std::move(cliques));
}

}  // namespace detail

/// Parses and fully validates an instance. Any violation of the clique
/// conditions is reported as a ParseError naming the offending line.
inline Instance parse_instance(std::string_view text) {
  Instance inst = detail::parse_grammar(text, /*reject_duplicates=*/true);
  auto report = validate(inst);
  if (!report.ok) {
    const auto& first = report.violations.front();
    // Point at the later clique of the pair; header is line 1 only when no
    // comments precede it, so recover the real line numbers.
    auto lines = detail::significant_lines(text);
    auto clique_line = lines[static_cast<std::size_t>(
                                 first.second ? first.second : first.first)]
                           .number;
    throw ParseError(clique_line, "", first.describe(inst.n()));
  }
  return inst;
}

/// Grammar-only parse: header, clique count and clique sizes are enforced,
/// duplicates and overlaps are left for `validate` to report.
inline Instance parse_instance_relaxed(std::string_view text) {
  return detail::parse_grammar(text, /*reject_duplicates=*/false);
}

inline std::string serialize_instance(const Instance& inst) {
  std::string out = std::to_string(inst.n()) + "\n";
  for (const auto& clique : inst.cliques()) {
    for (std::size_t k = 0; k < clique.size(); ++k) {
      if (k) out += ' ';
      out += clique[k].str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace efl

#endif  // EFL_INSTANCE_IO_HPP
