#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclesmith/errors.hpp"
#include "cyclesmith/graph.hpp"

// graph6: printable-ASCII encoding of an undirected graph. The vertex count
// comes first (one byte for n <= 62, '~' + three bytes up to n < 2^18), then
// the upper triangle of the adjacency matrix in column order, packed big-endian
// six bits per byte, each byte offset by 63.
namespace cyclesmith {

namespace graph6_detail {

inline int decode_byte(char ch, const std::string& what) {
  unsigned char b = static_cast<unsigned char>(ch);
  if (b < 63 || b > 126)
    throw Graph6Error(what + ": byte " + std::to_string(int(b)) + " outside graph6 range");
  return b - 63;
}

}  // namespace graph6_detail

inline Graph parse_graph6(std::string_view text) {
  using graph6_detail::decode_byte;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  size_t pos = 0;
  long n;
  if (text[0] != '~') {
    n = decode_byte(text[0], "size field");
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw Graph6Error("8-byte size field exceeds supported range");
    if (text.size() < 4) throw Graph6Error("truncated size field");
    n = 0;
    for (size_t i = 1; i < 4; ++i) n = (n << 6) | decode_byte(text[i], "size field");
    pos = 4;
  }
  if (n > kMaxVertices)
    throw SizeCapError("graph6 string encodes " + std::to_string(n) + " vertices; capacity is " +
                       std::to_string(kMaxVertices));

  long bits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw Graph6Error("adjacency section is " + std::to_string(text.size() - pos) +
                      " bytes; expected " + std::to_string(need) + " for n=" + std::to_string(n));

  GraphBuilder builder(static_cast<int>(n));
  long bit = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row, ++bit) {
      int chunk = decode_byte(text[pos + bit / 6], "adjacency section");
      if (chunk & (1 << (5 - bit % 6))) builder.add_edge(row, col);
    }
  }
  // Trailing pad bits must be zero or the string is ambiguous.
  for (long b = bits; b < static_cast<long>(need) * 6; ++b) {
    int chunk = decode_byte(text[pos + b / 6], "adjacency section");
    if (chunk & (1 << (5 - b % 6))) throw Graph6Error("nonzero padding bits");
  }
  return builder.build();
}

inline std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0, filled = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row) {
      chunk = (chunk << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

// Pulls graph6 lines off a stream, skipping blanks and '#' comments. Parse
// failures carry the 1-based line number so batch runs can name the culprit.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  std::optional<Graph> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      size_t end = line.find_last_not_of(" \t\r");
      try {
        return parse_graph6(std::string_view(line).substr(start, end - start + 1));
      } catch (const SizeCapError& e) {
        throw SizeCapError("line " + std::to_string(line_number_) + ": " + e.what());
      } catch (const Graph6Error& e) {
        throw Graph6Error("line " + std::to_string(line_number_) + ": " + e.what());
      }
    }
    return std::nullopt;
  }

  long line_number() const { return line_number_; }

 private:
  std::istream& in_;
  long line_number_ = 0;
};

}  // namespace cyclesmith
