#pragma once

// Text encodings of chemical trees.
//
// edge-list: "n\n" followed by n-1 lines "u v\n" with u < v, edges sorted.
// graph6:    the standard ASCII encoding of the upper triangle of the
//            adjacency matrix, columnwise, six bits per byte offset by 63.
//            No ">>graph6<<" header.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/tree.hpp"

namespace sombor {

enum class Format { edge_list, graph6 };

inline Format format_from_name(std::string_view name) {
  if (name == "edge-list") return Format::edge_list;
  if (name == "graph6") return Format::graph6;
  throw Error(ErrorKind::unsupported_format, "unknown tree format '" + std::string(name) + "'");
}

inline constexpr std::string_view format_name(Format f) noexcept {
  return f == Format::edge_list ? "edge-list" : "graph6";
}

inline constexpr int kGraph6MaxOrder = 258047;

namespace detail {

inline void append_graph6_order(std::string& out, int n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
}

inline std::string encode_graph6(const ChemTree& t) {
  const int n = t.order();
  if (n > kGraph6MaxOrder)
    throw Error(ErrorKind::unsupported_format, "graph6 supports at most 258047 vertices");
  std::string out;
  append_graph6_order(out, n);
  // Bit index of pair (i, j), i < j, in the columnwise upper triangle.
  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::vector<std::uint8_t> bits(bit_count, 0);
  for (const auto& e : t.edges()) {
    auto j = static_cast<std::size_t>(e.v);
    bits[j * (j - 1) / 2 + static_cast<std::size_t>(e.u)] = 1;
  }
  for (std::size_t k = 0; k < bit_count; k += 6) {
    int chunk = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      chunk <<= 1;
      if (k + b < bit_count) chunk |= bits[k + b];
    }
    out += static_cast<char>(chunk + 63);
  }
  return out;
}

inline ChemTree decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::parse_error, "empty graph6 record");
  for (char c : text)
    if (c < 63 || c > 126) throw Error(ErrorKind::parse_error, "byte outside graph6 range");
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126)
      throw Error(ErrorKind::unsupported_format, "graph6 order header beyond 258047 vertices");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n < 1) throw Error(ErrorKind::parse_error, "graph6 record with zero vertices");
  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bit_count + 5) / 6;
  if (text.size() - pos != bytes)
    throw Error(ErrorKind::parse_error, "graph6 body has " + std::to_string(text.size() - pos) +
                                            " bytes, expected " + std::to_string(bytes));
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    int byte = text[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw Error(ErrorKind::parse_error, "nonzero graph6 padding");
  }
  return tree_from_edge_list(n, edges);
}

/// Cursor over newline-separated text that yields whitespace-split integers
/// one line at a time.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_blank_lines();
    return pos_ >= text_.size();
  }

  std::vector<long> next_line_integers() {
    skip_blank_lines();
    if (pos_ >= text_.size()) throw Error(ErrorKind::parse_error, "unexpected end of input");
    auto eol = text_.find('\n', pos_);
    std::string_view line = text_.substr(pos_, eol == std::string_view::npos ? std::string_view::npos : eol - pos_);
    pos_ = eol == std::string_view::npos ? text_.size() : eol + 1;
    std::vector<long> values;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || ptr == line.data() + i)
        throw Error(ErrorKind::parse_error, "malformed line '" + std::string(line) + "'");
      i = static_cast<std::size_t>(ptr - line.data());
      values.push_back(value);
    }
    return values;
  }

 private:
  void skip_blank_lines() {
    while (pos_ < text_.size()) {
      auto eol = text_.find('\n', pos_);
      auto line = text_.substr(pos_, eol == std::string_view::npos ? std::string_view::npos : eol - pos_);
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) return;
      pos_ = eol == std::string_view::npos ? text_.size() : eol + 1;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline ChemTree read_edge_list_record(LineReader& in) {
  auto header = in.next_line_integers();
  if (header.size() != 1 || header[0] < 1 || header[0] > (1L << 24))
    throw Error(ErrorKind::parse_error, "edge-list record must start with a positive order");
  const int n = static_cast<int>(header[0]);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 0; k + 1 < n; ++k) {
    auto line = in.next_line_integers();
    if (line.size() != 2) throw Error(ErrorKind::parse_error, "edge line must hold two labels");
    auto clamp = [](long x) { return x < -1 || x > (1L << 30) ? -1 : static_cast<int>(x); };
    edges.emplace_back(clamp(line[0]), clamp(line[1]));
  }
  return tree_from_edge_list(n, edges);
}

}  // namespace detail

inline std::string serialize(const ChemTree& t, Format format) {
  if (format == Format::graph6) return detail::encode_graph6(t) + "\n";
  std::string out = std::to_string(t.order()) + "\n";
  for (const auto& e : t.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Parses exactly one tree; trailing content is an error.
inline ChemTree parse(std::string_view text, Format format) {
  if (format == Format::graph6) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.find('\n') != std::string_view::npos)
      throw Error(ErrorKind::parse_error, "more than one graph6 record");
    return detail::decode_graph6(text);
  }
  detail::LineReader in(text);
  ChemTree t = detail::read_edge_list_record(in);
  if (!in.at_end()) throw Error(ErrorKind::parse_error, "trailing content after edge-list record");
  return t;
}

/// Parses a stream of consecutive records (edge-list) or one record per line (graph6).
inline std::vector<ChemTree> parse_all(std::string_view text, Format format) {
  std::vector<ChemTree> out;
  if (format == Format::graph6) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto eol = text.find('\n', pos);
      auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() : eol + 1;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
      if (!line.empty()) out.push_back(detail::decode_graph6(line));
    }
    return out;
  }
  detail::LineReader in(text);
  while (!in.at_end()) out.push_back(detail::read_edge_list_record(in));
  return out;
}

}  // namespace sombor
