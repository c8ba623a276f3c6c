#include <string>

#include "leafnet/graph.hpp"

namespace leafnet {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedGraph6, why); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

int sixbits(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) malformed("character code " + std::to_string(v) + " outside 63..126");
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.empty()) malformed("empty line");

  std::size_t pos = 0;
  int n = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~') malformed("order above 258047 is not supported");
    if (line.size() < 4) malformed("truncated order prefix");
    n = (sixbits(line[1]) << 12) | (sixbits(line[2]) << 6) | sixbits(line[3]);
    pos = 4;
  } else {
    n = sixbits(line[0]);
    pos = 1;
  }
  if (n > kMaxVertices) malformed("order " + std::to_string(n) + " exceeds 64");

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos != nbytes) {
    malformed("expected " + std::to_string(nbytes) + " body bytes, got " +
              std::to_string(line.size() - pos));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sixbits(line[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.connect(i, j);
    }
  }
  for (std::size_t b = pos; b < line.size(); ++b) sixbits(line[b]);
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace leafnet
