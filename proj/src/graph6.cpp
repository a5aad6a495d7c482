#include "condgraph/graph6.hpp"

#include "condgraph/errors.hpp"

namespace condgraph {

namespace {

constexpr int kBias = 63;
constexpr char kLongForm = '~';
constexpr std::string_view kHeader = ">>graph6<<";

bool printable(char c) { return c >= kBias && c <= 126; }

}  // namespace

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  std::string_view body = text.substr(base);

  if (body.empty()) throw Graph6Error("missing size header", base);
  std::size_t pos = 0;
  int n = 0;
  if (body[0] == kLongForm) {
    if (body.size() < 4) throw Graph6Error("truncated long size header", base + body.size());
    if (body[1] == kLongForm) throw Graph6Error("graphs above 258047 vertices unsupported", base + 1);
    for (std::size_t i = 1; i <= 3; ++i) {
      if (!printable(body[i])) throw Graph6Error("size header byte out of range", base + i);
      n = (n << 6) | (body[i] - kBias);
    }
    if (n < 63) throw Graph6Error("long size header used for order below 63", base);
    pos = 4;
  } else {
    if (!printable(body[0])) throw Graph6Error("size header byte out of range", base);
    n = body[0] - kBias;
    pos = 1;
  }
  if (n > kMaxOrder) throw Graph6Error("graph order " + std::to_string(n) + " exceeds 64", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (body.size() < pos + bytes) throw Graph6Error("truncated adjacency data", base + body.size());
  if (body.size() > pos + bytes) throw Graph6Error("trailing bytes after adjacency data", base + pos + bytes);

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      const char c = body[at];
      if (!printable(c)) throw Graph6Error("adjacency byte out of range", base + at);
      if (((c - kBias) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = pos + bytes - 1;
    const char c = body[at];
    if (!printable(c)) throw Graph6Error("adjacency byte out of range", base + at);
    const int pad = static_cast<int>(6 - bits % 6);
    if (((c - kBias) & ((1 << pad) - 1)) != 0) throw Graph6Error("nonzero padding bits", base + at);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) throw DomainError("graph6 cannot encode loops");
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongForm);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace condgraph
