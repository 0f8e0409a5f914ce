#include <cstdint>

#include "kend/corpus.hpp"
#include "kend/error.hpp"

namespace kend {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

// N(n) per the graph6 format: one byte for n <= 62, 126 + 3 bytes up to
// 258047, 126 126 + 6 bytes beyond.
std::size_t read_order(std::string_view& s) {
  auto take = [&](std::size_t bytes) {
    if (s.size() < bytes) throw Error(ErrorCode::kMalformedHeader, "size field is cut short");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bytes; ++i) {
      const auto c = static_cast<unsigned char>(s[i]);
      if (!printable(c)) throw Error(ErrorCode::kMalformedHeader, "size byte out of range");
      value = (value << 6) | (c - kBias);
    }
    s.remove_prefix(bytes);
    return static_cast<std::size_t>(value);
  };
  if (s.empty()) throw Error(ErrorCode::kMalformedHeader, "empty record");
  const auto first = static_cast<unsigned char>(s[0]);
  if (!printable(first)) throw Error(ErrorCode::kMalformedHeader, "size byte out of range");
  if (first != 126) return take(1);
  s.remove_prefix(1);
  if (!s.empty() && static_cast<unsigned char>(s[0]) == 126) {
    s.remove_prefix(1);
    return take(6);
  }
  return take(3);
}

void write_order(std::string& out, std::size_t n) {
  auto put = [&](std::size_t bytes) {
    for (std::size_t i = bytes; i-- > 0;) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
  };
  if (n <= 62) {
    put(1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(3);
  } else {
    out.append(2, static_cast<char>(126));
    put(6);
  }
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (record.starts_with(kHeader)) record.remove_prefix(kHeader.size());
  const std::size_t n = read_order(record);
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (record.size() < bytes) {
    throw Error(ErrorCode::kTruncatedBody, "expected " + std::to_string(bytes) + " body bytes, got " +
                                               std::to_string(record.size()));
  }
  if (record.size() > bytes) {
    throw Error(ErrorCode::kTrailingGarbage, std::to_string(record.size() - bytes) + " extra bytes");
  }
  for (char c : record) {
    if (!printable(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kBadByteRange, "body byte " + std::to_string(static_cast<unsigned char>(c)));
    }
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(record[k / 6]) - kBias;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; k < bytes * 6; ++k) {
    const int chunk = static_cast<unsigned char>(record[k / 6]) - kBias;
    if ((chunk >> (5 - k % 6)) & 1) throw Error(ErrorCode::kTrailingGarbage, "non-zero padding bits");
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  if (!g.is_dense()) {
    throw Error(ErrorCode::kInvalidArgument, "graph6 needs vertex ids 0..n-1; densify first");
  }
  const std::size_t n = g.order();
  std::string out;
  write_order(out, n);
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace kend
