#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seagull/graph.hpp"

namespace seagull {

enum class graph6_errc {
  bad_header,         // missing or malformed order bytes
  unsupported_order,  // order 0 or above the 64-vertex cap
  bad_length,         // body shorter or longer than the order requires
  bad_byte,           // byte outside the printable range 63..126
  bad_padding,        // nonzero bits after the last adjacency bit
};

class graph6_error : public std::runtime_error {
 public:
  graph6_error(graph6_errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  graph6_errc kind() const { return kind_; }

 private:
  graph6_errc kind_;
};

namespace detail {

inline int g6_sextet(unsigned char c, graph6_errc kind) {
  if (c < 63 || c > 126) throw graph6_error(kind, "graph6: byte " + std::to_string(int(c)) + " outside 63..126");
  return c - 63;
}

}  // namespace detail

/// Decodes one graph6 line (without trailing newline).
inline Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw graph6_error(graph6_errc::bad_header, "graph6: empty line");

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
      throw graph6_error(graph6_errc::unsupported_order, "graph6: order beyond the 64-vertex cap");
    if (line.size() < 4) throw graph6_error(graph6_errc::bad_header, "graph6: truncated long-form order");
    for (int i = 1; i <= 3; ++i)
      n = (n << 6) | detail::g6_sextet(static_cast<unsigned char>(line[static_cast<std::size_t>(i)]), graph6_errc::bad_header);
    pos = 4;
  } else {
    n = detail::g6_sextet(static_cast<unsigned char>(line[0]), graph6_errc::bad_header);
    pos = 1;
  }

  if (n == 0) throw graph6_error(graph6_errc::unsupported_order, "graph6: order 0 not supported");
  if (n > kMaxVertices)
    throw graph6_error(graph6_errc::unsupported_order, "graph6: order " + std::to_string(n) + " beyond the 64-vertex cap");

  const long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos != nbytes)
    throw graph6_error(graph6_errc::bad_length, "graph6: body has " + std::to_string(line.size() - pos) +
                                                    " bytes, order " + std::to_string(n) + " needs " + std::to_string(nbytes));

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  long p = 0;  // index into the column-major upper triangle
  for (std::size_t b = 0; b < nbytes; ++b) {
    const int sextet = detail::g6_sextet(static_cast<unsigned char>(line[pos + b]), graph6_errc::bad_byte);
    for (int k = 5; k >= 0; --k, ++p) {
      const int bit = (sextet >> k) & 1;
      if (p >= nbits) {
        if (bit) throw graph6_error(graph6_errc::bad_padding, "graph6: nonzero padding bit");
        continue;
      }
      if (bit) {
        // p = i(i-1)/2 + j encodes the pair (j, i) with j < i.
        long i = 1;
        while ((i + 1) * i / 2 <= p) ++i;
        const long j = p - i * (i - 1) / 2;
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Canonical-padding graph6 encoding; inverse of parse_graph6.
inline std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int sextet = 0, nfill = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      sextet = (sextet << 1) | (g.has_edge(j, i) ? 1 : 0);
      if (++nfill == 6) {
        out.push_back(static_cast<char>(sextet + 63));
        sextet = 0;
        nfill = 0;
      }
    }
  }
  if (nfill > 0) out.push_back(static_cast<char>((sextet << (6 - nfill)) + 63));
  return out;
}

/// Reads graph6 lines from a stream, one graph per line. Blank lines are
/// skipped. Parse failures are reported with the 1-based line number.
template <typename F>
void read_graph6_stream(std::istream& in, F&& on_graph) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      on_graph(lineno, parse_graph6(line));
    } catch (const graph6_error& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace seagull
