//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/instance_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace cycledg {
namespace {
  struct Line {
    int number;
    std::vector<std::string_view> tokens;
  };

  std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos)
        end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + 1;
      ++number;

      Line line { number, {} };
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
          ++i;
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
          ++j;
        if (j > i)
          line.tokens.push_back(raw.substr(i, j - i));
        i = j;
      }
      if (line.tokens.empty() || line.tokens.front().front() == '#')
        continue;
      lines.push_back(std::move(line));
    }
    return lines;
  }

  template <class T>
  T parse_number(std::string_view tok, int line, const char *what) {
    T value {};
    const char *first = tok.data(), *last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+')
      ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw ParseError(line, std::string("malformed ") + what + " '"
                                 + std::string(tok) + "'");
    return value;
  }
}  // namespace

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

Instance parse_instance(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty())
    throw ParseError(1, "missing header 'n m K'");

  const Line &hdr = lines.front();
  if (hdr.tokens.size() != 3)
    throw ParseError(hdr.number, "malformed header, expected 'n m K'");
  const int n = parse_number<int>(hdr.tokens[0], hdr.number, "vertex count");
  const int m = parse_number<int>(hdr.tokens[1], hdr.number, "edge count");
  const int dim = parse_number<int>(hdr.tokens[2], hdr.number, "dimension");
  if (n < 1 || m < 0 || dim < 1)
    throw ParseError(hdr.number, "malformed header, need n >= 1, m >= 0, K >= 1");

  if (static_cast<int>(lines.size()) < 1 + m)
    throw ParseError(lines.back().number + 1, "expected "
                                                  + std::to_string(m)
                                                  + " edge lines");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<int, int>> seen;
  for (int i = 1; i <= m; ++i) {
    const Line &ln = lines[i];
    if (ln.tokens.size() != 3)
      throw ParseError(ln.number, "malformed edge, expected 'u v d'");
    int u = parse_number<int>(ln.tokens[0], ln.number, "vertex id");
    int v = parse_number<int>(ln.tokens[1], ln.number, "vertex id");
    double d = parse_number<double>(ln.tokens[2], ln.number, "weight");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(ln.number, "vertex id out of range");
    if (u == v)
      throw ParseError(ln.number, "self-loop");
    if (!(d >= 0) || !std::isfinite(d))
      throw ParseError(ln.number, "negative weight");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw ParseError(ln.number, "duplicate edge");
    edges.push_back({ u - 1, v - 1, d });
  }

  Instance inst { WeightedGraph(n, dim, std::move(edges)), std::nullopt };

  std::size_t next = 1 + m;
  if (next == lines.size())
    return inst;

  const Line &tag = lines[next];
  if (tag.tokens.size() != 1 || tag.tokens[0] != "realization")
    throw ParseError(tag.number, "unexpected content after edge list");
  if (lines.size() - next - 1 != static_cast<std::size_t>(n))
    throw ParseError(tag.number, "realization must have exactly "
                                     + std::to_string(n) + " rows");

  Realization x(n, dim);
  for (int i = 0; i < n; ++i) {
    const Line &ln = lines[next + 1 + i];
    if (static_cast<int>(ln.tokens.size()) != dim)
      throw ParseError(ln.number, "realization row must have "
                                      + std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      x(i, k) = parse_number<double>(ln.tokens[k], ln.number, "coordinate");
  }
  inst.realization = std::move(x);
  return inst;
}

std::string write_instance(const Instance &inst) {
  const WeightedGraph &g = inst.graph;
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.dim() << '\n';
  for (const Edge &e: g.edges())
    os << e.u + 1 << ' ' << e.v + 1 << ' ' << format_double(e.d) << '\n';

  if (inst.realization) {
    const Realization &x = *inst.realization;
    os << "realization\n";
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      for (Eigen::Index k = 0; k < x.cols(); ++k)
        os << (k > 0 ? " " : "") << format_double(x(i, k));
      os << '\n';
    }
  }
  return os.str();
}

Instance read_instance_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void write_instance_file(const std::filesystem::path &path,
                         const Instance &inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << write_instance(inst);
  if (!out)
    throw std::runtime_error("write failed: " + path.string());
}
}  // namespace cycledg
