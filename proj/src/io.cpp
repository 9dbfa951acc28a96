#include "switchscan/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace switchscan {

namespace {

// Content lines split into integers, with the 1-based line number for errors.
struct Line {
  int number;
  std::vector<long> values;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream fields(text);
    Line line{number, {}};
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw DomainError("line " + std::to_string(number) + ": not an integer: " + tok);
      line.values.push_back(v);
    }
    out.push_back(std::move(line));
  }
  if (out.empty()) throw DomainError("empty input");
  return out;
}

int read_degree(const Line& line) {
  if (line.values.size() != 1 || line.values[0] < 1 || line.values[0] > kMaxDegree)
    throw DomainError("line " + std::to_string(line.number) + ": expected a point count in 1..63");
  return static_cast<int>(line.values[0]);
}

int point(const Line& line, long v, int n) {
  if (v < 1 || v > n) throw DomainError("line " + std::to_string(line.number) + ": point out of range");
  return static_cast<int>(v - 1);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return in;
}

}  // namespace

PermGroup read_group(std::istream& in) {
  const auto lines = content_lines(in);
  const int n = read_degree(lines[0]);
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.values.size() != static_cast<std::size_t>(n))
      throw DomainError("line " + std::to_string(line.number) + ": generator needs " + std::to_string(n) + " images");
    std::vector<int> images;
    for (long v : line.values) images.push_back(point(line, v, n));
    try {
      gens.push_back(Permutation::from_images(images));
    } catch (const DomainError& e) {
      throw DomainError("line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return PermGroup(n, std::move(gens));
}

void write_group(std::ostream& out, const PermGroup& g) {
  out << g.degree() << '\n';
  for (const auto& p : g.generators()) {
    for (int i = 0; i < p.degree(); ++i) out << (i ? " " : "") << p(i) + 1;
    out << '\n';
  }
}

Graph read_graph(std::istream& in) {
  const auto lines = content_lines(in);
  const int n = read_degree(lines[0]);
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.values.size() != 2) throw DomainError("line " + std::to_string(line.number) + ": expected \"u v\"");
    const int u = point(line, line.values[0], n), v = point(line, line.values[1], n);
    if (u == v || g.adjacent(u, v)) throw DomainError("line " + std::to_string(line.number) + ": loop or repeated edge");
    g.add_edge(u, v);
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

TripleSet read_triples(std::istream& in) {
  const auto lines = content_lines(in);
  const int n = read_degree(lines[0]);
  TripleSet t(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.values.size() != 3) throw DomainError("line " + std::to_string(line.number) + ": expected \"a b c\"");
    const int a = point(line, line.values[0], n), b = point(line, line.values[1], n), c = point(line, line.values[2], n);
    if (a == b || b == c || a == c) throw DomainError("line " + std::to_string(line.number) + ": repeated point");
    const auto r = rank_triple(a, b, c);
    if (t.contains(r)) throw DomainError("line " + std::to_string(line.number) + ": repeated triple");
    t.insert(r);
  }
  return t;
}

TwoGraph read_two_graph(std::istream& in) { return TwoGraph(read_triples(in)); }

void write_two_graph(std::ostream& out, const TripleSet& t) {
  out << t.n() << '\n';
  // Colex rank order differs from lexicographic order of sorted triples.
  std::vector<std::array<int, 3>> triples;
  for (auto r : t.ranks()) triples.push_back(unrank_triple(r));
  std::sort(triples.begin(), triples.end());
  for (const auto& [a, b, c] : triples) out << a + 1 << ' ' << b + 1 << ' ' << c + 1 << '\n';
}

PermGroup load_group(const std::string& path) {
  auto in = open(path);
  return read_group(in);
}

Graph load_graph(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

TwoGraph load_two_graph(const std::string& path) {
  auto in = open(path);
  return read_two_graph(in);
}

}  // namespace switchscan
