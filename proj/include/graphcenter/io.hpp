#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "profile.hpp"

namespace gc {
namespace io {

inline bool significant_line(const std::string& line) {
  for (char c : line) {
    if (c == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

// Graph text format: first line "n m", then m lines "u v" with 0-based
// endpoints.  Blank lines and '#' comments are ignored.
inline Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    if (!significant_line(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n <= 0 || m < 0)
        throw input_error("graph header must be 'n m'");
      edges.reserve(static_cast<size_t>(m));
    } else {
      Vertex u, v;
      if (!(ls >> u >> v)) throw input_error("bad edge line: " + line);
      edges.emplace_back(u, v);
    }
  }
  if (n < 0) throw input_error("empty graph file");
  if (static_cast<int>(edges.size()) != m)
    throw input_error("edge count does not match header");
  return Graph(n, edges);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// Profile text format: lines "v w" with w a positive decimal; unlisted
// vertices have weight 0.  Integer-valued weights are kept exact.
inline Profile read_profile(std::istream& in) {
  std::string line;
  std::vector<std::pair<Vertex, Weight>> entries;
  while (std::getline(in, line)) {
    if (!significant_line(line)) continue;
    std::istringstream ls(line);
    Vertex v;
    std::string wtext;
    if (!(ls >> v >> wtext)) throw input_error("bad profile line: " + line);
    try {
      size_t pos = 0;
      if (wtext.find_first_of(".eE") == std::string::npos) {
        std::int64_t w = std::stoll(wtext, &pos);
        if (pos != wtext.size()) throw input_error("bad weight: " + wtext);
        entries.emplace_back(v, Weight::integer(w));
      } else {
        double w = std::stod(wtext, &pos);
        if (pos != wtext.size()) throw input_error("bad weight: " + wtext);
        entries.emplace_back(v, Weight::real(w));
      }
    } catch (const std::invalid_argument&) {
      throw input_error("bad weight: " + wtext);
    } catch (const std::out_of_range&) {
      throw input_error("weight out of range: " + wtext);
    }
  }
  return Profile(std::move(entries));
}

inline void write_profile(std::ostream& out, const Profile& pi) {
  for (const auto& [v, w] : pi.entries()) {
    out << v << ' ';
    if (w.exact && w.den == 1)
      out << w.num;
    else
      out << w.value;
    out << '\n';
  }
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file: " + path);
  return read_graph(in);
}

inline Profile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open profile file: " + path);
  return read_profile(in);
}

inline void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open file for writing: " + path);
  write_graph(out, g);
}

inline void save_profile(const std::string& path, const Profile& pi) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open file for writing: " + path);
  write_profile(out, pi);
}

}  // namespace io
}  // namespace gc
