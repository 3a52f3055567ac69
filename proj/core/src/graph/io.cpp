#include "ktsim/graph/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ktsim/errors.hpp"

namespace ktsim {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("graph: missing header line");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw ParseError("graph: bad header on line " + std::to_string(lineno));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_content_line(in, line, lineno)) {
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest) || u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("graph: bad edge on line " + std::to_string(lineno));
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("graph: header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace ktsim
