#include "specdens/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "specdens/errors.hpp"

namespace specdens {

namespace {

long long parse_int(const std::string& token, int line_no) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     token + "'");
  return value;
}

}  // namespace

VoltageGraph read_voltage_graph(std::istream& is) {
  VoltageGraph vg;
  bool saw_vertices = false;
  bool saw_rank = false;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (tokens[0] == "vertices") {
      if (saw_vertices) throw ParseError("line " + std::to_string(line_no) +
                                         ": duplicate vertices directive");
      if (tokens.size() != 2) throw ParseError("line " + std::to_string(line_no) +
                                               ": vertices takes one count");
      const long long n = parse_int(tokens[1], line_no);
      if (n < 0) throw ParseError("line " + std::to_string(line_no) +
                                  ": vertex count must be nonnegative");
      vg.base.vertex_count = static_cast<int>(n);
      saw_vertices = true;
    } else if (tokens[0] == "rank") {
      if (saw_rank) throw ParseError("line " + std::to_string(line_no) +
                                     ": duplicate rank directive");
      if (!vg.base.edges.empty())
        throw ParseError("line " + std::to_string(line_no) +
                         ": rank must precede the edges");
      if (tokens.size() != 2) throw ParseError("line " + std::to_string(line_no) +
                                               ": rank takes one integer");
      const long long d = parse_int(tokens[1], line_no);
      if (d < 0) throw ParseError("line " + std::to_string(line_no) +
                                  ": rank must be nonnegative");
      vg.rank = static_cast<int>(d);
      saw_rank = true;
    } else if (tokens[0] == "edge") {
      if (tokens.size() != static_cast<size_t>(3 + vg.rank))
        throw ParseError("line " + std::to_string(line_no) + ": edge takes tail, head and " +
                         std::to_string(vg.rank) + " voltage integers");
      Edge e;
      e.tail = static_cast<int>(parse_int(tokens[1], line_no));
      e.head = static_cast<int>(parse_int(tokens[2], line_no));
      std::vector<long long> sigma(vg.rank);
      for (int j = 0; j < vg.rank; ++j) sigma[j] = parse_int(tokens[3 + j], line_no);
      vg.base.edges.push_back(e);
      vg.voltages.push_back(std::move(sigma));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" +
                       tokens[0] + "'");
    }
  }
  if (!saw_vertices) throw ParseError("missing vertices directive");
  try {
    validate(vg.base);
  } catch (const InvalidEdgeIndex& e) {
    throw ParseError(e.what());
  }
  return vg;
}

VoltageGraph load_voltage_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_voltage_graph(in);
}

MultiGraph read_graph(std::istream& is) { return read_voltage_graph(is).base; }

MultiGraph load_graph(const std::string& path) { return load_voltage_graph(path).base; }

void write_graph(std::ostream& os, const MultiGraph& g) {
  os << "vertices " << g.vertex_count << '\n';
  for (const auto& e : g.edges) os << "edge " << e.tail << ' ' << e.head << '\n';
}

void write_voltage_graph(std::ostream& os, const VoltageGraph& vg) {
  os << "vertices " << vg.base.vertex_count << '\n';
  os << "rank " << vg.rank << '\n';
  for (int e = 0; e < vg.base.edge_count(); ++e) {
    os << "edge " << vg.base.edges[e].tail << ' ' << vg.base.edges[e].head;
    for (long long s : vg.voltages[e]) os << ' ' << s;
    os << '\n';
  }
}

}  // namespace specdens
