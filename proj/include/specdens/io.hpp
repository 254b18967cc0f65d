#pragma once

#include <iosfwd>
#include <string>

#include "specdens/multigraph.hpp"
#include "specdens/towers.hpp"

namespace specdens {

/// Text format, whitespace separated, one directive per line:
///   # comment
///   vertices <n>
///   rank <d>                      (voltage files; omitted means d = 0)
///   edge <tail> <head> [s1 .. sd]
/// Throws ParseError on anything else.
VoltageGraph read_voltage_graph(std::istream& is);
VoltageGraph load_voltage_graph(const std::string& path);

/// Same parser, voltages ignored.
MultiGraph read_graph(std::istream& is);
MultiGraph load_graph(const std::string& path);

void write_graph(std::ostream& os, const MultiGraph& g);
void write_voltage_graph(std::ostream& os, const VoltageGraph& vg);

}  // namespace specdens
