#pragma once

#include <optional>
#include <vector>

namespace specdens {

/// Directed edge of a multigraph. Loops (tail == head) are allowed.
struct Edge {
  int tail = 0;
  int head = 0;
};

/// Finite directed multigraph. Parallel edges and loops are allowed; the
/// identity of an edge is its index in the edge list, which is stable.
/// All metric and connectivity notions below are undirected; the direction
/// only fixes the sign convention of the differential.
struct MultiGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Throws InvalidEdgeIndex unless every endpoint is < vertex_count.
void validate(const MultiGraph& g);

struct GraphStats {
  std::vector<int> degree_per_vertex;  // loops count twice
  int max_degree = 0;
  int volume = 0;  // sum of degrees = 2 |E|
  int edge_count = 0;
  std::optional<int> diameter;  // nullopt when disconnected
  int b0 = 0;                   // number of components
  int b1 = 0;                   // independent cycles, |E| - |V| + b0
};

GraphStats stats(const MultiGraph& g);

/// Shortest undirected path length between u and v; nullopt if unreachable.
std::optional<int> distance(const MultiGraph& g, int u, int v);

/// Component index per vertex, numbered in order of first appearance.
std::vector<int> component_ids(const MultiGraph& g);

int component_count(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

/// connected, |E| = |V| - 1 (hence acyclic and loop-free)
bool is_tree(const MultiGraph& g);

/// Deterministic maximal tree of a connected graph: grow from vertex 0,
/// always taking the lowest-index edge that leaves the current tree.
/// Returns the sorted edge-index set; throws DisconnectedGraph.
std::vector<int> spanning_tree(const MultiGraph& g);

struct EdgeDeletion {
  MultiGraph graph;
  std::vector<int> old_to_new;  // -1 for removed edges
};

/// Removes the given edge indices; vertices are untouched and surviving
/// edges keep their relative order.
EdgeDeletion delete_edges(const MultiGraph& g, const std::vector<int>& removed);

}  // namespace specdens
