#include "specdens/random_graphs.hpp"

namespace specdens {

namespace {

// attachment tree: vertex v > 0 hangs off a uniformly chosen earlier vertex
MultiGraph attachment_tree(XorShift64Star& rng, int vertices) {
  MultiGraph g;
  g.vertex_count = vertices;
  for (int v = 1; v < vertices; ++v) {
    const int parent = static_cast<int>(rng.below(v));
    if (rng.below(2) == 0)
      g.edges.push_back({parent, v});
    else
      g.edges.push_back({v, parent});
  }
  return g;
}

}  // namespace

MultiGraph random_connected_multigraph(XorShift64Star& rng, int max_vertices,
                                       int max_edges) {
  const int vertices = 2 + static_cast<int>(rng.below(max_vertices - 1));
  MultiGraph g = attachment_tree(rng, vertices);
  const int slack = max_edges - g.edge_count();
  const int extra = slack > 0 ? static_cast<int>(rng.below(slack + 1)) : 0;
  for (int i = 0; i < extra; ++i) {
    const int a = static_cast<int>(rng.below(vertices));
    const int b = static_cast<int>(rng.below(vertices));
    g.edges.push_back({a, b});
  }
  return g;
}

MultiGraph random_tree(XorShift64Star& rng, int max_edges) {
  const int vertices = 2 + static_cast<int>(rng.below(max_edges));
  return attachment_tree(rng, vertices);
}

}  // namespace specdens
