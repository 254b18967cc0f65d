#include "specdens/multigraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "specdens/errors.hpp"

namespace specdens {

namespace {

// adjacency as (neighbor, edge index), lists ordered by edge index
std::vector<std::vector<std::pair<int, int>>> adjacency(const MultiGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[e];
    adj[ed.tail].emplace_back(ed.head, e);
    if (ed.head != ed.tail) adj[ed.head].emplace_back(ed.tail, e);
  }
  return adj;
}

std::vector<int> bfs_distances(const std::vector<std::vector<std::pair<int, int>>>& adj,
                               int source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const auto& [w, e] : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

void validate(const MultiGraph& g) {
  if (g.vertex_count < 0) throw InvalidEdgeIndex("negative vertex count");
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[e];
    if (ed.tail < 0 || ed.tail >= g.vertex_count || ed.head < 0 ||
        ed.head >= g.vertex_count) {
      throw InvalidEdgeIndex("edge " + std::to_string(e) +
                             " has an endpoint outside the vertex range");
    }
  }
}

GraphStats stats(const MultiGraph& g) {
  validate(g);
  GraphStats s;
  s.edge_count = g.edge_count();
  s.degree_per_vertex.assign(g.vertex_count, 0);
  for (const auto& ed : g.edges) {
    s.degree_per_vertex[ed.tail] += 1;
    s.degree_per_vertex[ed.head] += 1;  // a loop hits its vertex twice
  }
  for (int d : s.degree_per_vertex) {
    s.volume += d;
    s.max_degree = std::max(s.max_degree, d);
  }
  s.b0 = component_count(g);
  s.b1 = s.edge_count - g.vertex_count + s.b0;

  if (g.vertex_count <= 1) {
    s.diameter = 0;
  } else if (s.b0 == 1) {
    auto adj = adjacency(g);
    int diam = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
      auto dist = bfs_distances(adj, v);
      diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
    }
    s.diameter = diam;
  }
  return s;
}

std::optional<int> distance(const MultiGraph& g, int u, int v) {
  validate(g);
  if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
    throw InvalidEdgeIndex("vertex index out of range");
  auto dist = bfs_distances(adjacency(g), u);
  if (dist[v] < 0) return std::nullopt;
  return dist[v];
}

std::vector<int> component_ids(const MultiGraph& g) {
  auto adj = adjacency(g);
  std::vector<int> comp(g.vertex_count, -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (comp[v] >= 0) continue;
    comp[v] = next;
    std::queue<int> queue;
    queue.push(v);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (const auto& [w, e] : adj[x]) {
        if (comp[w] < 0) {
          comp[w] = next;
          queue.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int component_count(const MultiGraph& g) {
  auto comp = component_ids(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const MultiGraph& g) { return component_count(g) == 1; }

bool is_tree(const MultiGraph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count - 1;
}

std::vector<int> spanning_tree(const MultiGraph& g) {
  validate(g);
  if (!is_connected(g)) throw DisconnectedGraph("spanning_tree needs a connected graph");
  std::vector<bool> in_tree(g.vertex_count, false);
  in_tree[0] = true;
  std::vector<int> tree;
  tree.reserve(g.vertex_count - 1);
  while (static_cast<int>(tree.size()) < g.vertex_count - 1) {
    // lowest-index edge crossing the cut; |E| is desk scale, scanning is fine
    int pick = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edges[e];
      if (in_tree[ed.tail] != in_tree[ed.head]) {
        pick = e;
        break;
      }
    }
    in_tree[g.edges[pick].tail] = in_tree[g.edges[pick].head] = true;
    tree.push_back(pick);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

EdgeDeletion delete_edges(const MultiGraph& g, const std::vector<int>& removed) {
  validate(g);
  std::vector<bool> drop(g.edge_count(), false);
  for (int e : removed) {
    if (e < 0 || e >= g.edge_count())
      throw InvalidEdgeIndex("edge index " + std::to_string(e) + " out of range");
    drop[e] = true;
  }
  EdgeDeletion out;
  out.graph.vertex_count = g.vertex_count;
  out.old_to_new.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (drop[e]) continue;
    out.old_to_new[e] = out.graph.edge_count();
    out.graph.edges.push_back(g.edges[e]);
  }
  return out;
}

}  // namespace specdens
