#include "specdens/forest.hpp"

#include <algorithm>
#include <queue>

#include "specdens/errors.hpp"

namespace specdens {

namespace {

struct RootedView {
  std::vector<int> dist;          // from the fixed leaf, -1 off-component
  std::vector<int> parent_edge;   // edge toward the root, -1 at the root
  std::vector<int> order;         // BFS order, root first
  std::vector<int> subtree_size;  // vertices in the subtree, 0 off-component
};

// Roots the subtree spanned by the live edges at v.
RootedView root_at(const MultiGraph& t, const std::vector<char>& live, int v) {
  RootedView r;
  r.dist.assign(t.vertex_count, -1);
  r.parent_edge.assign(t.vertex_count, -1);
  r.subtree_size.assign(t.vertex_count, 0);

  std::vector<std::vector<std::pair<int, int>>> adj(t.vertex_count);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!live[e]) continue;
    adj[t.edges[e].tail].emplace_back(t.edges[e].head, e);
    adj[t.edges[e].head].emplace_back(t.edges[e].tail, e);
  }

  std::queue<int> queue;
  r.dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    r.order.push_back(x);
    for (const auto& [w, e] : adj[x]) {
      if (r.dist[w] >= 0) continue;
      r.dist[w] = r.dist[x] + 1;
      r.parent_edge[w] = e;
      queue.push(w);
    }
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    r.subtree_size[*it] += 1;
    if (r.parent_edge[*it] >= 0) {
      const auto& e = t.edges[r.parent_edge[*it]];
      const int parent = r.dist[e.tail] < r.dist[e.head] ? e.tail : e.head;
      r.subtree_size[parent] += r.subtree_size[*it];
    }
  }
  return r;
}

}  // namespace

int leaf_of(const MultiGraph& t) {
  if (!is_tree(t)) throw NotATree("leaf_of needs a tree");
  if (t.edge_count() == 0) throw NoEdges("leaf_of needs at least one edge");
  std::vector<int> degree(t.vertex_count, 0);
  for (const auto& e : t.edges) {
    degree[e.tail] += 1;
    degree[e.head] += 1;
  }
  for (int v = 0; v < t.vertex_count; ++v)
    if (degree[v] == 1) return v;
  throw NotATree("no leaf found");  // unreachable on a real tree
}

ForestSplit split_tree(const MultiGraph& t, double budget) {
  if (!is_tree(t)) throw NotATree("split_tree needs a tree");
  const GraphStats s = stats(t);
  const int base_degree = s.max_degree;
  const double cap = static_cast<double>(s.edge_count - 1) * base_degree;
  if (!(budget > 0.0) || budget > cap)
    throw BudgetOutOfRange("budget must lie in (0, (|E|-1)*deg]");

  ForestSplit result;
  result.budget = budget;
  result.base_degree = base_degree;

  const int leaf = leaf_of(t);
  std::vector<char> live(t.edge_count(), 1);
  int live_count = t.edge_count();

  while (true) {
    if (budget > static_cast<double>(live_count - 1) * base_degree) {
      std::vector<int> rest;
      for (int e = 0; e < t.edge_count(); ++e)
        if (live[e]) rest.push_back(e);
      result.components.push_back(std::move(rest));
      break;
    }

    const RootedView view = root_at(t, live, leaf);
    // property (P): the side away from the leaf holds >= budget/deg edges;
    // among those edges take the one farthest from the leaf (distance to the
    // nearer endpoint), ties to the smallest index
    int pick = -1;
    int pick_dist = -1;
    for (int e = 0; e < t.edge_count(); ++e) {
      if (!live[e]) continue;
      const auto& ed = t.edges[e];
      const int child = view.dist[ed.tail] < view.dist[ed.head] ? ed.head : ed.tail;
      const int far_edges = view.subtree_size[child] - 1;
      if (static_cast<double>(far_edges) * base_degree < budget) continue;
      const int d = std::min(view.dist[ed.tail], view.dist[ed.head]);
      if (d > pick_dist) {
        pick = e;
        pick_dist = d;
      }
    }

    const auto& ed = t.edges[pick];
    const int child = view.dist[ed.tail] < view.dist[ed.head] ? ed.head : ed.tail;
    live[pick] = 0;

    // the child's subtree splits off as the next piece
    std::vector<char> in_piece(t.vertex_count, 0);
    std::queue<int> queue;
    in_piece[child] = 1;
    queue.push(child);
    std::vector<std::vector<std::pair<int, int>>> adj(t.vertex_count);
    for (int e = 0; e < t.edge_count(); ++e) {
      if (!live[e]) continue;
      adj[t.edges[e].tail].emplace_back(t.edges[e].head, e);
      adj[t.edges[e].head].emplace_back(t.edges[e].tail, e);
    }
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (const auto& [w, e] : adj[x]) {
        if (!in_piece[w]) {
          in_piece[w] = 1;
          queue.push(w);
        }
      }
    }
    std::vector<int> piece;
    for (int e = 0; e < t.edge_count(); ++e) {
      if (!live[e]) continue;
      if (in_piece[t.edges[e].tail]) {
        piece.push_back(e);
        live[e] = 0;
      }
    }
    live_count -= static_cast<int>(piece.size()) + 1;
    result.removed_edges.push_back(pick);
    result.components.push_back(std::move(piece));
  }

  result.piece_count = static_cast<int>(result.components.size());
  return result;
}

}  // namespace specdens
