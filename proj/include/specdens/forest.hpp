#pragma once

#include <vector>

#include "specdens/multigraph.hpp"

namespace specdens {

/// Result of splitting a tree into budget-limited pieces. removed_edges and
/// components partition the tree's edge set; |removed_edges| = piece_count - 1.
/// Pieces before the last carry at least budget/base_degree edges.
struct ForestSplit {
  std::vector<int> removed_edges;            // in removal order
  std::vector<std::vector<int>> components;  // edge sets, construction order
  int piece_count = 0;
  double budget = 0.0;
  int base_degree = 0;
};

/// Smallest-index vertex of degree 1. Throws NotATree / NoEdges.
int leaf_of(const MultiGraph& t);

/// Splits a tree by repeatedly cutting, among the edges whose far side
/// (away from a fixed leaf) holds at least budget/deg(t) edges, the one
/// farthest from the leaf; the far side becomes the next piece. Stops when
/// the remaining piece satisfies budget > (|E| - 1) * deg(t). The degree is
/// the original tree's degree throughout, and the edge-to-vertex distance is
/// the path distance to the edge's nearer endpoint, ties to the smallest
/// edge index.
///
/// Throws NotATree, and BudgetOutOfRange unless 0 < budget <= (|E|-1)*deg(t).
ForestSplit split_tree(const MultiGraph& t, double budget);

}  // namespace specdens
