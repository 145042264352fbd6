#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nfg/errors.hpp"

namespace nfg {

/// Unordered vertex pair in canonical (min,max) form.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// no self-loops, no parallel edges.
class Graph {
 public:
  explicit Graph(int n, std::vector<Edge> edges = {});

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Index into edges() or -1.
  int edge_index(Edge e) const;
  bool has_edge(int a, int b) const { return edge_index(make_edge(a, b)) >= 0; }

  /// Neighbors of v as (neighbor, edge index) pairs.
  const std::vector<std::pair<int, int>>& neighbors(int v) const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

 private:
  int n_;
  std::vector<Edge> edges_;                            // sorted
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, edge idx)
};

/// Tree of bridgeless connected components. Nodes are weighted by their
/// vertex count; tree edges are in bijection with the bridges of the source.
struct BridgeTree {
  struct Node {
    std::vector<int> vertices;  // sorted
    int weight = 0;             // == vertices.size()
  };
  struct TreeEdge {
    int a = 0;  // node indices
    int b = 0;
    Edge bridge;
  };
  std::vector<Node> nodes;
  std::vector<TreeEdge> tree_edges;
  std::vector<int> node_of;  // vertex -> node index
};

/// One-pass bridge/BCC/bridge-tree decomposition of an edge list. The cheap
/// entry point for everything cost- and equilibrium-related: all relevance
/// and separation queries are O(1) after construction.
///
/// Works on any edge list; `connected()` reports whether the graph was
/// connected, and the per-edge queries are only meaningful when it was.
class BridgeStructure {
 public:
  BridgeStructure() = default;
  BridgeStructure(int n, std::span<const Edge> edges) { assign(n, edges); }

  /// Recompute for a new edge list, reusing internal buffers. Deviation
  /// searches call this in a tight loop.
  void assign(int n, std::span<const Edge> edges);

  bool connected() const { return connected_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(edge_u_.size()); }

  bool is_bridge(int edge_idx) const { return is_bridge_[edge_idx]; }
  const std::vector<int>& bridge_indices() const { return bridge_idx_; }

  /// Size of the smaller side of edge e, 0 for non-bridges.
  int nu(int edge_idx) const;
  /// Ordered separated pairs: 2 nu (n - nu).
  std::int64_t sep(int edge_idx) const;
  /// Vertices reachable from v only through edge e.
  int rel(int edge_idx, int v) const;
  /// Sum of rel over all edges.
  std::int64_t relevance_sum(int v) const;

  int block_of(int v) const { return block_of_[v]; }
  int block_count() const { return static_cast<int>(block_weight_.size()); }
  int block_weight(int b) const { return block_weight_[b]; }

  /// Edge count of the longest path in the bridge tree.
  int bridge_tree_diameter() const;

 private:
  int side_weight(int edge_idx) const;  // weight of the child-side subtree
  bool on_child_side(int edge_idx, int v) const;

  int n_ = 0;
  bool connected_ = false;
  std::vector<int> edge_u_, edge_v_;
  std::vector<char> is_bridge_;
  std::vector<int> bridge_idx_;
  std::vector<int> block_of_;       // vertex -> block
  std::vector<int> block_weight_;   // block -> #vertices
  // Bridge tree rooted at block_of_[0]; Euler intervals give O(1) side tests.
  std::vector<int> tin_, tout_;     // block -> Euler interval
  std::vector<int> child_block_;    // edge idx -> deeper endpoint block (-1 if non-bridge)
  std::vector<int> subtree_weight_; // block -> vertex weight of its subtree
  // DFS scratch, kept to avoid reallocation across assign() calls.
  std::vector<int> head_, nxt_, arc_to_, disc_, low_, iter_, parent_arc_, stack_;
};

// Spec-level operations. Connectivity preconditions are enforced with
// DisconnectedInput; unknown edges/vertices with UnknownEdge/UnknownVertex.

bool is_connected(const Graph& g);
std::vector<Edge> bridges(const Graph& g);
int nu(const Graph& g, Edge e);
std::int64_t sep(const Graph& g, Edge e);
int rel(const Graph& g, Edge e, int v);
std::int64_t relevance_sum(const Graph& g, int v);
std::vector<std::vector<int>> bcc_partition(const Graph& g);
BridgeTree bridge_tree(const Graph& g);
int bridge_tree_diameter(const BridgeTree& bt);
bool is_chord(const Graph& g, Edge e);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

}  // namespace nfg
