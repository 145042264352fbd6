#include "nfg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace nfg {

namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("Graph: n must be >= 1");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop " + edge_str(e));
    if (e.u < 0 || e.v >= n_)
      throw std::invalid_argument("Graph: endpoint out of range " + edge_str(e));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("Graph: parallel edge");
  adj_.resize(n_);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adj_[edges_[i].u].push_back({edges_[i].v, i});
    adj_[edges_[i].v].push_back({edges_[i].u, i});
  }
}

int Graph::edge_index(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

const std::vector<std::pair<int, int>>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw UnknownVertex("vertex " + std::to_string(v));
  return adj_[v];
}

Graph Graph::with_edge(Edge e) const {
  auto es = edges_;
  es.push_back(e);
  return Graph(n_, std::move(es));
}

Graph Graph::without_edge(Edge e) const {
  int idx = edge_index(e);
  if (idx < 0) throw UnknownEdge("edge " + edge_str(e));
  auto es = edges_;
  es.erase(es.begin() + idx);
  return Graph(n_, std::move(es));
}

void BridgeStructure::assign(int n, std::span<const Edge> edges) {
  n_ = n;
  const int m = static_cast<int>(edges.size());
  edge_u_.resize(m);
  edge_v_.resize(m);
  for (int i = 0; i < m; ++i) {
    edge_u_[i] = edges[i].u;
    edge_v_[i] = edges[i].v;
  }
  is_bridge_.assign(m, 0);
  block_of_.assign(n_, -1);
  bridge_idx_.clear();
  block_weight_.clear();

  // Flat adjacency: head/next chains, two arcs per edge.
  head_.assign(n_, -1);
  nxt_.resize(2 * m);
  arc_to_.resize(2 * m);
  for (int i = 0; i < m; ++i) {
    arc_to_[2 * i] = edge_v_[i];
    nxt_[2 * i] = head_[edge_u_[i]];
    head_[edge_u_[i]] = 2 * i;
    arc_to_[2 * i + 1] = edge_u_[i];
    nxt_[2 * i + 1] = head_[edge_v_[i]];
    head_[edge_v_[i]] = 2 * i + 1;
  }

  // Lowpoint DFS from vertex 0 marking bridges.
  disc_.assign(n_, -1);
  low_.resize(n_);
  iter_.resize(n_);
  parent_arc_.assign(n_, -1);
  stack_.clear();
  int timer = 0;
  disc_[0] = low_[0] = timer++;
  iter_[0] = head_[0];
  stack_.push_back(0);
  while (!stack_.empty()) {
    int v = stack_.back();
    if (iter_[v] != -1) {
      int arc = iter_[v];
      iter_[v] = nxt_[arc];
      if ((arc ^ 1) == parent_arc_[v]) continue;
      int w = arc_to_[arc];
      if (disc_[w] == -1) {
        disc_[w] = low_[w] = timer++;
        parent_arc_[w] = arc;
        iter_[w] = head_[w];
        stack_.push_back(w);
      } else {
        low_[v] = std::min(low_[v], disc_[w]);
      }
    } else {
      stack_.pop_back();
      if (parent_arc_[v] != -1) {
        int p = arc_to_[parent_arc_[v] ^ 1];
        low_[p] = std::min(low_[p], low_[v]);
        if (low_[v] > disc_[p]) is_bridge_[parent_arc_[v] >> 1] = 1;
      }
    }
  }
  connected_ = (timer == n_);
  if (!connected_) return;

  for (int i = 0; i < m; ++i)
    if (is_bridge_[i]) bridge_idx_.push_back(i);

  // Blocks: flood fill over non-bridge edges, seeded in ascending vertex
  // order so block ids are ordered by their smallest vertex.
  for (int s = 0; s < n_; ++s) {
    if (block_of_[s] != -1) continue;
    int b = static_cast<int>(block_weight_.size());
    block_weight_.push_back(0);
    block_of_[s] = b;
    stack_.clear();
    stack_.push_back(s);
    while (!stack_.empty()) {
      int v = stack_.back();
      stack_.pop_back();
      ++block_weight_[b];
      for (int arc = head_[v]; arc != -1; arc = nxt_[arc]) {
        if (is_bridge_[arc >> 1]) continue;
        int w = arc_to_[arc];
        if (block_of_[w] == -1) {
          block_of_[w] = b;
          stack_.push_back(w);
        }
      }
    }
  }

  // Root the bridge tree at vertex 0's block; Euler intervals and subtree
  // weights answer all side queries. Reuses the head/next scratch for the
  // block-level adjacency.
  const int nb = block_count();
  const int nbridges = static_cast<int>(bridge_idx_.size());
  tin_.assign(nb, 0);
  tout_.assign(nb, 0);
  subtree_weight_ = block_weight_;
  child_block_.assign(m, -1);

  head_.assign(nb, -1);
  nxt_.resize(2 * nbridges);
  arc_to_.resize(2 * nbridges);
  for (int k = 0; k < nbridges; ++k) {
    int i = bridge_idx_[k];
    int a = block_of_[edge_u_[i]], c = block_of_[edge_v_[i]];
    arc_to_[2 * k] = c;
    nxt_[2 * k] = head_[a];
    head_[a] = 2 * k;
    arc_to_[2 * k + 1] = a;
    nxt_[2 * k + 1] = head_[c];
    head_[c] = 2 * k + 1;
  }

  parent_arc_.assign(nb, -1);
  iter_.resize(std::max(nb, n_));
  stack_.clear();
  int root = block_of_[0];
  int btimer = 0;
  tin_[root] = btimer++;
  iter_[root] = head_[root];
  stack_.push_back(root);
  while (!stack_.empty()) {
    int b = stack_.back();
    if (iter_[b] != -1) {
      int arc = iter_[b];
      iter_[b] = nxt_[arc];
      if ((arc ^ 1) == parent_arc_[b]) continue;
      int c = arc_to_[arc];
      tin_[c] = btimer++;
      parent_arc_[c] = arc;
      iter_[c] = head_[c];
      child_block_[bridge_idx_[arc >> 1]] = c;
      stack_.push_back(c);
    } else {
      stack_.pop_back();
      tout_[b] = btimer;
      if (parent_arc_[b] != -1) {
        int p = arc_to_[parent_arc_[b] ^ 1];
        subtree_weight_[p] += subtree_weight_[b];
      }
    }
  }
}

int BridgeStructure::side_weight(int edge_idx) const {
  return subtree_weight_[child_block_[edge_idx]];
}

bool BridgeStructure::on_child_side(int edge_idx, int v) const {
  int c = child_block_[edge_idx];
  int b = block_of_[v];
  return tin_[c] <= tin_[b] && tin_[b] < tout_[c];
}

int BridgeStructure::nu(int edge_idx) const {
  if (!is_bridge_[edge_idx]) return 0;
  int w = side_weight(edge_idx);
  return std::min(w, n_ - w);
}

std::int64_t BridgeStructure::sep(int edge_idx) const {
  std::int64_t k = nu(edge_idx);
  return 2 * k * (n_ - k);
}

int BridgeStructure::rel(int edge_idx, int v) const {
  if (!is_bridge_[edge_idx]) return 0;
  int w = side_weight(edge_idx);
  return on_child_side(edge_idx, v) ? n_ - w : w;
}

std::int64_t BridgeStructure::relevance_sum(int v) const {
  std::int64_t total = 0;
  for (int i : bridge_idx_) total += rel(i, v);
  return total;
}

int BridgeStructure::bridge_tree_diameter() const {
  const int nb = block_count();
  if (nb <= 1) return 0;
  std::vector<std::vector<int>> adj(nb);
  for (int i : bridge_idx_) {
    int a = block_of_[edge_u_[i]], b = block_of_[edge_v_[i]];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto farthest = [&](int s) {
    std::vector<int> dist(nb, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int best = s;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (dist[v] > dist[best]) best = v;
      for (int w : adj[v])
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    return std::pair{best, dist[best]};
  };
  auto [far1, d1] = farthest(0);
  auto [far2, d2] = farthest(far1);
  return d2;
}

namespace {

void require_connected(const Graph& g, const BridgeStructure& bs) {
  if (!bs.connected()) throw DisconnectedInput("graph with n=" + std::to_string(g.n()));
}

int checked_edge_index(const Graph& g, Edge e) {
  int idx = g.edge_index(e);
  if (idx < 0) throw UnknownEdge("edge " + edge_str(e));
  return idx;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, ei] : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n();
}

std::vector<Edge> bridges(const Graph& g) {
  BridgeStructure bs(g.n(), g.edges());
  require_connected(g, bs);
  std::vector<Edge> out;
  for (int i : bs.bridge_indices()) out.push_back(g.edges()[i]);
  return out;
}

int nu(const Graph& g, Edge e) {
  int idx = checked_edge_index(g, e);
  BridgeStructure bs(g.n(), g.edges());
  require_connected(g, bs);
  return bs.nu(idx);
}

std::int64_t sep(const Graph& g, Edge e) {
  int idx = checked_edge_index(g, e);
  BridgeStructure bs(g.n(), g.edges());
  require_connected(g, bs);
  return bs.sep(idx);
}

int rel(const Graph& g, Edge e, int v) {
  int idx = checked_edge_index(g, e);
  if (v < 0 || v >= g.n()) throw UnknownVertex("vertex " + std::to_string(v));
  BridgeStructure bs(g.n(), g.edges());
  require_connected(g, bs);
  return bs.rel(idx, v);
}

std::int64_t relevance_sum(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw UnknownVertex("vertex " + std::to_string(v));
  BridgeStructure bs(g.n(), g.edges());
  require_connected(g, bs);
  return bs.relevance_sum(v);
}

std::vector<std::vector<int>> bcc_partition(const Graph& g) {
  BridgeStructure bs(g.n(), g.edges());
  require_connected(g, bs);
  std::vector<std::vector<int>> blocks(bs.block_count());
  for (int v = 0; v < g.n(); ++v) blocks[bs.block_of(v)].push_back(v);
  return blocks;
}

BridgeTree bridge_tree(const Graph& g) {
  BridgeStructure bs(g.n(), g.edges());
  require_connected(g, bs);
  BridgeTree bt;
  bt.nodes.resize(bs.block_count());
  bt.node_of.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    bt.nodes[bs.block_of(v)].vertices.push_back(v);
    bt.node_of[v] = bs.block_of(v);
  }
  for (auto& node : bt.nodes) node.weight = static_cast<int>(node.vertices.size());
  for (int i : bs.bridge_indices()) {
    Edge e = g.edges()[i];
    bt.tree_edges.push_back({bs.block_of(e.u), bs.block_of(e.v), e});
  }
  return bt;
}

int bridge_tree_diameter(const BridgeTree& bt) {
  const int nb = static_cast<int>(bt.nodes.size());
  if (nb <= 1) return 0;
  std::vector<std::vector<int>> adj(nb);
  for (const auto& te : bt.tree_edges) {
    adj[te.a].push_back(te.b);
    adj[te.b].push_back(te.a);
  }
  auto farthest = [&](int s) {
    std::vector<int> dist(nb, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int best = s;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (dist[v] > dist[best]) best = v;
      for (int w : adj[v])
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    return std::pair{best, dist[best]};
  };
  return farthest(farthest(0).first).second;
}

bool is_chord(const Graph& g, Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  checked_edge_index(g, e);
  // Component ids of e.u's component in g - e; if e.v falls outside, e was a
  // bridge and cannot be a chord.
  std::vector<int> comp_id(g.n(), -1);
  std::vector<int> stack{e.u};
  comp_id[e.u] = 0;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, ei] : g.neighbors(v)) {
      if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
      if (comp_id[w] == -1) {
        comp_id[w] = count++;
        stack.push_back(w);
      }
    }
  }
  if (comp_id[e.v] == -1) return false;
  std::vector<Edge> sub;
  for (Edge f : g.edges()) {
    if (f == e) continue;
    if (comp_id[f.u] != -1 && comp_id[f.v] != -1)
      sub.push_back(make_edge(comp_id[f.u], comp_id[f.v]));
  }
  BridgeStructure bs(count, sub);
  return bs.block_of(comp_id[e.u]) == bs.block_of(comp_id[e.v]);
}

std::optional<int> girth(const Graph& g) {
  int best = -1;
  for (Edge e : g.edges()) {
    // Shortest u-v path avoiding e closes the shortest cycle through e.
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty() && dist[e.v] == -1) {
      int v = q.front();
      q.pop();
      for (auto [w, ei] : g.neighbors(v)) {
        if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    if (dist[e.v] != -1 && (best == -1 || dist[e.v] + 1 < best)) best = dist[e.v] + 1;
  }
  if (best == -1) return std::nullopt;
  return best;
}

}  // namespace nfg
