#include "nfg/constructions.hpp"

namespace nfg {
namespace build {

namespace {

StrategyProfile from_owned_edges(int n, const std::vector<std::pair<int, int>>& owned,
                                 FormationRule rule) {
  std::vector<std::pair<int, int>> reqs = owned;
  if (rule == FormationRule::Bilateral)
    for (auto [v, w] : owned) reqs.push_back({w, v});
  return StrategyProfile(n, std::move(reqs));
}

void require_n(int n, int least, const char* what) {
  if (n < least)
    throw TooSmall(std::string(what) + " needs n >= " + std::to_string(least) +
                   ", got " + std::to_string(n));
}

}  // namespace

StrategyProfile star(int n, FormationRule rule) {
  require_n(n, 3, "star");
  std::vector<std::pair<int, int>> owned;
  for (int i = 1; i < n; ++i) owned.push_back({0, i});
  return from_owned_edges(n, owned, rule);
}

StrategyProfile cycle(int n, FormationRule rule) {
  require_n(n, 3, "cycle");
  std::vector<std::pair<int, int>> owned;
  for (int i = 0; i < n; ++i) owned.push_back({i, (i + 1) % n});
  return from_owned_edges(n, owned, rule);
}

StrategyProfile path_nearest_end(int n) {
  require_n(n, 3, "path");
  std::vector<std::pair<int, int>> owned;
  for (int j = 0; j + 1 < n; ++j) {
    // Edge {j, j+1}: distance j from the left end, n-2-j from the right.
    if (j < n - 2 - j)
      owned.push_back({j + 1, j});  // points to the left end
    else if (j > n - 2 - j)
      owned.push_back({j, j + 1});  // points to the right end
    else
      owned.push_back({j, j + 1});  // even n: middle edge to the lower id
  }
  return from_owned_edges(n, owned, FormationRule::Unilateral);
}

StrategyProfile three_stars(int n) {
  require_n(n, 9, "three_stars");
  int n0 = (n + 2) / 3;  // maximal with 3*n0 - 2 <= n
  std::vector<std::pair<int, int>> owned = {{0, 1}, {0, 2}, {0, 3}};
  int next = 4;
  for (int c = 1; c <= 3; ++c) {
    int leaves = n0 - c;  // star around center c has n0 - c + 1 vertices
    for (int i = 0; i < leaves; ++i) owned.push_back({c, next++});
  }
  while (next < n) owned.push_back({0, next++});
  return from_owned_edges(n, owned, FormationRule::Bilateral);
}

StrategyProfile cycle_with_path(int n, int l) {
  if (l < 1 || n < 3 * l || n - l < 3)
    throw BadShape("cycle_with_path needs l >= 1, n >= 3l and a cycle of >= 3 vertices");
  const int c = n - l;
  std::vector<std::pair<int, int>> owned;
  for (int i = 0; i < c; ++i) owned.push_back({i, (i + 1) % c});
  owned.push_back({0, c});
  for (int i = c; i + 1 < n; ++i) owned.push_back({i, i + 1});
  return from_owned_edges(n, owned, FormationRule::Bilateral);
}

NonConvexGadget non_convex_gadget(int k) {
  // Vertices: x=0, w=1, u=2, v=3, uu=4, y=5; the k-cycle is y plus 6..k+4.
  constexpr int kMin = 5;
  if (k < kMin)
    throw TooSmall("non_convex_gadget needs a cycle of length >= " + std::to_string(kMin));
  const int n = k + 5;
  std::vector<std::pair<int, int>> owned = {
      {0, 1},          // pendant x-w, the critical edge of the intact graph
      {1, 2}, {1, 3},  // w-u, w-v (e1)
      {2, 3},          // u-v (f1)
      {3, 5}, {3, 4},  // v-y (e2), v-uu
      {4, 5},          // uu-y (f2)
  };
  owned.push_back({5, 6});
  for (int i = 6; i < n - 1; ++i) owned.push_back({i, i + 1});
  owned.push_back({n - 1, 5});
  NonConvexGadget g{from_owned_edges(n, owned, FormationRule::Bilateral),
                    3, Edge{1, 3}, Edge{3, 5}, Edge{2, 3}, Edge{4, 5}};
  return g;
}

AnonymousNonSymmetric fig_anonymous_nonsymmetric() {
  // Left 5-cycle 0..4 (u = 0), middle v = 5, right gadget 6..10: a 4-cycle
  // 6-7-8-9 with 10 chorded to 7 and 9; w = 8 sits opposite the attachment.
  std::vector<Edge> edges = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},    // left cycle
      {0, 5},                                    // u-v, probability 2/3
      {5, 8},                                    // v-w, probability 1/3
      {6, 7}, {7, 8}, {8, 9}, {6, 9},            // right 4-cycle
      {7, 10}, {9, 10},
  };
  Graph g(11, edges);
  std::vector<std::pair<Edge, Rational>> table;
  for (Edge e : g.edges()) {
    Rational p(0);
    if (e == Edge{0, 5}) p = Rational(2, 3);
    if (e == Edge{5, 8}) p = Rational(1, 3);
    table.push_back({e, p});
  }
  return {std::move(g), Custom{std::move(table)}, {0, 1, 2, 3, 4}, {6, 7, 8, 9, 10}, 5};
}

}  // namespace build
}  // namespace nfg
