#pragma once

#include "nfg/adversary.hpp"
#include "nfg/strategy.hpp"

namespace nfg {
namespace build {

/// Star with center 0. ULF: the center owns every edge.
StrategyProfile star(int n, FormationRule rule);

/// Cycle 0-1-...-(n-1)-0. ULF: player i owns {i, i+1 mod n}.
StrategyProfile cycle(int n, FormationRule rule);

/// Path 0-1-...-(n-1), each edge owned by the endpoint closer to its nearer
/// end; for even n the middle edge goes to the lower id.
StrategyProfile path_nearest_end(int n);

/// Bilateral hub-and-three-stars instance: hub 0, star centers 1..3 of sizes
/// n0, n0-1, n0-2 with n0 maximal such that 3*n0 - 2 <= n; leftover vertices
/// hang directly off the hub with the highest ids.
StrategyProfile three_stars(int n);

/// Bilateral cycle on n-l vertices with an l-edge path hung off vertex 0.
StrategyProfile cycle_with_path(int n, int l);

struct NonConvexGadget {
  StrategyProfile profile;  // bilateral
  int player;               // the non-convex player v
  Edge e1, e2;              // the two drops exhibiting the violation
  Edge f1, f2;              // edges that turn critical after each drop
};

/// Pendant-triangles-cycle gadget with a non-convex smart-adversary cost for
/// `player`. k is the cycle length (>= 5, the smallest making f1/f2 uniquely
/// critical after the respective drops).
NonConvexGadget non_convex_gadget(int k = 12);

struct AnonymousNonSymmetric {
  Graph graph;
  AdversarySpec adversary;  // Custom
  std::vector<int> left_orbit, right_orbit;
  int middle;
};

/// 11-vertex example of an anonymous but non-symmetric adversary: a 5-cycle
/// and a bridgeless 5-vertex gadget joined through a middle vertex, with
/// probabilities 2/3 and 1/3 on the two bridges.
AnonymousNonSymmetric fig_anonymous_nonsymmetric();

}  // namespace build
}  // namespace nfg
