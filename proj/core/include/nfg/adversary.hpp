#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nfg/graph.hpp"
#include "nfg/rational.hpp"

namespace nfg {

struct SimpleMinded {};  // uniform over all edges
struct Smart {};         // uniform over edges of maximum separation
struct Custom {          // fixed table bound to one graph's edge set
  std::vector<std::pair<Edge, Rational>> table;
};

using AdversarySpec = std::variant<SimpleMinded, Smart, Custom>;

std::string adversary_name(const AdversarySpec& spec);

/// Exact probability measure on a graph's edges, aligned with the edge list
/// it was produced for. Probabilities are >= 0 and sum to exactly 1.
struct EdgeDistribution {
  std::vector<Edge> edges;
  std::vector<Rational> probs;

  const Rational& prob_of(Edge e) const;
};

/// Edges whose deletion separates the most ordered vertex pairs. For a
/// bridgeless graph sep_max is 0 and every edge is critical.
struct CriticalEdges {
  std::vector<Edge> edges;
  std::int64_t sep_max = 0;
  int m_max = 0;
};

EdgeDistribution distribution(const AdversarySpec& spec, const Graph& g);
CriticalEdges critical_edges(const Graph& g);

/// True iff equal separation implies equal probability under spec on g.
bool is_symmetric_on(const AdversarySpec& spec, const Graph& g);

}  // namespace nfg
