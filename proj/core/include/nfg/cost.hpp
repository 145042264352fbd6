#pragma once

#include <vector>

#include "nfg/adversary.hpp"
#include "nfg/rational.hpp"
#include "nfg/strategy.hpp"

namespace nfg {

/// Per-player cost split plus the social total. social == sum of totals,
/// building == request count * alpha.
struct CostReport {
  std::vector<Ext> building;
  std::vector<Ext> disconnection;
  std::vector<Ext> total;
  Ext social;
};

/// Expected number of vertices v loses when one edge is deleted according to
/// dist. Requires a connected g; dist must be bound to g's edge set.
Rational disconnection_cost(const Graph& g, const EdgeDistribution& dist, int v);

/// request-count * alpha + disconnection on the final graph; infinity if the
/// final graph is disconnected. The profile must be essential for the rule.
Ext individual_cost(const StrategyProfile& s, FormationRule rule,
                    const AdversarySpec& spec, const Rational& alpha, int v);

/// Sum of individual costs; cross-checked against the closed edge form
/// (m*alpha resp. 2m*alpha building plus sum of sep(e)*P(e)).
Ext social_cost(const StrategyProfile& s, FormationRule rule,
                const AdversarySpec& spec, const Rational& alpha);

CostReport cost_report(const StrategyProfile& s, FormationRule rule,
                       const AdversarySpec& spec, const Rational& alpha);

}  // namespace nfg
