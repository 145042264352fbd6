#include "nfg/cost.hpp"

#include "nfg/errors.hpp"

namespace nfg {

namespace {

void require_essential(const StrategyProfile& s, FormationRule rule) {
  if (!is_essential(s, rule))
    throw NotEssential("profile is not essential for " + to_string(rule));
}

void require_positive(const Rational& alpha) {
  if (alpha <= 0) throw NonPositiveAlpha("alpha = " + format_rational(alpha));
}

}  // namespace

Rational disconnection_cost(const Graph& g, const EdgeDistribution& dist, int v) {
  if (v < 0 || v >= g.n()) throw UnknownVertex("vertex " + std::to_string(v));
  if (dist.edges != g.edges())
    throw DistributionMismatch("distribution is bound to a different edge set");
  BridgeStructure bs(g.n(), g.edges());
  if (!bs.connected()) throw DisconnectedInput("disconnection_cost needs a connected graph");
  Rational total(0);
  for (int i : bs.bridge_indices())
    if (dist.probs[i] != 0) total += Rational(bs.rel(i, v)) * dist.probs[i];
  return total;
}

Ext individual_cost(const StrategyProfile& s, FormationRule rule,
                    const AdversarySpec& spec, const Rational& alpha, int v) {
  require_essential(s, rule);
  require_positive(alpha);
  if (v < 0 || v >= s.n()) throw UnknownVertex("player " + std::to_string(v));
  Graph g = final_graph(s, rule);
  Rational building = Rational(s.request_count(v)) * alpha;
  if (!is_connected(g)) return Ext::infinity();
  EdgeDistribution dist = distribution(spec, g);
  return Ext(building + disconnection_cost(g, dist, v));
}

Ext social_cost(const StrategyProfile& s, FormationRule rule,
                const AdversarySpec& spec, const Rational& alpha) {
  CostReport r = cost_report(s, rule, spec, alpha);
  return r.social;
}

CostReport cost_report(const StrategyProfile& s, FormationRule rule,
                       const AdversarySpec& spec, const Rational& alpha) {
  require_essential(s, rule);
  require_positive(alpha);
  Graph g = final_graph(s, rule);
  CostReport report;
  report.building.reserve(s.n());
  for (int v = 0; v < s.n(); ++v)
    report.building.push_back(Ext(Rational(s.request_count(v)) * alpha));

  if (!is_connected(g)) {
    report.disconnection.assign(s.n(), Ext::infinity());
    report.total.assign(s.n(), Ext::infinity());
    report.social = Ext::infinity();
    return report;
  }

  EdgeDistribution dist = distribution(spec, g);
  BridgeStructure bs(g.n(), g.edges());
  Ext social(0);
  for (int v = 0; v < s.n(); ++v) {
    Rational disc(0);
    for (int i : bs.bridge_indices())
      if (dist.probs[i] != 0) disc += Rational(bs.rel(i, v)) * dist.probs[i];
    report.disconnection.push_back(Ext(disc));
    report.total.push_back(report.building[v] + Ext(disc));
    social += report.total.back();
  }

  // Closed edge form must agree exactly with the per-player sum.
  Rational edge_form = Rational(g.m()) * alpha * (rule == FormationRule::Bilateral ? 2 : 1);
  for (int i = 0; i < g.m(); ++i)
    if (dist.probs[i] != 0) edge_form += Rational(bs.sep(i)) * dist.probs[i];
  if (Ext(edge_form) != social)
    throw std::logic_error("social cost: edge form disagrees with player sum");
  report.social = social;
  return report;
}

}  // namespace nfg
