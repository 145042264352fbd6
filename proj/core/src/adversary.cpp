#include "nfg/adversary.hpp"

#include <algorithm>
#include <map>

namespace nfg {

namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

std::string adversary_name(const AdversarySpec& spec) {
  if (std::holds_alternative<SimpleMinded>(spec)) return "simple";
  if (std::holds_alternative<Smart>(spec)) return "smart";
  return "custom";
}

const Rational& EdgeDistribution::prob_of(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) throw UnknownEdge("edge " + edge_str(e));
  return probs[it - edges.begin()];
}

EdgeDistribution distribution(const AdversarySpec& spec, const Graph& g) {
  if (g.m() == 0) throw EmptyGraph("graph has no edges");
  if (!is_connected(g)) throw DisconnectedInput("adversary needs a connected graph");

  EdgeDistribution d;
  d.edges = g.edges();
  d.probs.assign(g.m(), Rational(0));

  if (std::holds_alternative<SimpleMinded>(spec)) {
    Rational p(1, g.m());
    std::fill(d.probs.begin(), d.probs.end(), p);
  } else if (std::holds_alternative<Smart>(spec)) {
    BridgeStructure bs(g.n(), g.edges());
    std::int64_t sep_max = 0;
    for (int i = 0; i < g.m(); ++i) sep_max = std::max(sep_max, bs.sep(i));
    int m_max = 0;
    for (int i = 0; i < g.m(); ++i)
      if (bs.sep(i) == sep_max) ++m_max;
    Rational p(1, m_max);
    for (int i = 0; i < g.m(); ++i)
      if (bs.sep(i) == sep_max) d.probs[i] = p;
  } else {
    const auto& table = std::get<Custom>(spec).table;
    Rational total(0);
    std::vector<char> seen(g.m(), 0);
    for (auto [e, p] : table) {
      int idx = g.edge_index(e);
      if (idx < 0) throw InvalidTable("edge " + edge_str(e) + " not in graph");
      if (seen[idx]) throw InvalidTable("duplicate entry for " + edge_str(e));
      if (p < 0) throw InvalidTable("negative probability on " + edge_str(e));
      seen[idx] = 1;
      d.probs[idx] = p;
      total += p;
    }
    if (total != 1)
      throw InvalidTable("probabilities sum to " + format_rational(total));
  }
  return d;
}

CriticalEdges critical_edges(const Graph& g) {
  BridgeStructure bs(g.n(), g.edges());
  if (!bs.connected()) throw DisconnectedInput("critical_edges needs a connected graph");
  CriticalEdges out;
  for (int i = 0; i < g.m(); ++i) out.sep_max = std::max(out.sep_max, bs.sep(i));
  for (int i = 0; i < g.m(); ++i)
    if (bs.sep(i) == out.sep_max) out.edges.push_back(g.edges()[i]);
  out.m_max = static_cast<int>(out.edges.size());
  return out;
}

bool is_symmetric_on(const AdversarySpec& spec, const Graph& g) {
  EdgeDistribution d = distribution(spec, g);
  BridgeStructure bs(g.n(), g.edges());
  std::map<std::int64_t, Rational> by_sep;
  for (int i = 0; i < g.m(); ++i) {
    auto [it, fresh] = by_sep.try_emplace(bs.sep(i), d.probs[i]);
    if (!fresh && it->second != d.probs[i]) return false;
  }
  return true;
}

}  // namespace nfg
