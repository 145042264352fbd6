#include "nfg/strategy.hpp"

#include <algorithm>

namespace nfg {

std::string to_string(FormationRule r) {
  return r == FormationRule::Unilateral ? "ulf" : "blf";
}

StrategyProfile::StrategyProfile(int n, std::vector<std::pair<int, int>> requests)
    : n_(n), requests_(std::move(requests)) {
  if (n_ < 1) throw std::invalid_argument("StrategyProfile: n must be >= 1");
  for (auto [v, w] : requests_) {
    if (v == w) throw SelfRequest("(" + std::to_string(v) + "," + std::to_string(w) + ")");
    if (v < 0 || w < 0 || v >= n_ || w >= n_)
      throw std::invalid_argument("StrategyProfile: id out of range");
  }
  std::sort(requests_.begin(), requests_.end());
  if (std::adjacent_find(requests_.begin(), requests_.end()) != requests_.end())
    throw std::invalid_argument("StrategyProfile: duplicate request");
}

bool StrategyProfile::has_request(int v, int w) const {
  return std::binary_search(requests_.begin(), requests_.end(), std::pair{v, w});
}

int StrategyProfile::request_count(int v) const {
  auto lo = std::lower_bound(requests_.begin(), requests_.end(), std::pair{v, 0});
  auto hi = std::lower_bound(requests_.begin(), requests_.end(), std::pair{v + 1, 0});
  return static_cast<int>(hi - lo);
}

std::vector<int> StrategyProfile::targets_of(int v) const {
  std::vector<int> out;
  auto lo = std::lower_bound(requests_.begin(), requests_.end(), std::pair{v, 0});
  for (; lo != requests_.end() && lo->first == v; ++lo) out.push_back(lo->second);
  return out;
}

Graph final_graph(const StrategyProfile& s, FormationRule rule) {
  std::vector<Edge> edges;
  if (rule == FormationRule::Unilateral) {
    for (auto [v, w] : s.requests()) edges.push_back(make_edge(v, w));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  } else {
    for (auto [v, w] : s.requests())
      if (v < w && s.has_request(w, v)) edges.push_back({v, w});
  }
  return Graph(s.n(), std::move(edges));
}

bool is_essential(const StrategyProfile& s, FormationRule rule) {
  for (auto [v, w] : s.requests()) {
    bool mutual = s.has_request(w, v);
    if (rule == FormationRule::Unilateral && mutual) return false;
    if (rule == FormationRule::Bilateral && !mutual) return false;
  }
  return true;
}

StrategyProfile essentialize(const StrategyProfile& s, FormationRule rule) {
  std::vector<std::pair<int, int>> kept;
  for (auto [v, w] : s.requests()) {
    bool mutual = s.has_request(w, v);
    if (rule == FormationRule::Unilateral) {
      if (!mutual || v < w) kept.push_back({v, w});
    } else {
      if (mutual) kept.push_back({v, w});
    }
  }
  return StrategyProfile(s.n(), std::move(kept));
}

StrategyProfile apply_deviation(const StrategyProfile& s, int v,
                                const std::vector<int>& add,
                                const std::vector<int>& drop) {
  if (v < 0 || v >= s.n()) throw UnknownVertex("player " + std::to_string(v));
  for (int w : add)
    if (w == v) throw SelfRequest("player " + std::to_string(v) + " adding itself");
  for (int w : drop)
    if (w == v) throw SelfRequest("player " + std::to_string(v) + " dropping itself");
  for (int w : add)
    if (std::find(drop.begin(), drop.end(), w) != drop.end())
      throw std::invalid_argument("apply_deviation: add and drop overlap");
  auto reqs = s.requests();
  for (int w : drop)
    std::erase(reqs, std::pair{v, w});
  for (int w : add)
    if (!s.has_request(v, w)) reqs.push_back({v, w});
  return StrategyProfile(s.n(), std::move(reqs));
}

StrategyProfile to_bilateral(const StrategyProfile& s) {
  auto reqs = s.requests();
  for (auto [v, w] : s.requests())
    if (!s.has_request(w, v)) reqs.push_back({w, v});
  return StrategyProfile(s.n(), std::move(reqs));
}

}  // namespace nfg
