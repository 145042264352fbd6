#pragma once

#include <string>
#include <vector>

#include "nfg/graph.hpp"

namespace nfg {

enum class FormationRule { Unilateral, Bilateral };

std::string to_string(FormationRule r);

/// Directed request relation over n players: (v,w) means v asks for {v,w}.
class StrategyProfile {
 public:
  explicit StrategyProfile(int n, std::vector<std::pair<int, int>> requests = {});

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& requests() const { return requests_; }
  bool has_request(int v, int w) const;
  int request_count(int v) const;
  /// Targets w with (v,w) in the relation, ascending.
  std::vector<int> targets_of(int v) const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  int n_;
  std::vector<std::pair<int, int>> requests_;  // sorted, unique
};

Graph final_graph(const StrategyProfile& s, FormationRule rule);
bool is_essential(const StrategyProfile& s, FormationRule rule);

/// Drops unnecessary (ULF) or useless (BLF) requests; the final graph is
/// unchanged. ULF tie-break: of a mutual pair, the smaller owner survives.
StrategyProfile essentialize(const StrategyProfile& s, FormationRule rule);

/// S + {(v,w) : w in add} - {(v,w) : w in drop}; other players untouched.
StrategyProfile apply_deviation(const StrategyProfile& s, int v,
                                const std::vector<int>& add,
                                const std::vector<int>& drop);

/// Symmetrized profile: same final graph under BLF as s has under ULF.
StrategyProfile to_bilateral(const StrategyProfile& s);

}  // namespace nfg
