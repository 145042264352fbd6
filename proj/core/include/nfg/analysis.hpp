#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nfg/equilibrium.hpp"

namespace nfg {

enum class OptimumShape { Cycle, Star, Both };

std::string to_string(OptimumShape s);

/// min(n*alpha, (n-1)(alpha+2)) under ULF, min(2n*alpha, 2(n-1)(alpha+1))
/// under BLF, with the achieving topology. Adversary-independent.
struct ClosedFormOptimum {
  Rational value;
  OptimumShape shape;
};
ClosedFormOptimum optimum_closed_form(int n, const Rational& alpha, FormationRule rule);

/// Exact minimum social cost over all connected labeled graphs on n
/// vertices; the witness is the minimizer with the smallest edge bitmask.
struct OptimumResult {
  Rational value;
  Graph witness;
  std::uint64_t graphs_scanned = 0;
};
OptimumResult brute_force_optimum(int n, const Rational& alpha, FormationRule rule,
                                  const AdversarySpec& spec, int jobs = 1,
                                  int max_n = 7);

/// All essential profiles passing the concept verifier. ULF enumerates every
/// orientation-or-absence assignment per vertex pair (capped at n <= 5); BLF
/// enumerates final graphs (n <= 6).
struct EnumeratedEquilibria {
  std::vector<StrategyProfile> profiles;
  std::vector<Rational> social;
};
EnumeratedEquilibria enumerate_equilibria(int n, const Rational& alpha, FormationRule rule,
                                          const AdversarySpec& spec, ConceptKind concept,
                                          const SearchLimits& limits = {}, int jobs = 1);

/// Optimum, the equilibrium set, and both prices. poa/pos are empty when no
/// equilibrium exists for the parameters.
struct RatioReport {
  OptimumResult optimum;
  EnumeratedEquilibria equilibria;
  std::optional<Rational> poa, pos;
};
RatioReport anarchy_ratios(int n, const Rational& alpha, FormationRule rule,
                           const AdversarySpec& spec, ConceptKind concept,
                           const SearchLimits& limits = {}, int jobs = 1);

struct DynamicsMove {
  int round = 0;
  bool pair_move = false;
  int player = -1, partner = -1;
  Deviation deviation;
  Ext old_cost{0}, new_cost{0};
};

struct DynamicsResult {
  StrategyProfile final_profile;
  int rounds = 0;
  bool converged = false;
  std::vector<DynamicsMove> moves;
  Verdict final_verdict;  // NE under ULF, PS under BLF
};

/// Round-robin better-response dynamics: each player in id order moves to her
/// best strict improvement; under BLF, consenting pair additions follow in
/// lexicographic order and profiles are re-essentialized after drops.
/// converged means a full quiet round was reached and the matching concept
/// verifier accepts the final profile.
DynamicsResult better_response_dynamics(const StrategyProfile& s0, FormationRule rule,
                                        const AdversarySpec& spec, const Rational& alpha,
                                        int max_rounds, const SearchLimits& limits = {});

struct AuditEntry {
  std::string claim;
  std::string instance;
  bool holds = true;
  std::string details;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  bool all_hold() const;
};

/// Re-verifies every profile for the concept (ConceptMismatch otherwise) and
/// evaluates each applicable structural claim exactly. See audit_claims in
/// analysis.cpp for the claim catalogue.
AuditReport theorem_audit(const std::vector<StrategyProfile>& profiles,
                          const Rational& alpha, FormationRule rule,
                          const AdversarySpec& spec, ConceptKind concept,
                          const SearchLimits& limits = {});

/// Exhaustive small-n search for a pairwise-stable profile that is not a
/// pairwise Nash equilibrium. Returns the first such profile or nothing;
/// whether one exists for the smart adversary is an open question.
std::optional<StrategyProfile> find_ps_not_pne(int n, const Rational& alpha,
                                               const AdversarySpec& spec,
                                               const SearchLimits& limits = {});

/// Calls f for every connected labeled graph on n vertices, in ascending
/// edge-bitmask order; f returning true stops the walk.
void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& f);

}  // namespace nfg
