#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfg/cost.hpp"

namespace nfg {

/// NE and MaxNE are relative to unilateral formation, PNE and PS to bilateral.
enum class ConceptKind { NE, MaxNE, PNE, PS };

FormationRule rule_of(ConceptKind c);
std::string to_string(ConceptKind c);
ConceptKind concept_from_string(const std::string& s);

struct SearchLimits {
  std::uint64_t max_candidates = std::uint64_t(1) << 24;
};

/// A strategy change for one player, relative to her current request set.
struct Deviation {
  std::vector<int> add;
  std::vector<int> drop;
  bool empty() const { return add.empty() && drop.empty(); }
};

/// Concrete counterexample attached to a failed verdict. `unilateral` records
/// one player's improving move; otherwise the witness is a joint addition of
/// the absent edge {player, partner} that neither endpoint resists.
struct Witness {
  bool unilateral = true;
  int player = -1;
  Deviation deviation;
  Ext old_cost{0}, new_cost{0};
  int partner = -1;
  Ext old_cost_partner{0}, new_cost_partner{0};
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
};

/// Exhaustive minimization of v's individual cost over her whole strategy
/// space (see the module notes in equilibrium.cpp for the searched sets).
/// Returns the empty deviation and the current cost when nothing strictly
/// better exists.
std::pair<Deviation, Ext> best_unilateral_deviation(
    const StrategyProfile& s, int v, FormationRule rule, const AdversarySpec& spec,
    const Rational& alpha, const SearchLimits& limits = {});

Verdict is_nash(const StrategyProfile& s, const AdversarySpec& spec,
                const Rational& alpha, const SearchLimits& limits = {});
Verdict is_max_nash(const StrategyProfile& s, const AdversarySpec& spec,
                    const Rational& alpha, const SearchLimits& limits = {});
Verdict is_pne(const StrategyProfile& s, const AdversarySpec& spec,
               const Rational& alpha, const SearchLimits& limits = {});
Verdict is_pairwise_stable(const StrategyProfile& s, const AdversarySpec& spec,
                           const Rational& alpha, const SearchLimits& limits = {});

Verdict check_concept(ConceptKind concept, const StrategyProfile& s,
                      const AdversarySpec& spec, const Rational& alpha,
                      const SearchLimits& limits = {});

/// A drop set violating the convexity inequality, with its positive slack
/// (sum of single-drop indirect-cost changes minus the joint change).
struct ConvexityViolation {
  std::vector<int> dropped;
  Rational slack;
};

/// All violating subsets of v's requests with 2 <= k <= max_k, in canonical
/// order. max_k is capped at v's request count.
std::vector<ConvexityViolation> convexity_violations(
    const StrategyProfile& s, int v, FormationRule rule, const AdversarySpec& spec,
    const Rational& alpha, int max_k = 4);

}  // namespace nfg
