#include "nfg/equilibrium.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

#include "fast_cost.hpp"

// Deviation spaces actually searched, per rule:
//
//  ULF, player v: every request set R that is a subset of
//    {w != v : (w,v) not requested}. Requesting an edge the partner already
//    provides only wastes alpha, so those targets are excluded. Sets with
//    |R| * alpha >= current cost cannot strictly improve (disconnection cost
//    is nonnegative) and are skipped; the skip keeps the returned minimum
//    exact.
//
//  BLF, player v: additions never materialize under bilateral consent and
//    only cost alpha, so the search space is the drop subsets of v's mutual
//    edges.
//
// The budget guard counts the candidate sets that survive the sound pruning.

namespace nfg {

FormationRule rule_of(ConceptKind c) {
  return (c == ConceptKind::NE || c == ConceptKind::MaxNE) ? FormationRule::Unilateral
                                                           : FormationRule::Bilateral;
}

std::string to_string(ConceptKind c) {
  switch (c) {
    case ConceptKind::NE: return "ne";
    case ConceptKind::MaxNE: return "maxne";
    case ConceptKind::PNE: return "pne";
    case ConceptKind::PS: return "ps";
  }
  return "?";
}

ConceptKind concept_from_string(const std::string& s) {
  if (s == "ne") return ConceptKind::NE;
  if (s == "maxne") return ConceptKind::MaxNE;
  if (s == "pne") return ConceptKind::PNE;
  if (s == "ps") return ConceptKind::PS;
  throw ParseError("unknown concept '" + s + "'");
}

namespace {

using detail::BuiltinKind;

void require_essential(const StrategyProfile& s, FormationRule rule) {
  if (!is_essential(s, rule))
    throw NotEssential("profile is not essential for " + to_string(rule));
}

void require_positive(const Rational& alpha) {
  if (alpha <= 0) throw NonPositiveAlpha("alpha = " + format_rational(alpha));
}

/// f(idx) over all k-combinations of {0..c-1} in lexicographic order;
/// f returning true stops the walk.
template <class F>
bool for_each_combination(int c, int k, F&& f) {
  if (k > c) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(static_cast<const std::vector<int>&>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == c - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Sum of C(c,k) for k <= kmax, saturating just above cap.
std::uint64_t subsets_up_to(int c, int kmax, std::uint64_t cap) {
  std::uint64_t total = 0, binom = 1;
  for (int k = 0; k <= std::min(kmax, c); ++k) {
    total += binom;
    if (total > cap) return cap + 1;
    binom = binom * (c - k) / (k + 1);
    if (binom > cap) binom = cap + 1;
  }
  return total;
}

std::uint64_t power_of_two(int e, std::uint64_t cap) {
  if (e >= 63) return cap + 1;
  return std::min<std::uint64_t>(std::uint64_t(1) << e, cap + 1);
}

// Exact evaluators behind a common interface. The builtin one keeps all
// arithmetic in machine integers; the generic one goes through the public
// Rational pipeline and also serves Custom adversaries.

struct BuiltinEval {
  using Cost = detail::PlayerCost;

  detail::CostContext ctx;
  BuiltinKind kind;
  BridgeStructure bs;

  BuiltinEval(const Rational& alpha, int n, BuiltinKind k) : ctx(alpha, n), kind(k) {}

  Cost eval(int n, std::span<const Edge> edges, int requests, int v) {
    bs.assign(n, edges);
    return {requests, detail::player_disconnection(bs, kind, v)};
  }
  std::pair<Cost, Cost> eval_pair(int n, std::span<const Edge> edges, int rv, int v,
                                  int rw, int w) {
    bs.assign(n, edges);
    return {{rv, detail::player_disconnection(bs, kind, v)},
            {rw, detail::player_disconnection(bs, kind, w)}};
  }
  Cost pure_building(int requests) const { return {requests, {false, 0, 1}}; }
  int cmp(const Cost& a, const Cost& b) const { return ctx.compare(a, b); }
  Ext to_ext(const Cost& c) const { return ctx.to_ext(c); }
};

struct GenericEval {
  using Cost = Ext;

  Rational alpha;
  const AdversarySpec* spec;
  int n_hint;

  GenericEval(const Rational& a, int n, const AdversarySpec* s)
      : alpha(a), spec(s), n_hint(n) {}

  Cost eval(int n, std::span<const Edge> edges, int requests, int v) {
    Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (!is_connected(g)) return Ext::infinity();
    EdgeDistribution dist = distribution(*spec, g);
    return Ext(Rational(requests) * alpha + disconnection_cost(g, dist, v));
  }
  std::pair<Cost, Cost> eval_pair(int n, std::span<const Edge> edges, int rv, int v,
                                  int rw, int w) {
    Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (!is_connected(g)) return {Ext::infinity(), Ext::infinity()};
    EdgeDistribution dist = distribution(*spec, g);
    return {Ext(Rational(rv) * alpha + disconnection_cost(g, dist, v)),
            Ext(Rational(rw) * alpha + disconnection_cost(g, dist, w))};
  }
  Cost pure_building(int requests) const { return Ext(Rational(requests) * alpha); }
  int cmp(const Cost& a, const Cost& b) const { return a < b ? -1 : b < a ? 1 : 0; }
  Ext to_ext(const Cost& c) const { return c; }
};

template <class Eval>
struct UlfSearch {
  bool improved = false;
  std::vector<int> best_requests;
  typename Eval::Cost current, best;
};

/// stop_at_first: return on the first strict improvement instead of the
/// minimum; verdicts only need one witness.
template <class Eval>
UlfSearch<Eval> ulf_best_deviation_impl(Eval& ev, const StrategyProfile& s, int v,
                                        const SearchLimits& limits,
                                        bool stop_at_first = false) {
  const int n = s.n();
  std::vector<Edge> buf;
  for (auto [x, w] : s.requests())
    if (x != v) buf.push_back(make_edge(x, w));
  const std::size_t base_size = buf.size();

  std::vector<int> cand;
  for (int w = 0; w < n; ++w)
    if (w != v && !s.has_request(w, v)) cand.push_back(w);
  const int c = static_cast<int>(cand.size());

  const std::vector<int> targets = s.targets_of(v);
  for (int w : targets) buf.push_back(make_edge(v, w));
  UlfSearch<Eval> out;
  out.current = ev.eval(n, buf, static_cast<int>(targets.size()), v);
  out.best = out.current;
  out.best_requests = targets;

  int kmax = 0;
  while (kmax < c && ev.cmp(ev.pure_building(kmax + 1), out.current) < 0) ++kmax;
  if (ev.cmp(ev.pure_building(0), out.current) >= 0) kmax = -1;  // nothing can beat cost 0

  if (subsets_up_to(c, kmax, limits.max_candidates) > limits.max_candidates)
    throw SearchTooLarge("player " + std::to_string(v) + ": deviation space over budget");

  for (int k = 0; k <= kmax; ++k) {
    bool stopped = for_each_combination(c, k, [&](const std::vector<int>& idx) {
      buf.resize(base_size);
      for (int i : idx) buf.push_back(make_edge(v, cand[i]));
      auto cost = ev.eval(n, buf, k, v);
      if (ev.cmp(cost, out.best) < 0) {
        out.best = cost;
        out.best_requests.clear();
        for (int i : idx) out.best_requests.push_back(cand[i]);
        out.improved = true;
        return stop_at_first;
      }
      return false;
    });
    if (stopped) break;
  }
  return out;
}

template <class Eval>
UlfSearch<Eval> blf_best_drop_impl(Eval& ev, const StrategyProfile& s, int v,
                                   const SearchLimits& limits,
                                   const std::vector<Edge>& final_edges,
                                   bool stop_at_first = false) {
  const int n = s.n();
  const std::vector<int> targets = s.targets_of(v);  // == mutual partners
  const int deg = static_cast<int>(targets.size());

  UlfSearch<Eval> out;
  out.current = ev.eval(n, final_edges, deg, v);
  out.best = out.current;
  out.best_requests = targets;

  if (power_of_two(deg, limits.max_candidates) > limits.max_candidates)
    throw SearchTooLarge("player " + std::to_string(v) + ": drop space over budget");

  std::vector<Edge> buf;
  buf.reserve(final_edges.size());
  for (int k = 1; k <= deg; ++k) {
    bool stopped = for_each_combination(deg, k, [&](const std::vector<int>& idx) {
      buf.clear();
      for (Edge e : final_edges) {
        bool dropped = false;
        for (int i : idx)
          if (e == make_edge(v, targets[i])) {
            dropped = true;
            break;
          }
        if (!dropped) buf.push_back(e);
      }
      auto cost = ev.eval(n, buf, deg - k, v);
      if (ev.cmp(cost, out.best) < 0) {
        out.best = cost;
        out.best_requests.clear();
        for (int j = 0; j < deg; ++j)
          if (std::find(idx.begin(), idx.end(), j) == idx.end())
            out.best_requests.push_back(targets[j]);
        out.improved = true;
        return stop_at_first;
      }
      return false;
    });
    if (stopped) break;
  }
  return out;
}

Deviation diff_to_deviation(const std::vector<int>& targets, const std::vector<int>& chosen) {
  Deviation d;
  for (int w : chosen)
    if (!std::binary_search(targets.begin(), targets.end(), w)) d.add.push_back(w);
  std::vector<int> sorted_chosen = chosen;
  std::sort(sorted_chosen.begin(), sorted_chosen.end());
  for (int w : targets)
    if (!std::binary_search(sorted_chosen.begin(), sorted_chosen.end(), w)) d.drop.push_back(w);
  return d;
}

template <class Eval>
std::pair<Deviation, Ext> best_deviation_dispatch(Eval& ev, const StrategyProfile& s, int v,
                                                  FormationRule rule,
                                                  const SearchLimits& limits) {
  if (rule == FormationRule::Unilateral) {
    auto r = ulf_best_deviation_impl(ev, s, v, limits);
    return {diff_to_deviation(s.targets_of(v), r.best_requests), ev.to_ext(r.best)};
  }
  auto r = blf_best_drop_impl(ev, s, v, limits, final_graph(s, rule).edges());
  return {diff_to_deviation(s.targets_of(v), r.best_requests), ev.to_ext(r.best)};
}

template <class Eval>
Verdict nash_impl(Eval& ev, const StrategyProfile& s, const SearchLimits& limits) {
  for (int v = 0; v < s.n(); ++v) {
    auto r = ulf_best_deviation_impl(ev, s, v, limits, /*stop_at_first=*/true);
    if (r.improved) {
      Witness w;
      w.unilateral = true;
      w.player = v;
      w.deviation = diff_to_deviation(s.targets_of(v), r.best_requests);
      w.old_cost = ev.to_ext(r.current);
      w.new_cost = ev.to_ext(r.best);
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

template <class Eval>
Verdict max_nash_impl(Eval& ev, const StrategyProfile& s, const SearchLimits& limits) {
  Verdict ne = nash_impl(ev, s, limits);
  if (!ne.holds) return ne;

  Graph g = final_graph(s, FormationRule::Unilateral);
  const int n = s.n();
  std::vector<Edge> buf;
  for (int v = 0; v < n; ++v) {
    std::vector<int> absent;
    for (int w = 0; w < n; ++w)
      if (w != v && !g.has_edge(v, w)) absent.push_back(w);
    const int c = static_cast<int>(absent.size());
    const int rv = s.request_count(v);
    auto current = ev.eval(n, g.edges(), rv, v);

    // Additions of k links cost k*alpha against a gain of at most the
    // current disconnection cost; larger k always strictly hurts.
    int kmax = 0;
    typename Eval::Cost disc_only = current;
    if constexpr (std::is_same_v<Eval, BuiltinEval>) {
      disc_only.requests = 0;
    } else {
      disc_only = current - ev.pure_building(rv);
    }
    while (kmax < c && ev.cmp(ev.pure_building(kmax + 1), disc_only) <= 0) ++kmax;

    if (subsets_up_to(c, kmax, limits.max_candidates) > limits.max_candidates)
      throw SearchTooLarge("player " + std::to_string(v) + ": addition space over budget");

    for (int k = 1; k <= kmax; ++k) {
      Witness found;
      bool failed = for_each_combination(c, k, [&](const std::vector<int>& idx) {
        buf.assign(g.edges().begin(), g.edges().end());
        for (int i : idx) buf.push_back(make_edge(v, absent[i]));
        auto cost = ev.eval(n, buf, rv + k, v);
        if (ev.cmp(cost, current) <= 0) {
          found.unilateral = true;
          found.player = v;
          for (int i : idx) found.deviation.add.push_back(absent[i]);
          found.old_cost = ev.to_ext(current);
          found.new_cost = ev.to_ext(cost);
          return true;
        }
        return false;
      });
      if (failed) return {false, found};
    }
  }
  return {true, std::nullopt};
}

/// Shared pair-addition condition of PNE and PS: an absent edge both
/// endpoints tolerate (neither strictly worsens) breaks the equilibrium.
template <class Eval>
std::optional<Witness> pair_addition_violation(Eval& ev, const StrategyProfile& s,
                                               const Graph& g,
                                               const std::vector<typename Eval::Cost>& current) {
  const int n = s.n();
  std::vector<Edge> buf;
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (g.has_edge(v, w)) continue;
      buf.assign(g.edges().begin(), g.edges().end());
      buf.push_back({v, w});
      auto [cv, cw] =
          ev.eval_pair(n, buf, s.request_count(v) + 1, v, s.request_count(w) + 1, w);
      if (ev.cmp(cv, current[v]) <= 0 && ev.cmp(cw, current[w]) <= 0) {
        Witness wit;
        wit.unilateral = false;
        wit.player = v;
        wit.partner = w;
        wit.old_cost = ev.to_ext(current[v]);
        wit.new_cost = ev.to_ext(cv);
        wit.old_cost_partner = ev.to_ext(current[w]);
        wit.new_cost_partner = ev.to_ext(cw);
        return wit;
      }
    }
  }
  return std::nullopt;
}

template <class Eval>
std::vector<typename Eval::Cost> current_costs(Eval& ev, const StrategyProfile& s,
                                               const Graph& g) {
  std::vector<typename Eval::Cost> out;
  out.reserve(s.n());
  for (int v = 0; v < s.n(); ++v)
    out.push_back(ev.eval(s.n(), g.edges(), s.request_count(v), v));
  return out;
}

template <class Eval>
Verdict pne_impl(Eval& ev, const StrategyProfile& s, const SearchLimits& limits) {
  Graph g = final_graph(s, FormationRule::Bilateral);
  auto current = current_costs(ev, s, g);

  for (int v = 0; v < s.n(); ++v) {
    auto r = blf_best_drop_impl(ev, s, v, limits, g.edges(), /*stop_at_first=*/true);
    if (r.improved) {
      Witness w;
      w.unilateral = true;
      w.player = v;
      w.deviation = diff_to_deviation(s.targets_of(v), r.best_requests);
      w.old_cost = ev.to_ext(r.current);
      w.new_cost = ev.to_ext(r.best);
      return {false, w};
    }
  }
  if (auto w = pair_addition_violation(ev, s, g, current)) return {false, *w};
  return {true, std::nullopt};
}

template <class Eval>
Verdict ps_impl(Eval& ev, const StrategyProfile& s, const SearchLimits& limits) {
  Graph g = final_graph(s, FormationRule::Bilateral);
  auto current = current_costs(ev, s, g);

  std::vector<Edge> buf;
  for (Edge e : g.edges()) {
    for (int side = 0; side < 2; ++side) {
      int v = side == 0 ? e.u : e.v;
      int w = side == 0 ? e.v : e.u;
      buf.clear();
      for (Edge f : g.edges())
        if (f != e) buf.push_back(f);
      auto cost = ev.eval(s.n(), buf, s.request_count(v) - 1, v);
      if (ev.cmp(cost, current[v]) < 0) {
        Witness wit;
        wit.unilateral = true;
        wit.player = v;
        wit.deviation.drop.push_back(w);
        wit.old_cost = ev.to_ext(current[v]);
        wit.new_cost = ev.to_ext(cost);
        return {false, wit};
      }
    }
  }
  if (auto w = pair_addition_violation(ev, s, g, current)) return {false, *w};
  return {true, std::nullopt};
}

bool uses_builtin(const AdversarySpec& spec) {
  return !std::holds_alternative<Custom>(spec);
}

BuiltinKind builtin_kind(const AdversarySpec& spec) {
  return std::holds_alternative<SimpleMinded>(spec) ? BuiltinKind::Simple
                                                    : BuiltinKind::Smart;
}

}  // namespace

std::pair<Deviation, Ext> best_unilateral_deviation(const StrategyProfile& s, int v,
                                                    FormationRule rule,
                                                    const AdversarySpec& spec,
                                                    const Rational& alpha,
                                                    const SearchLimits& limits) {
  require_essential(s, rule);
  require_positive(alpha);
  if (v < 0 || v >= s.n()) throw UnknownVertex("player " + std::to_string(v));
  if (uses_builtin(spec)) {
    BuiltinEval ev(alpha, s.n(), builtin_kind(spec));
    return best_deviation_dispatch(ev, s, v, rule, limits);
  }
  GenericEval ev(alpha, s.n(), &spec);
  return best_deviation_dispatch(ev, s, v, rule, limits);
}

Verdict is_nash(const StrategyProfile& s, const AdversarySpec& spec, const Rational& alpha,
                const SearchLimits& limits) {
  require_essential(s, FormationRule::Unilateral);
  require_positive(alpha);
  if (uses_builtin(spec)) {
    BuiltinEval ev(alpha, s.n(), builtin_kind(spec));
    return nash_impl(ev, s, limits);
  }
  GenericEval ev(alpha, s.n(), &spec);
  return nash_impl(ev, s, limits);
}

Verdict is_max_nash(const StrategyProfile& s, const AdversarySpec& spec,
                    const Rational& alpha, const SearchLimits& limits) {
  require_essential(s, FormationRule::Unilateral);
  require_positive(alpha);
  if (uses_builtin(spec)) {
    BuiltinEval ev(alpha, s.n(), builtin_kind(spec));
    return max_nash_impl(ev, s, limits);
  }
  GenericEval ev(alpha, s.n(), &spec);
  return max_nash_impl(ev, s, limits);
}

Verdict is_pne(const StrategyProfile& s, const AdversarySpec& spec, const Rational& alpha,
               const SearchLimits& limits) {
  require_essential(s, FormationRule::Bilateral);
  require_positive(alpha);
  if (uses_builtin(spec)) {
    BuiltinEval ev(alpha, s.n(), builtin_kind(spec));
    return pne_impl(ev, s, limits);
  }
  GenericEval ev(alpha, s.n(), &spec);
  return pne_impl(ev, s, limits);
}

Verdict is_pairwise_stable(const StrategyProfile& s, const AdversarySpec& spec,
                           const Rational& alpha, const SearchLimits& limits) {
  require_essential(s, FormationRule::Bilateral);
  require_positive(alpha);
  if (uses_builtin(spec)) {
    BuiltinEval ev(alpha, s.n(), builtin_kind(spec));
    return ps_impl(ev, s, limits);
  }
  GenericEval ev(alpha, s.n(), &spec);
  return ps_impl(ev, s, limits);
}

Verdict check_concept(ConceptKind concept, const StrategyProfile& s,
                      const AdversarySpec& spec, const Rational& alpha,
                      const SearchLimits& limits) {
  switch (concept) {
    case ConceptKind::NE: return is_nash(s, spec, alpha, limits);
    case ConceptKind::MaxNE: return is_max_nash(s, spec, alpha, limits);
    case ConceptKind::PNE: return is_pne(s, spec, alpha, limits);
    case ConceptKind::PS: return is_pairwise_stable(s, spec, alpha, limits);
  }
  throw std::logic_error("unreachable");
}

std::vector<ConvexityViolation> convexity_violations(const StrategyProfile& s, int v,
                                                     FormationRule rule,
                                                     const AdversarySpec& spec,
                                                     const Rational& alpha, int max_k) {
  require_essential(s, rule);
  require_positive(alpha);
  if (v < 0 || v >= s.n()) throw UnknownVertex("player " + std::to_string(v));

  const std::vector<int> targets = s.targets_of(v);
  const int r = static_cast<int>(targets.size());
  const int kcap = std::min(max_k, r);

  auto indirect = [&](const std::vector<int>& drop) -> Ext {
    StrategyProfile dev = apply_deviation(s, v, {}, drop);
    Graph g = final_graph(dev, rule);
    if (!is_connected(g)) return Ext::infinity();
    EdgeDistribution dist = distribution(spec, g);
    return Ext(disconnection_cost(g, dist, v));
  };

  Ext base = indirect({});
  if (base.is_infinite()) return {};  // every drop stays disconnected

  std::vector<Ext> single(r);
  for (int i = 0; i < r; ++i) single[i] = indirect({targets[i]});

  std::vector<ConvexityViolation> out;
  for (int k = 2; k <= kcap; ++k) {
    for_each_combination(r, k, [&](const std::vector<int>& idx) {
      std::vector<int> drop;
      for (int i : idx) drop.push_back(targets[i]);
      Ext joint = indirect(drop);
      // Rearranged to avoid infinity - infinity:
      //   joint + (k-1) * base  >=  sum of singles
      Ext lhs = joint;
      for (int i = 1; i < k; ++i) lhs += base;
      Ext rhs(0);
      for (int i : idx) rhs += single[i];
      if (lhs < rhs) {
        Rational slack = rhs.value() - (joint.value() + Rational(k - 1) * base.value());
        out.push_back({drop, slack});
      }
      return false;
    });
  }
  return out;
}

}  // namespace nfg
