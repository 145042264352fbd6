#include "nfg/analysis.hpp"

#include <algorithm>
#include <thread>

#include "fast_cost.hpp"

namespace nfg {

namespace {

using detail::BuiltinKind;

constexpr int kUlfEnumerationCap = 5;
constexpr int kBlfEnumerationCap = 6;

void require_positive(const Rational& alpha) {
  if (alpha <= 0) throw NonPositiveAlpha("alpha = " + format_rational(alpha));
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  return pairs;
}

bool mask_connected(int n, const std::vector<Edge>& pairs, std::uint64_t mask,
                    std::vector<int>& uf) {
  uf.assign(n, -1);  // union-find, -1 = root of size 1 (sizes unused)
  auto find = [&](int x) {
    while (uf[x] >= 0) x = uf[x];
    return x;
  };
  int components = n;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    int a = find(pairs[i].u), b = find(pairs[i].v);
    if (a != b) {
      uf[a] = b;
      --components;
    }
  }
  return components == 1;
}

BuiltinKind builtin_kind_checked(const AdversarySpec& spec, const char* what) {
  if (std::holds_alternative<Custom>(spec))
    throw InvalidTable(std::string(what) + ": custom adversaries are bound to one edge set");
  return std::holds_alternative<SimpleMinded>(spec) ? BuiltinKind::Simple
                                                    : BuiltinKind::Smart;
}

Rational social_from_parts(int m, const Rational& alpha, FormationRule rule,
                           const detail::DiscCost& disc) {
  int factor = rule == FormationRule::Bilateral ? 2 : 1;
  return Rational(factor * m) * alpha + Rational(disc.num, disc.den);
}

}  // namespace

std::string to_string(OptimumShape s) {
  switch (s) {
    case OptimumShape::Cycle: return "cycle";
    case OptimumShape::Star: return "star";
    case OptimumShape::Both: return "both";
  }
  return "?";
}

ClosedFormOptimum optimum_closed_form(int n, const Rational& alpha, FormationRule rule) {
  if (n < 3) throw TooSmall("optimum needs n >= 3");
  require_positive(alpha);
  Rational cycle, star;
  if (rule == FormationRule::Unilateral) {
    cycle = Rational(n) * alpha;
    star = Rational(n - 1) * (alpha + 2);
  } else {
    cycle = Rational(2 * n) * alpha;
    star = Rational(2 * (n - 1)) * (alpha + 1);
  }
  if (cycle < star) return {cycle, OptimumShape::Cycle};
  if (star < cycle) return {star, OptimumShape::Star};
  return {cycle, OptimumShape::Both};
}

void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& f) {
  const auto pairs = all_pairs(n);
  if (pairs.size() > 62) throw SearchTooLarge("graph space for n = " + std::to_string(n));
  std::vector<int> uf;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
    if (!mask_connected(n, pairs, mask, uf)) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    if (f(Graph(n, std::move(edges)))) return;
  }
}

OptimumResult brute_force_optimum(int n, const Rational& alpha, FormationRule rule,
                                  const AdversarySpec& spec, int jobs, int max_n) {
  if (n < 3) throw TooSmall("optimum needs n >= 3");
  if (n > max_n)
    throw SearchTooLarge("brute-force optimum capped at n <= " + std::to_string(max_n));
  require_positive(alpha);
  BuiltinKind kind = builtin_kind_checked(spec, "brute_force_optimum");

  const auto pairs = all_pairs(n);
  const std::uint64_t space = std::uint64_t(1) << pairs.size();

  struct Local {
    bool any = false;
    Rational best;
    std::uint64_t best_mask = 0;
    std::uint64_t scanned = 0;
  };

  auto scan = [&](std::uint64_t lo, std::uint64_t hi, Local& out) {
    std::vector<int> uf;
    std::vector<Edge> edges;
    BridgeStructure bs;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (!mask_connected(n, pairs, mask, uf)) continue;
      edges.clear();
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      bs.assign(n, edges);
      ++out.scanned;
      Rational social = social_from_parts(static_cast<int>(edges.size()), alpha, rule,
                                          detail::total_disconnection(bs, kind));
      if (!out.any || social < out.best) {
        out.any = true;
        out.best = social;
        out.best_mask = mask;
      }
    }
  };

  jobs = std::max(1, jobs);
  std::vector<Local> locals(jobs);
  if (jobs == 1) {
    scan(0, space, locals[0]);
  } else {
    std::vector<std::thread> threads;
    std::uint64_t chunk = space / jobs + 1;
    for (int j = 0; j < jobs; ++j)
      threads.emplace_back(scan, j * chunk, std::min(space, (j + 1) * chunk),
                           std::ref(locals[j]));
    for (auto& t : threads) t.join();
  }

  // Deterministic merge: minimum value, then smallest mask.
  Local merged;
  for (const auto& l : locals) {
    merged.scanned += l.scanned;
    if (!l.any) continue;
    if (!merged.any || l.best < merged.best ||
        (l.best == merged.best && l.best_mask < merged.best_mask)) {
      merged.any = true;
      merged.best = l.best;
      merged.best_mask = l.best_mask;
    }
  }

  std::vector<Edge> witness_edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (merged.best_mask >> i & 1) witness_edges.push_back(pairs[i]);
  return {merged.best, Graph(n, std::move(witness_edges)), merged.scanned};
}

namespace {

/// Decodes a base-3 pair assignment into an essential ULF profile; digit 0
/// leaves the pair absent, 1 gives the edge to the smaller id, 2 to the larger.
StrategyProfile ulf_profile_from_code(int n, const std::vector<Edge>& pairs,
                                      std::uint64_t code) {
  std::vector<std::pair<int, int>> reqs;
  for (const Edge& e : pairs) {
    switch (code % 3) {
      case 1: reqs.push_back({e.u, e.v}); break;
      case 2: reqs.push_back({e.v, e.u}); break;
      default: break;
    }
    code /= 3;
  }
  return StrategyProfile(n, std::move(reqs));
}

std::uint64_t pow3(int k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= 3;
  return r;
}

}  // namespace

EnumeratedEquilibria enumerate_equilibria(int n, const Rational& alpha, FormationRule rule,
                                          const AdversarySpec& spec, ConceptKind concept,
                                          const SearchLimits& limits, int jobs) {
  if (n < 3) throw TooSmall("enumeration needs n >= 3");
  require_positive(alpha);
  if (rule_of(concept) != rule)
    throw ConceptMismatch(to_string(concept) + " is not defined under " + to_string(rule));
  const int cap = rule == FormationRule::Unilateral ? kUlfEnumerationCap : kBlfEnumerationCap;
  if (n > cap)
    throw SearchTooLarge("equilibrium enumeration capped at n <= " + std::to_string(cap) +
                         " for " + to_string(rule));

  const auto pairs = all_pairs(n);
  const std::uint64_t space = rule == FormationRule::Unilateral
                                  ? pow3(static_cast<int>(pairs.size()))
                                  : std::uint64_t(1) << pairs.size();

  // Disconnected final graphs are never equilibria: any player can buy edges
  // to every component and move from infinite to finite cost.
  auto profile_at = [&](std::uint64_t code) -> std::optional<StrategyProfile> {
    if (rule == FormationRule::Unilateral) {
      StrategyProfile s = ulf_profile_from_code(n, pairs, code);
      return s;
    }
    std::vector<std::pair<int, int>> reqs;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (code >> i & 1) {
        reqs.push_back({pairs[i].u, pairs[i].v});
        reqs.push_back({pairs[i].v, pairs[i].u});
      }
    return StrategyProfile(n, std::move(reqs));
  };

  struct Local {
    std::vector<std::uint64_t> codes;
  };
  auto scan = [&](std::uint64_t lo, std::uint64_t hi, Local& out) {
    for (std::uint64_t code = lo; code < hi; ++code) {
      StrategyProfile s = *profile_at(code);
      Graph g = final_graph(s, rule);
      if (!is_connected(g)) continue;
      if (check_concept(concept, s, spec, alpha, limits).holds) out.codes.push_back(code);
    }
  };

  jobs = std::max(1, jobs);
  std::vector<Local> locals(jobs);
  if (jobs == 1) {
    scan(0, space, locals[0]);
  } else {
    std::vector<std::thread> threads;
    std::uint64_t chunk = space / jobs + 1;
    for (int j = 0; j < jobs; ++j)
      threads.emplace_back(scan, j * chunk, std::min(space, (j + 1) * chunk),
                           std::ref(locals[j]));
    for (auto& t : threads) t.join();
  }

  EnumeratedEquilibria out;
  for (const auto& l : locals)
    for (std::uint64_t code : l.codes) {
      StrategyProfile s = *profile_at(code);
      Ext sc = social_cost(s, rule, spec, alpha);
      out.profiles.push_back(std::move(s));
      out.social.push_back(sc.value());
    }
  return out;
}

RatioReport anarchy_ratios(int n, const Rational& alpha, FormationRule rule,
                           const AdversarySpec& spec, ConceptKind concept,
                           const SearchLimits& limits, int jobs) {
  RatioReport report{brute_force_optimum(n, alpha, rule, spec, jobs),
                     enumerate_equilibria(n, alpha, rule, spec, concept, limits, jobs),
                     std::nullopt,
                     std::nullopt};
  if (!report.equilibria.social.empty()) {
    auto [lo, hi] = std::minmax_element(report.equilibria.social.begin(),
                                        report.equilibria.social.end());
    report.poa = *hi / report.optimum.value;
    report.pos = *lo / report.optimum.value;
  }
  return report;
}

DynamicsResult better_response_dynamics(const StrategyProfile& s0, FormationRule rule,
                                        const AdversarySpec& spec, const Rational& alpha,
                                        int max_rounds, const SearchLimits& limits) {
  if (!is_essential(s0, rule))
    throw NotEssential("dynamics needs an essential start profile");
  require_positive(alpha);

  DynamicsResult result{s0, 0, false, {}, {}};
  StrategyProfile& s = result.final_profile;

  bool quiet = (max_rounds == 0);  // a full round passed without a move
  for (int round = 1; round <= max_rounds; ++round) {
    bool changed = false;
    for (int v = 0; v < s.n(); ++v) {
      auto [dev, new_cost] = best_unilateral_deviation(s, v, rule, spec, alpha, limits);
      if (dev.empty()) continue;
      Ext old_cost = individual_cost(s, rule, spec, alpha, v);
      if (!(new_cost < old_cost)) continue;
      s = essentialize(apply_deviation(s, v, dev.add, dev.drop), rule);
      result.moves.push_back({round, false, v, -1, dev, old_cost, new_cost});
      changed = true;
    }
    if (rule == FormationRule::Bilateral) {
      for (int v = 0; v < s.n(); ++v) {
        for (int w = v + 1; w < s.n(); ++w) {
          Graph g = final_graph(s, rule);
          if (g.has_edge(v, w)) continue;
          Ext cv = individual_cost(s, rule, spec, alpha, v);
          Ext cw = individual_cost(s, rule, spec, alpha, w);
          StrategyProfile joined = apply_deviation(apply_deviation(s, v, {w}, {}), w, {v}, {});
          Ext cv2 = individual_cost(joined, rule, spec, alpha, v);
          Ext cw2 = individual_cost(joined, rule, spec, alpha, w);
          if (cv2 <= cv && cw2 <= cw && (cv2 < cv || cw2 < cw)) {
            s = joined;
            Deviation d;
            d.add.push_back(w);
            result.moves.push_back({round, true, v, w, d, cv, cv2});
            changed = true;
          }
        }
      }
    }
    result.rounds = round;
    if (!changed) {
      quiet = true;
      break;
    }
  }

  result.final_verdict = rule == FormationRule::Unilateral
                             ? is_nash(s, spec, alpha, limits)
                             : is_pairwise_stable(s, spec, alpha, limits);
  result.converged = quiet && result.final_verdict.holds;
  return result;
}

bool AuditReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const AuditEntry& e) { return e.holds; });
}

namespace {

std::string describe(const Graph& g) {
  std::string s = "m=" + std::to_string(g.m()) + " edges[";
  for (int i = 0; i < g.m(); ++i) {
    if (i) s += ' ';
    s += std::to_string(g.edges()[i].u) + "-" + std::to_string(g.edges()[i].v);
  }
  return s + "]";
}

bool graph_chord_free(const Graph& g) {
  for (Edge e : g.edges())
    if (is_chord(g, e)) return false;
  return true;
}

}  // namespace

AuditReport theorem_audit(const std::vector<StrategyProfile>& profiles,
                          const Rational& alpha, FormationRule rule,
                          const AdversarySpec& spec, ConceptKind concept,
                          const SearchLimits& limits) {
  require_positive(alpha);
  bool simple = std::holds_alternative<SimpleMinded>(spec);
  bool smart = std::holds_alternative<Smart>(spec);

  AuditReport report;
  int index = 0;
  for (const StrategyProfile& s : profiles) {
    if (!check_concept(concept, s, spec, alpha, limits).holds)
      throw ConceptMismatch("profile #" + std::to_string(index) + " fails " +
                            to_string(concept) + " re-verification");
    Graph g = final_graph(s, rule);
    const int n = g.n(), m = g.m();
    std::string inst = "#" + std::to_string(index) + " " + describe(g);
    auto add = [&](const std::string& claim, bool holds, const std::string& details) {
      report.entries.push_back({claim, inst, holds, details});
    };

    Rational social = social_cost(s, rule, spec, alpha).value();
    BridgeStructure bs(n, g.edges());
    int diam = bs.bridge_tree_diameter();

    bool cf = graph_chord_free(g);
    if (rule == FormationRule::Unilateral || smart || alpha > Rational(1, 2)) {
      add("chord-free", cf, cf ? "no chords" : "has a chord");
      add("edge-count-2n-1", m <= 2 * n - 1,
          std::to_string(m) + " vs " + std::to_string(2 * n - 1));
    } else {
      // Simple-minded BLF with alpha <= 1/2: chord-free or few edges.
      bool few = Rational(2) * alpha * (m - 1) * (m - 1) <= Rational(n) * n;
      add("chord-free-or-edge-bound", cf || few,
          "m=" + std::to_string(m) + (cf ? " chord-free" : " chorded"));
    }

    if (rule == FormationRule::Unilateral && simple) {
      auto gi = girth(g);
      bool ok = !gi.has_value() || Rational(*gi) >= alpha + Rational(1, 2);
      add("no-short-cycles", ok,
          gi ? "girth " + std::to_string(*gi) : "acyclic");
      add("bridge-tree-diam-8a", Rational(diam) <= 8 * alpha,
          "diam " + std::to_string(diam));
      add("social-le-10na", social <= Rational(10 * n) * alpha,
          format_rational(social));
    }
    if (rule == FormationRule::Unilateral && smart) {
      auto crit = critical_edges(g);
      bool ok;
      std::string det;
      if (Rational(6) * alpha < Rational(n)) {
        Rational bound = (crit.m_max >= 3 ? Rational(5) : Rational(4)) * n * alpha;
        ok = Rational(crit.sep_max) <= bound;
        det = "sep_max " + std::to_string(crit.sep_max) + " m_max " +
              std::to_string(crit.m_max);
      } else {
        ok = true;  // alpha >= n/6 branch: n^2 <= 6 n alpha covers it
        det = "alpha >= n/6";
      }
      add("sep-max-branch", ok, det);
      add("social-le-8na", social <= Rational(8 * n) * alpha, format_rational(social));
    }
    if (rule == FormationRule::Bilateral && simple && alpha > Rational(1, 2)) {
      bool ok = Rational(diam) * (diam + 1) <= Rational(4 * n) * alpha;
      add("bridge-tree-diam-sq-4na", ok, "diam " + std::to_string(diam));
    }
    ++index;
  }
  return report;
}

std::optional<StrategyProfile> find_ps_not_pne(int n, const Rational& alpha,
                                               const AdversarySpec& spec,
                                               const SearchLimits& limits) {
  if (n > kBlfEnumerationCap)
    throw SearchTooLarge("search capped at n <= " + std::to_string(kBlfEnumerationCap));
  std::optional<StrategyProfile> found;
  for_each_connected_graph(n, [&](const Graph& g) {
    std::vector<std::pair<int, int>> reqs;
    for (Edge e : g.edges()) {
      reqs.push_back({e.u, e.v});
      reqs.push_back({e.v, e.u});
    }
    StrategyProfile s(n, std::move(reqs));
    if (is_pairwise_stable(s, spec, alpha, limits).holds &&
        !is_pne(s, spec, alpha, limits).holds) {
      found = s;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace nfg
