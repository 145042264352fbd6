#pragma once

// Internal integer-arithmetic cost evaluation for the built-in adversaries.
// Deviation searches rebuild graphs millions of times; everything here stays
// in int64/__int128 and is exact. Custom adversaries take the Rational path
// in the callers instead.

#include <cstdint>
#include <span>

#include "nfg/adversary.hpp"
#include "nfg/graph.hpp"
#include "nfg/rational.hpp"

namespace nfg::detail {

struct DiscCost {
  bool infinite = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
};

enum class BuiltinKind { Simple, Smart };

inline DiscCost player_disconnection(const BridgeStructure& bs, BuiltinKind kind, int v) {
  if (!bs.connected()) return {true, 0, 1};
  if (kind == BuiltinKind::Simple) {
    if (bs.m() == 0) return {false, 0, 1};
    return {false, bs.relevance_sum(v), bs.m()};
  }
  std::int64_t sep_max = 0;
  for (int i = 0; i < bs.m(); ++i) sep_max = std::max(sep_max, bs.sep(i));
  if (sep_max == 0) return {false, 0, 1};
  std::int64_t num = 0, m_max = 0;
  for (int i = 0; i < bs.m(); ++i)
    if (bs.sep(i) == sep_max) {
      ++m_max;
      num += bs.rel(i, v);
    }
  return {false, num, m_max};
}

inline DiscCost total_disconnection(const BridgeStructure& bs, BuiltinKind kind) {
  if (!bs.connected()) return {true, 0, 1};
  if (kind == BuiltinKind::Simple) {
    if (bs.m() == 0) return {false, 0, 1};
    std::int64_t sum = 0;
    for (int i : bs.bridge_indices()) sum += bs.sep(i);
    return {false, sum, bs.m()};
  }
  std::int64_t sep_max = 0;
  for (int i = 0; i < bs.m(); ++i) sep_max = std::max(sep_max, bs.sep(i));
  return {false, sep_max, 1};
}

/// Full player cost r*alpha + disc as the pair of an exact comparator.
/// Comparisons cross-multiply in __int128; the magnitudes are guarded by
/// CostContext::fits (tiny denominators, n <= ~10^4, alpha limbs <= 2^40).
struct PlayerCost {
  std::int64_t requests = 0;
  DiscCost disc;
};

class CostContext {
 public:
  CostContext(const Rational& alpha, int n) : alpha_(alpha) {
    fits_ = numerator(alpha) <= BigInt(1) << 40 && denominator(alpha) <= BigInt(1) << 40 &&
            numerator(alpha) >= 0 && n <= (1 << 12);
    if (fits_) {
      p_ = static_cast<std::int64_t>(numerator(alpha));
      q_ = static_cast<std::int64_t>(denominator(alpha));
    }
  }

  bool fits() const { return fits_; }
  const Rational& alpha() const { return alpha_; }

  /// -1, 0, 1 as a <, ==, > b.
  int compare(const PlayerCost& a, const PlayerCost& b) const {
    if (a.disc.infinite || b.disc.infinite) {
      if (a.disc.infinite && b.disc.infinite) return 0;
      return a.disc.infinite ? 1 : -1;
    }
    if (fits_) {
      using I = __int128;
      I lhs = (I(a.requests) * p_ * a.disc.den + I(a.disc.num) * q_) * b.disc.den;
      I rhs = (I(b.requests) * p_ * b.disc.den + I(b.disc.num) * q_) * a.disc.den;
      return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    }
    Rational lhs = a.requests * alpha_ + Rational(a.disc.num, a.disc.den);
    Rational rhs = b.requests * alpha_ + Rational(b.disc.num, b.disc.den);
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
  }

  Ext to_ext(const PlayerCost& c) const {
    if (c.disc.infinite) return Ext::infinity();
    return Ext(Rational(c.requests) * alpha_ + Rational(c.disc.num, c.disc.den));
  }

 private:
  Rational alpha_;
  bool fits_ = false;
  std::int64_t p_ = 0, q_ = 1;
};

}  // namespace nfg::detail
