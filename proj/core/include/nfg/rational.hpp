#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nfg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Rational extended with a single absorbing +infinity, used for the cost of
/// disconnected final graphs. Infinity compares greater than every finite
/// value and is absorbing under addition.
class Ext {
 public:
  Ext() : inf_(false), v_(0) {}
  Ext(Rational v) : inf_(false), v_(std::move(v)) {}
  Ext(int v) : inf_(false), v_(v) {}
  Ext(long long v) : inf_(false), v_(v) {}

  static Ext infinity() {
    Ext e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// The finite value; must not be called on infinity.
  const Rational& value() const {
    if (inf_) throw std::logic_error("Ext::value on infinity");
    return v_;
  }

  Ext& operator+=(const Ext& o) {
    if (o.inf_) inf_ = true;
    if (!inf_) v_ += o.v_;
    return *this;
  }
  friend Ext operator+(Ext a, const Ext& b) { return a += b; }

  /// a - b with b finite; infinity - finite stays infinity.
  friend Ext operator-(const Ext& a, const Ext& b) {
    if (b.inf_) throw std::logic_error("Ext: subtracting infinity");
    if (a.inf_) return infinity();
    return Ext(a.v_ - b.v_);
  }

  /// a / b with b finite and nonzero.
  friend Ext operator/(const Ext& a, const Ext& b) {
    if (b.inf_ || b.v_ == 0) throw std::logic_error("Ext: bad divisor");
    if (a.inf_) return infinity();
    return Ext(Rational(a.v_ / b.v_));
  }

  friend bool operator==(const Ext& a, const Ext& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Ext& a, const Ext& b) { return !(a == b); }
  friend bool operator<(const Ext& a, const Ext& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const Ext& a, const Ext& b) { return b < a; }
  friend bool operator<=(const Ext& a, const Ext& b) { return !(b < a); }
  friend bool operator>=(const Ext& a, const Ext& b) { return !(a < b); }

 private:
  bool inf_;
  Rational v_;
};

/// "p/q" with an explicit denominator, e.g. "14/1". Matches the report formats.
std::string format_rational(const Rational& r);

/// "p/q" for finite values, "inf" for infinity.
std::string format_ext(const Ext& e);

/// Accepts "p/q" or a plain integer (promoted to q=1). Throws ParseError.
Rational parse_rational(const std::string& s);

}  // namespace nfg
