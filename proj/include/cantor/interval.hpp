#pragma once

#include <algorithm>
#include <ostream>
#include <string>

#include "cantor/rational.hpp"

namespace cantor {

/// Three-valued answer of a certified predicate.
enum class Verdict { False = 0, True = 1, Inconclusive = 2 };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

inline std::ostream& operator<<(std::ostream& os, Verdict v) { return os << to_string(v); }

inline Verdict operator&&(Verdict a, Verdict b) {
  if (a == Verdict::False || b == Verdict::False) return Verdict::False;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::True;
}

/// Closed rational enclosure [lo, hi] of a real quantity. lo == hi means
/// the quantity is known exactly.
class RatInterval {
public:
  RatInterval() = default;
  RatInterval(Rational exact) : lo_(exact), hi_(lo_) {}  // NOLINT(google-explicit-constructor)
  RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw InvalidInput("RatInterval with hi < lo");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool exact() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  RatInterval& operator+=(const RatInterval& o) {
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
  }
  RatInterval& operator-=(const RatInterval& o) {
    Rational lo = lo_ - o.hi_;
    hi_ -= o.lo_;
    lo_ = std::move(lo);
    return *this;
  }

  friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
  friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }
  friend RatInterval operator*(const RatInterval& a, const Rational& s) {
    return s >= 0 ? RatInterval(a.lo_ * s, a.hi_ * s) : RatInterval(a.hi_ * s, a.lo_ * s);
  }
  friend RatInterval operator*(const Rational& s, const RatInterval& a) { return a * s; }

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatInterval& x) {
    if (x.exact()) return os << to_string(x.lo_);
    return os << '[' << to_string(x.lo_) << ", " << to_string(x.hi_) << ']';
  }

private:
  Rational lo_;
  Rational hi_;
};

inline RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

/// Certified a < b.
inline Verdict certainly_less(const RatInterval& a, const RatInterval& b) {
  if (a.hi() < b.lo()) return Verdict::True;
  if (a.lo() >= b.hi()) return Verdict::False;
  return Verdict::Inconclusive;
}

/// Certified a <= b.
inline Verdict certainly_leq(const RatInterval& a, const RatInterval& b) {
  if (a.hi() <= b.lo()) return Verdict::True;
  if (a.lo() > b.hi()) return Verdict::False;
  return Verdict::Inconclusive;
}

/// Certified a == b; only exact equal enclosures answer true.
inline Verdict certainly_equal(const RatInterval& a, const RatInterval& b) {
  if (a.exact() && b.exact()) return a.lo() == b.lo() ? Verdict::True : Verdict::False;
  if (a.hi() < b.lo() || b.hi() < a.lo()) return Verdict::False;
  return Verdict::Inconclusive;
}

inline std::string to_string(const RatInterval& x) {
  return x.exact() ? to_string(x.lo()) : "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]";
}

}  // namespace cantor
