#ifndef QSI_INTERVAL_HPP
#define QSI_INTERVAL_HPP

#include <algorithm>

#include "qsi/rational.hpp"

namespace qsi {

// Closed rational interval [lo, hi]; arithmetic is exact, so the usual
// floating-point rounding directions do not apply.
struct RatInterval {
  Rational lo, hi;

  RatInterval() = default;
  explicit RatInterval(const Rational& v) : lo(v), hi(v) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  // +1, -1 when sign-definite, 0 when the interval straddles zero.
  int sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {std::move(lo), std::move(hi)};
  }
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    // caller must guarantee 0 not in b
    RatInterval inv{b.hi.inverse(), b.lo.inverse()};
    if (b.lo.sign() > 0) inv = {b.hi.inverse(), b.lo.inverse()};
    else inv = {b.hi.inverse(), b.lo.inverse()};
    return a * inv;
  }
  RatInterval operator-() const { return {-hi, -lo}; }

  RatInterval pow(unsigned e) const {
    if (e == 0) return RatInterval(Rational(1));
    RatInterval r = *this;
    for (unsigned k = 1; k < e; ++k) r = r * *this;
    // tighten even powers around zero
    if (e % 2 == 0 && contains_zero()) r.lo = Rational(0);
    return r;
  }

  double mid_double() const { return ((lo + hi) * Rational(1, 2)).to_double(); }
};

}  // namespace qsi

#endif
