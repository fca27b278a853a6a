#ifndef QSI_RATIONAL_HPP
#define QSI_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <optional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qsi {

// Arbitrary-precision rational, always canonical: gcd(num, den) = 1, den > 0.
// Thin value wrapper over GMP's mpq_t.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(q_);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
  }
  // Accepts "3", "-4/7", "1.25", "2.5e-3".  Decimal inputs convert exactly
  // (d fractional digits -> denominator 10^d).
  explicit Rational(const std::string& s);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational& operator+=(const Rational& b) {
    mpq_add(q_, q_, b.q_);
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    mpq_sub(q_, q_, b.q_);
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    mpq_mul(q_, q_, b.q_);
    return *this;
  }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
  }
  Rational pow(unsigned e) const;

  // Integer-valued numerator/denominator as Rationals.
  Rational numerator() const {
    Rational r;
    mpq_set_z(r.q_, mpq_numref(q_));
    return r;
  }
  Rational denominator() const {
    Rational r;
    mpq_set_z(r.q_, mpq_denref(q_));
    return r;
  }

  // Largest integer <= value.
  Rational floor() const {
    Rational r;
    mpz_fdiv_q(mpq_numref(r.q_), mpq_numref(q_), mpq_denref(q_));
    return r;
  }
  Rational ceil() const {
    Rational r;
    mpz_cdiv_q(mpq_numref(r.q_), mpq_numref(q_), mpq_denref(q_));
    return r;
  }

  // True iff *this is the square of a rational; then *out = the nonnegative root.
  bool sqrt_exact(Rational* out) const;

  double to_double() const { return mpq_get_d(q_); }
  std::string to_string() const;

  // gcd of two integer-valued Rationals (used for polynomial contents).
  static Rational int_gcd(const Rational& a, const Rational& b);

  // The value as a long when it is an integer that fits; nullopt otherwise.
  std::optional<long> to_long_if_small() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  friend struct RationalHash;

 private:
  mpq_t q_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& b, long a) { return Rational(a) * b; }

}  // namespace qsi

#endif
