#include "qsi/rational.hpp"

#include <cctype>
#include <ostream>

namespace qsi {

namespace {

bool parse_mpz(const std::string& s, mpz_t out) {
  if (s.empty()) return false;
  return mpz_set_str(out, s.c_str(), 10) == 0;
}

}  // namespace

Rational::Rational(const std::string& text) {
  mpq_init(q_);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_t num, den;
    mpz_init(num);
    mpz_init(den);
    bool ok = parse_mpz(s.substr(0, slash), num) && parse_mpz(s.substr(slash + 1), den) &&
              mpz_sgn(den) != 0;
    if (!ok) {
      mpz_clear(num);
      mpz_clear(den);
      throw std::invalid_argument("Rational: bad fraction '" + text + "'");
    }
    mpz_set(mpq_numref(q_), num);
    mpz_set(mpq_denref(q_), den);
    mpq_canonicalize(q_);
    mpz_clear(num);
    mpz_clear(den);
    return;
  }

  // [sign] digits [. digits] [e|E [sign] digits]
  std::string mantissa;
  long exp10 = 0;
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  bool any_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    mantissa.push_back(s[i++]);
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mantissa.push_back(s[i++]);
      --exp10;
      any_digit = true;
    }
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i >= s.size()) throw std::invalid_argument("Rational: bad exponent '" + text + "'");
    long e = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      e = e * 10 + (s[i++] - '0');
      if (e > 100000) throw std::invalid_argument("Rational: exponent too large");
    }
    exp10 += eneg ? -e : e;
  }
  if (!any_digit || i != s.size())
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");

  if (mantissa.empty()) mantissa = "0";
  mpz_t m;
  mpz_init(m);
  if (!parse_mpz(mantissa, m)) {
    mpz_clear(m);
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
  mpz_set(mpq_numref(q_), m);
  mpz_set_ui(mpq_denref(q_), 1);
  mpz_clear(m);
  if (exp10 > 0) {
    mpz_t p;
    mpz_init(p);
    mpz_ui_pow_ui(p, 10, (unsigned long)exp10);
    mpz_mul(mpq_numref(q_), mpq_numref(q_), p);
    mpz_clear(p);
  } else if (exp10 < 0) {
    mpz_ui_pow_ui(mpq_denref(q_), 10, (unsigned long)(-exp10));
  }
  if (neg) mpz_neg(mpq_numref(q_), mpq_numref(q_));
  mpq_canonicalize(q_);
}

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  Rational base(*this);
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

bool Rational::sqrt_exact(Rational* out) const {
  if (sign() < 0) return false;
  if (is_zero()) {
    if (out) *out = Rational(0);
    return true;
  }
  if (mpz_perfect_square_p(mpq_numref(q_)) == 0) return false;
  if (mpz_perfect_square_p(mpq_denref(q_)) == 0) return false;
  if (out) {
    Rational r;
    mpz_sqrt(mpq_numref(r.q_), mpq_numref(q_));
    mpz_sqrt(mpq_denref(r.q_), mpq_denref(q_));
    mpq_canonicalize(r.q_);
    *out = r;
  }
  return true;
}

std::string Rational::to_string() const {
  char* cs = mpq_get_str(nullptr, 10, q_);
  std::string s(cs);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(cs, s.size() + 1);
  return s;
}

Rational Rational::int_gcd(const Rational& a, const Rational& b) {
  Rational r;
  mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
  return r;
}


std::optional<long> Rational::to_long_if_small() const {
  if (!is_integer()) return std::nullopt;
  if (mpz_fits_slong_p(mpq_numref(q_)) == 0) return std::nullopt;
  return mpz_get_si(mpq_numref(q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace qsi
