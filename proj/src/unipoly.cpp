#include "qsi/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qsi {

namespace {
const Rational kZero(0);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(int deg, const Rational& coeff, Var v) {
  if (coeff.is_zero()) return UniPoly(v);
  std::vector<Rational> c(deg + 1, Rational(0));
  c[deg] = coeff;
  return UniPoly(std::move(c), v);
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs, Var v) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long x : coeffs) c.emplace_back(x);
  return UniPoly(std::move(c), v);
}

const Rational& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c), a.c_.empty() ? b.var_ : a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c), a.c_.empty() ? b.var_ : a.var_);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c), a.var_);
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly UniPoly::scaled(const Rational& r) const {
  if (r.is_zero()) return UniPoly(var_);
  UniPoly out(*this);
  for (auto& x : out.c_) x *= r;
  return out;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(var_);
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(c), var_);
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double UniPoly::eval_double(double x) const {
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc(var_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q + UniPoly::constant(c_[i], q.var());
  acc.set_var(q.var());
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = UniPoly::constant(Rational(1), var_);
  UniPoly base(*this);
  while (e) {
    if (e & 1u) r = r * base;
    if (e >>= 1u) base = base * base;
  }
  return r;
}

UniPoly UniPoly::shifted(const Rational& a) const {
  // Horner on (x + a).
  UniPoly acc(var_);
  UniPoly lin({a, Rational(1)}, var_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + UniPoly::constant(c_[i], var_);
  return acc;
}

UniPoly UniPoly::dilated(const Rational& a) const {
  UniPoly out(*this);
  Rational p(1);
  for (size_t i = 0; i < out.c_.size(); ++i) {
    out.c_[i] *= p;
    p *= a;
  }
  out.trim();
  return out;
}

UniPoly UniPoly::reversed() const {
  std::vector<Rational> c(c_.rbegin(), c_.rend());
  return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Rational UniPoly::content() const {
  if (is_zero()) return Rational(0);
  // lcm of denominators, gcd of resulting numerators
  Rational den(1);
  for (const auto& x : c_)
    if (!x.is_zero()) den = den * x.denominator() / Rational::int_gcd(den, x.denominator());
  Rational g(0);
  for (const auto& x : c_)
    if (!x.is_zero()) g = Rational::int_gcd(g, x * den);
  Rational cont = g / den;
  if (leading().sign() < 0) cont = -cont;
  return cont;
}

void UniPoly::divrem(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  UniPoly rem(a);
  std::vector<Rational> qc;
  int db = b.degree();
  if (rem.degree() >= db) qc.assign(rem.degree() - db + 1, Rational(0));
  const Rational lb_inv = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    Rational f = rem.leading() * lb_inv;
    qc[k] = f;
    // rem -= f * x^k * b
    for (int i = 0; i <= db; ++i) rem.c_[k + i] -= f * b.c_[i];
    rem.trim();
  }
  if (q) *q = UniPoly(std::move(qc), a.var_);
  if (r) *r = rem;
}

UniPoly UniPoly::exact_div(const UniPoly& b) const {
  UniPoly q, r;
  divrem(*this, b, &q, &r);
  if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
  return q;
}

bool UniPoly::divides(const UniPoly& b) const {
  if (is_zero()) return b.is_zero();
  UniPoly q, r;
  divrem(b, *this, &q, &r);
  return r.is_zero();
}

namespace {

// lc(v)^k * u mod v for suitable k, keeping integer coefficients integer
UniPoly pseudo_rem(UniPoly u, const UniPoly& v) {
  const int dv = v.degree();
  const Rational lv = v.leading();
  while (!u.is_zero() && u.degree() >= dv) {
    int k = u.degree() - dv;
    Rational cu = u.leading();
    u = u.scaled(lv) - UniPoly::monomial(k, cu, u.var()) * v;
  }
  return u;
}

}  // namespace

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("UniPoly: gcd(0, 0) is undefined (degenerate elimination)");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // primitive polynomial remainder sequence over the integers
  UniPoly u = a.primitive_integer(), v = b.primitive_integer();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero() && v.degree() > 0) {
    UniPoly r = pseudo_rem(u, v);
    u = std::move(v);
    v = r.is_zero() ? std::move(r) : r.primitive_integer();
  }
  if (!v.is_zero()) return UniPoly::constant(Rational(1), a.var());
  return u.monic();
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) throw std::domain_error("UniPoly: squarefree part of zero");
  if (degree() == 0) return UniPoly::constant(Rational(1), var_);
  UniPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return monic();
  return exact_div(g).monic();
}

bool UniPoly::sqrt_exact(UniPoly* out) const {
  if (is_zero()) {
    if (out) *out = UniPoly(var_);
    return true;
  }
  int d = degree();
  if (d % 2 != 0) return false;
  Rational lead_sqrt;
  if (!leading().sqrt_exact(&lead_sqrt)) return false;
  int h = d / 2;
  std::vector<Rational> w(h + 1, Rational(0));
  w[h] = lead_sqrt;
  // solve top-down: coeff of x^(d-k) in w^2 must match
  for (int k = 1; k <= h; ++k) {
    // target = c_[d-k] minus known cross terms w_i w_j with i+j = d-k, i,j > h-k
    Rational s(0);
    for (int i = h - k + 1; i <= h; ++i) {
      int j = d - k - i;
      if (j > h - k && j <= h && j >= 0) s += w[i] * w[j];
    }
    w[h - k] = (coeff(d - k) - s) / (Rational(2) * w[h]);
  }
  UniPoly cand(std::move(w), var_);
  if (cand * cand != *this) return false;
  if (out) *out = cand;
  return true;
}

int UniPoly::sign_variations() const {
  int v = 0, last = 0;
  for (const auto& x : c_) {
    int s = x.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::string UniPoly::to_string(const char* name) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a.is_zero()) continue;
    Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    bool unit = mag.is_one() && i > 0;
    if (!unit) os << mag.to_string();
    if (i > 0) {
      if (!unit) os << "*";
      os << name;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qsi
