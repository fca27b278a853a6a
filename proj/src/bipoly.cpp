#include "qsi/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qsi {

void BiPoly::insert_term(const Mono& m, const Rational& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) t_.erase(it);
  }
}

BiPoly BiPoly::constant(const Rational& r) {
  BiPoly p;
  p.insert_term({0, 0}, r);
  return p;
}

BiPoly BiPoly::monomial(int i, int j, const Rational& coeff) {
  BiPoly p;
  p.insert_term({i, j}, coeff);
  return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p) {
  BiPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.var() == Var::X)
      out.insert_term({k, 0}, p.coeff(k));
    else
      out.insert_term({0, k}, p.coeff(k));
  }
  return out;
}

BiPoly BiPoly::from_terms(std::initializer_list<std::tuple<int, int, long>> terms) {
  BiPoly out;
  for (const auto& [i, j, c] : terms) out.insert_term({i, j}, Rational(c));
  return out;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.i);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.j);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.i + m.j);
  return d;
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rational(0) : it->second;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a);
  for (const auto& [m, c] : b.t_) r.insert_term(m, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a);
  for (const auto& [m, c] : b.t_) r.insert_term(m, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.insert_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

BiPoly BiPoly::scaled(const Rational& r) const {
  BiPoly out;
  if (r.is_zero()) return out;
  for (const auto& [m, c] : t_) out.t_.emplace(m, c * r);
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r = BiPoly::constant(Rational(1));
  BiPoly base(*this);
  while (e) {
    if (e & 1u) r = r * base;
    if (e >>= 1u) base = base * base;
  }
  return r;
}

BiPoly BiPoly::deriv_x() const {
  BiPoly r;
  for (const auto& [m, c] : t_)
    if (m.i > 0) r.insert_term({m.i - 1, m.j}, c * Rational(m.i));
  return r;
}

BiPoly BiPoly::deriv_y() const {
  BiPoly r;
  for (const auto& [m, c] : t_)
    if (m.j > 0) r.insert_term({m.i, m.j - 1}, c * Rational(m.j));
  return r;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(Mono{m.j, m.i}, c);
  return r;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
  // Horner in y over Horner in x
  Rational acc(0);
  for (int j = degree_y(); j >= 0; --j) acc = acc * y + coeff_of_y(j).eval(x);
  return acc;
}

double BiPoly::eval_double(double x, double y) const {
  double acc = 0;
  int dy = degree_y();
  for (int j = dy; j >= 0; --j) acc = acc * y + coeff_of_y(j).eval_double(x);
  return acc;
}

UniPoly BiPoly::coeff_of_y(int j) const {
  std::vector<Rational> c;
  for (const auto& [m, v] : t_) {
    if (m.j != j) continue;
    if (static_cast<int>(c.size()) <= m.i) c.resize(m.i + 1, Rational(0));
    c[m.i] = v;
  }
  return UniPoly(std::move(c), Var::X);
}

UniPoly BiPoly::coeff_of_x(int i) const {
  std::vector<Rational> c;
  for (const auto& [m, v] : t_) {
    if (m.i != i) continue;
    if (static_cast<int>(c.size()) <= m.j) c.resize(m.j + 1, Rational(0));
    c[m.j] = v;
  }
  return UniPoly(std::move(c), Var::Y);
}

std::vector<UniPoly> BiPoly::coeffs_in_y() const {
  int dy = degree_y();
  std::vector<UniPoly> out;
  for (int j = 0; j <= dy; ++j) out.push_back(coeff_of_y(j));
  return out;
}

BiPoly BiPoly::from_coeffs_in_y(const std::vector<UniPoly>& cs) {
  BiPoly out;
  for (size_t j = 0; j < cs.size(); ++j)
    for (int i = 0; i <= cs[j].degree(); ++i)
      out.insert_term({i, static_cast<int>(j)}, cs[j].coeff(i));
  return out;
}

UniPoly BiPoly::subst_x(const Rational& x) const {
  std::vector<Rational> c;
  for (const auto& [m, v] : t_) {
    if (static_cast<int>(c.size()) <= m.j) c.resize(m.j + 1, Rational(0));
    c[m.j] += v * x.pow(m.i);
  }
  return UniPoly(std::move(c), Var::Y);
}

UniPoly BiPoly::subst_y(const Rational& y) const {
  std::vector<Rational> c;
  for (const auto& [m, v] : t_) {
    if (static_cast<int>(c.size()) <= m.i) c.resize(m.i + 1, Rational(0));
    c[m.i] += v * y.pow(m.j);
  }
  return UniPoly(std::move(c), Var::X);
}

UniPoly BiPoly::subst_y_rational_cleared(const UniPoly& num, const UniPoly& den) const {
  int dy = degree_y();
  if (dy < 0) return UniPoly(Var::X);
  // sum_j c_j(x) num^j den^(dy-j)
  UniPoly acc(Var::X);
  std::vector<UniPoly> numpow(dy + 1), denpow(dy + 1);
  numpow[0] = UniPoly::constant(Rational(1), Var::X);
  denpow[0] = numpow[0];
  for (int k = 1; k <= dy; ++k) {
    numpow[k] = numpow[k - 1] * num;
    denpow[k] = denpow[k - 1] * den;
  }
  for (int j = 0; j <= dy; ++j) {
    UniPoly cj = coeff_of_y(j);
    if (cj.is_zero()) continue;
    acc = acc + cj * numpow[j] * denpow[dy - j];
  }
  return acc;
}

UniPoly BiPoly::subst_x_rational_cleared(const UniPoly& num, const UniPoly& den) const {
  return swap_xy().subst_y_rational_cleared(num, den);
}

UniPoly BiPoly::subst_xy_rational_cleared(const UniPoly& xn, const UniPoly& xd, const UniPoly& yn,
                                          const UniPoly& yd) const {
  int dx = degree_x(), dy = degree_y();
  if (dx < 0) return UniPoly();
  std::vector<UniPoly> xnp(dx + 1), xdp(dx + 1), ynp(dy + 1), ydp(dy + 1);
  xnp[0] = xdp[0] = UniPoly::constant(Rational(1));
  ynp[0] = ydp[0] = xnp[0];
  for (int k = 1; k <= dx; ++k) {
    xnp[k] = xnp[k - 1] * xn;
    xdp[k] = xdp[k - 1] * xd;
  }
  for (int k = 1; k <= dy; ++k) {
    ynp[k] = ynp[k - 1] * yn;
    ydp[k] = ydp[k - 1] * yd;
  }
  UniPoly acc;
  for (const auto& [m, c] : t_) {
    UniPoly term = UniPoly::constant(c) * xnp[m.i] * xdp[dx - m.i] * ynp[m.j] * ydp[dy - m.j];
    acc = acc + term;
  }
  return acc;
}

UniPoly BiPoly::content_x() const {
  UniPoly g(Var::X);
  for (int j = 0; j <= degree_y(); ++j) {
    UniPoly cj = coeff_of_y(j);
    if (cj.is_zero()) continue;
    g = g.is_zero() ? cj : UniPoly::gcd(g, cj);
    if (g.degree() == 0) break;
  }
  return g.is_zero() ? g : g.monic();
}

UniPoly BiPoly::content_y() const {
  UniPoly g = swap_xy().content_x();
  g.set_var(Var::Y);
  return g;
}

BiPoly BiPoly::divide_by_unipoly_x(const UniPoly& d) const {
  std::vector<UniPoly> cs = coeffs_in_y();
  for (auto& c : cs)
    if (!c.is_zero()) c = c.exact_div(d);
  return from_coeffs_in_y(cs);
}

BiPoly BiPoly::divide_by_unipoly_y(const UniPoly& d) const {
  UniPoly dx = d;
  dx.set_var(Var::X);
  return swap_xy().divide_by_unipoly_x(dx).swap_xy();
}

bool BiPoly::try_divide(const BiPoly& a, const BiPoly& d, BiPoly* quotient) {
  if (d.is_zero()) return false;
  // single-divisor reduction under graded lex (total degree, then x-exp)
  auto cmp = [](const Mono& u, const Mono& v) {
    if (u.i + u.j != v.i + v.j) return u.i + u.j < v.i + v.j;
    return u.i < v.i;
  };
  Mono dlead{-1, -1};
  for (const auto& [m, c] : d.t_)
    if (dlead.i < 0 || cmp(dlead, m)) dlead = m;
  Rational dlc = d.coeff(dlead.i, dlead.j);

  BiPoly rem(a), q;
  while (!rem.is_zero()) {
    Mono rl{-1, -1};
    for (const auto& [m, c] : rem.t_)
      if (rl.i < 0 || cmp(rl, m)) rl = m;
    if (rl.i < dlead.i || rl.j < dlead.j) return false;
    Mono sh{rl.i - dlead.i, rl.j - dlead.j};
    Rational f = rem.coeff(rl.i, rl.j) / dlc;
    BiPoly term = BiPoly::monomial(sh.i, sh.j, f);
    q = q + term;
    rem = rem - term * d;
  }
  if (quotient) *quotient = q;
  return true;
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
  BiPoly q;
  if (!try_divide(*this, d, &q)) throw std::domain_error("BiPoly: inexact division");
  return q;
}

bool BiPoly::divisible_by(const BiPoly& d) const { return try_divide(*this, d, nullptr); }

bool BiPoly::proportional(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.t_.size() != b.t_.size()) return false;
  Rational ratio(0);
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  for (; ia != a.t_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    Rational r = ia->second / ib->second;
    if (ratio.is_zero())
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return true;
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  // graded lex, highest first: sort keys
  std::vector<Mono> keys;
  for (const auto& [m, c] : t_) keys.push_back(m);
  std::sort(keys.begin(), keys.end(), [](const Mono& u, const Mono& v) {
    if (u.i + u.j != v.i + v.j) return u.i + u.j > v.i + v.j;
    if (u.i != v.i) return u.i > v.i;
    return u.j > v.j;
  });
  std::ostringstream os;
  bool first = true;
  for (const Mono& m : keys) {
    Rational a = coeff(m.i, m.j);
    Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    bool has_vars = m.i > 0 || m.j > 0;
    bool unit = mag.is_one() && has_vars;
    if (!unit) os << mag.to_string();
    if (m.i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (m.i > 1) os << "^" << m.i;
      unit = false;
    }
    if (m.j > 0) {
      if (!unit) os << "*";
      os << "y";
      if (m.j > 1) os << "^" << m.j;
    }
  }
  return os.str();
}

// ---- gcd / squarefree over Q(x)[y] ----

namespace {

// view in y with UniPoly-in-x coefficients, primitive (content_x removed)
BiPoly primitive_in_y(const BiPoly& p) {
  UniPoly c = p.content_x();
  if (c.is_zero() || c.degree() == 0) return p;
  return p.divide_by_unipoly_x(c);
}

// pseudo-remainder of a by b with respect to y
BiPoly prem_y(const BiPoly& a, const BiPoly& b) {
  int da = a.degree_y(), db = b.degree_y();
  if (da < db) return a;
  UniPoly lb = b.coeff_of_y(db);
  BiPoly lbp = BiPoly::from_unipoly(lb);
  BiPoly r = a;
  int guard = da - db + 1;
  while (!r.is_zero() && r.degree_y() >= db && guard-- > 0) {
    int dr = r.degree_y();
    BiPoly lr = BiPoly::from_unipoly(r.coeff_of_y(dr));
    // r = lb * r - lr * y^(dr-db) * b
    r = lbp * r - lr * BiPoly::monomial(0, dr - db, Rational(1)) * b;
  }
  return r;
}

}  // namespace

BiPoly gcd_in_y(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return primitive_in_y(b);
  if (b.is_zero()) return primitive_in_y(a);
  BiPoly u = primitive_in_y(a), v = primitive_in_y(b);
  if (u.degree_y() < v.degree_y()) std::swap(u, v);
  while (!v.is_zero() && v.degree_y() > 0) {
    BiPoly r = prem_y(u, v);
    u = std::move(v);
    v = primitive_in_y(r);
    if (!v.is_zero() && v.degree_y() > u.degree_y()) std::swap(u, v);
  }
  if (!v.is_zero()) return BiPoly::constant(Rational(1));  // coprime in Q(x)[y]
  return primitive_in_y(u);
}

BiPoly bivariate_squarefree(const BiPoly& p) {
  if (p.is_zero()) throw std::domain_error("bivariate_squarefree: zero input");
  UniPoly cont = p.content_x();
  BiPoly pp = (cont.degree() > 0) ? p.divide_by_unipoly_x(cont) : p;
  BiPoly result = BiPoly::constant(Rational(1));
  if (cont.degree() > 0) result = BiPoly::from_unipoly(cont.squarefree_part());

  // strip factors that depend on y only as well
  UniPoly conty = pp.content_y();
  if (conty.degree() > 0) {
    pp = pp.divide_by_unipoly_y(conty);
    result = result * BiPoly::from_unipoly(conty.squarefree_part());
  }

  if (pp.degree_y() == 0) {
    // leftover is a polynomial in x (possibly constant) already made squarefree above
    UniPoly rest = pp.coeff_of_y(0);
    if (rest.degree() > 0) result = result * BiPoly::from_unipoly(rest.squarefree_part());
    return result;
  }
  BiPoly g = gcd_in_y(pp, pp.deriv_y());
  if (g.degree_y() == 0) return result * pp;
  BiPoly core = pp.exact_div(g);
  // division in Q(x)[y] sense: make sure the quotient is y-primitive
  return result * primitive_in_y(core);
}

}  // namespace qsi
