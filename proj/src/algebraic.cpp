#include "qsi/algebraic.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qsi/elimination.hpp"

namespace qsi {

// ---------------- QuadExt ----------------

namespace {

// pull small square factors out of an integer d so that sqrt(d) prints nicely
void normalize_radicand(Rational& b, Rational& d) {
  if (b.is_zero() || d.is_zero()) {
    d = Rational(0);
    return;
  }
  // make d a positive integer: b*sqrt(p/q) = (b/q)*sqrt(p*q)
  Rational num = d.numerator(), den = d.denominator();
  if (!den.is_one()) {
    b = b / den;
    d = num * den;
  }
  Rational root;
  if (d.sqrt_exact(&root)) {
    // perfect square: collapses to a rational, caller folds b*root into a
    return;
  }
  // strip k^2 with small k
  for (long k = 2; k * k <= 100000000L; ++k) {
    Rational k2(k * k);
    while (true) {
      Rational q = d / k2;
      if (!q.is_integer()) break;
      d = q;
      b = b * Rational(k);
      if (!(d >= k2)) break;
    }
    if (d < k2) break;
  }
}

}  // namespace

QuadExt operator+(const QuadExt& u, const QuadExt& v) {
  Rational d = u.b.is_zero() ? v.d : u.d;
  if (!u.b.is_zero() && !v.b.is_zero() && u.d != v.d)
    throw std::domain_error("QuadExt: mixing different radicands");
  return {u.a + v.a, u.b + v.b, d};
}

QuadExt operator-(const QuadExt& u, const QuadExt& v) {
  Rational d = u.b.is_zero() ? v.d : u.d;
  if (!u.b.is_zero() && !v.b.is_zero() && u.d != v.d)
    throw std::domain_error("QuadExt: mixing different radicands");
  return {u.a - v.a, u.b - v.b, d};
}

QuadExt operator*(const QuadExt& u, const QuadExt& v) {
  if (!u.b.is_zero() && !v.b.is_zero() && u.d != v.d)
    throw std::domain_error("QuadExt: mixing different radicands");
  Rational d = u.b.is_zero() ? v.d : u.d;
  return {u.a * v.a + u.b * v.b * d, u.a * v.b + u.b * v.a, d};
}

QuadExt operator/(const QuadExt& u, const QuadExt& v) {
  Rational norm = v.a * v.a - v.b * v.b * v.d;
  if (norm.is_zero()) {
    if (v.is_zero()) throw std::domain_error("QuadExt: division by zero");
    // v = a + b*sqrt(d) with a^2 = b^2 d and v != 0 would force sqrt(d) rational;
    // callers only divide by well-formed nonzero values
    throw std::domain_error("QuadExt: degenerate divisor");
  }
  QuadExt conj{v.a, -v.b, v.d};
  QuadExt num = u * conj;
  return {num.a / norm, num.b / norm, num.d};
}

bool QuadExt::is_zero() const {
  if (b.is_zero() || d.is_zero()) return a.is_zero() && (b.is_zero() || d.is_zero());
  // a + b*sqrt(d) = 0 with b != 0, d > 0 requires sqrt(d) = -a/b rational
  Rational s;
  if (!d.sqrt_exact(&s)) return false;
  return (a + b * s).is_zero();
}

int QuadExt::sign() const {
  if (b.is_zero() || d.is_zero()) return a.sign();
  int sa = a.sign(), sb = b.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // compare |a| vs |b| sqrt(d): sign of a^2 - b^2 d carries the answer
  int t = (a * a - b * b * d).sign();
  if (t == 0) return 0;
  return t > 0 ? sa : sb;
}

bool QuadExt::same_value(const QuadExt& o) const {
  QuadExt u = *this, v = o;
  normalize_radicand(u.b, u.d);
  normalize_radicand(v.b, v.d);
  Rational ru, rv;
  if (!u.b.is_zero() && u.d.sqrt_exact(&ru)) {
    u.a += u.b * ru;
    u.b = Rational(0);
  }
  if (!v.b.is_zero() && v.d.sqrt_exact(&rv)) {
    v.a += v.b * rv;
    v.b = Rational(0);
  }
  if (u.a != v.a) return false;
  if (u.b.is_zero() && v.b.is_zero()) return true;
  return u.b == v.b && u.d == v.d;
}

double QuadExt::to_double() const { return a.to_double() + b.to_double() * std::sqrt(d.to_double()); }

std::string QuadExt::to_string() const {
  QuadExt n = *this;
  normalize_radicand(n.b, n.d);
  Rational root;
  if (!n.b.is_zero() && n.d.sqrt_exact(&root)) {
    n.a += n.b * root;
    n.b = Rational(0);
  }
  if (n.b.is_zero() || n.d.is_zero()) return n.a.to_string();
  std::ostringstream os;
  if (!n.a.is_zero()) os << n.a.to_string() << (n.b.sign() > 0 ? " + " : " - ");
  else if (n.b.sign() < 0) os << "-";
  Rational babs = n.b.abs();
  if (!babs.is_one()) os << babs.to_string() << "*";
  os << "sqrt(" << n.d.to_string() << ")";
  return os.str();
}

QuadExt QuadExt::eval_poly(const UniPoly& p, const QuadExt& at) {
  QuadExt acc(Rational(0));
  acc.d = at.d;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * at;
    acc = acc + QuadExt(p.coeff(i));
    acc.d = at.d;
  }
  return acc;
}

// ---------------- interval evaluation ----------------

RatInterval eval_interval(const UniPoly& p, const RatInterval& I) {
  RatInterval acc(Rational(0));
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * I;
    acc = acc + RatInterval(p.coeff(i));
  }
  return acc;
}

// ---------------- AlgebraicNumber ----------------

AlgebraicNumber::AlgebraicNumber(const Rational& r)
    : def_(UniPoly({-r, Rational(1)}, Var::X)),
      lo_(r - Rational(1)),
      hi_(r + Rational(1)),
      rational_(r),
      closed_(QuadExt(r)) {}

AlgebraicNumber::AlgebraicNumber(UniPoly defining, Rational lo, Rational hi)
    : def_(defining.primitive_integer()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (def_.is_zero() || def_.degree() < 1)
    throw std::invalid_argument("AlgebraicNumber: defining polynomial must be nonconstant");
  if (!(lo_ < hi_)) throw std::invalid_argument("AlgebraicNumber: empty interval");
  assert(def_.eval(lo_).sign() * def_.eval(hi_).sign() < 0);
  detect_rational();
  compute_closed_form();
}

void AlgebraicNumber::detect_rational() {
  if (def_.degree() == 1) {
    rational_ = -def_.coeff(0) / def_.coeff(1);
    closed_ = QuadExt(*rational_);
  }
}

void AlgebraicNumber::compute_closed_form() {
  if (closed_ || def_.degree() != 2) return;
  Rational c2 = def_.coeff(2), c1 = def_.coeff(1), c0 = def_.coeff(0);
  Rational a = -c1 / (Rational(2) * c2);
  Rational d = c1 * c1 - Rational(4) * c2 * c0;
  if (d.sign() <= 0) return;  // no real roots (cannot happen when an interval isolates one)
  // decide which branch by separating the interval from the vertex
  while (lo_ < a && a < hi_) {
    Rational mid = (lo_ + hi_) * Rational(1, 2);
    int sm = def_.eval(mid).sign();
    if (sm == 0) {
      rational_ = mid;
      closed_ = QuadExt(mid);
      return;
    }
    if (def_.eval(lo_).sign() * sm < 0)
      hi_ = mid;
    else
      lo_ = mid;
  }
  // root = a + b*sqrt(d) with |b| = 1/(2|c2|); negative b left of the vertex
  Rational b = Rational((hi_ <= a) ? -1 : 1) / (Rational(2) * c2.abs());
  Rational root;
  if (d.sqrt_exact(&root)) {
    Rational val = a + b * root;
    rational_ = val;
    closed_ = QuadExt(val);
    return;
  }
  closed_ = QuadExt(a, b, d);
}

void AlgebraicNumber::refine_to(const Rational& w) const {
  if (rational_) {
    // keep the interval honest but tiny around the exact value
    const Rational& r = *rational_;
    Rational half = w * Rational(1, 2);
    if (hi_ - lo_ > w) {
      lo_ = r - half;
      hi_ = r + half;
    }
    return;
  }
  int slo = def_.eval(lo_).sign();
  while (hi_ - lo_ > w) {
    Rational mid = (lo_ + hi_) * Rational(1, 2);
    int sm = def_.eval(mid).sign();
    if (sm == 0) {
      // the root is exactly mid; pin a tiny clean interval around it
      Rational eps = std::min(hi_ - mid, mid - lo_) * Rational(1, 4);
      Rational halfw = w * Rational(1, 4);
      if (eps > halfw) eps = halfw;
      lo_ = mid - eps;
      hi_ = mid + eps;
      return;
    }
    if (slo * sm < 0)
      hi_ = mid;
    else {
      lo_ = mid;
      slo = sm;
    }
  }
}

double AlgebraicNumber::approx(double width) const {
  if (rational_) return rational_->to_double();
  long den = 1000000000000000L;  // 1e15
  if (width > 1e-15 && width < 1.0) den = std::max(2L, static_cast<long>(2.0 / width));
  refine_to(Rational(1, den));
  return ((lo_ + hi_) * Rational(1, 2)).to_double();
}

int AlgebraicNumber::sign_of(const UniPoly& p) const {
  if (p.is_zero()) return 0;
  if (rational_) return p.eval(*rational_).sign();
  // a sign-definite interval evaluation settles most queries without gcd work
  {
    int s = eval_interval(p, {lo_, hi_}).sign();
    if (s != 0) return s;
  }
  UniPoly g = UniPoly::gcd(p, def_);
  if (g.degree() >= 1 && g.eval(lo_).sign() * g.eval(hi_).sign() < 0) return 0;
  // p(alpha) != 0: refine until the interval evaluation is sign-definite
  while (true) {
    RatInterval v = eval_interval(p, {lo_, hi_});
    int s = v.sign();
    if (s != 0) return s;
    refine_to((hi_ - lo_) * Rational(1, 2));
  }
}

int AlgebraicNumber::compare_rational(const Rational& r) const {
  if (rational_) {
    if (*rational_ < r) return -1;
    return *rational_ == r ? 0 : 1;
  }
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  return sign_of(UniPoly({-r, Rational(1)}, def_.var()));
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.rational_ && b.rational_) {
    if (*a.rational_ < *b.rational_) return -1;
    return *a.rational_ == *b.rational_ ? 0 : 1;
  }
  if (a.rational_) return -b.compare_rational(*a.rational_);
  if (b.rational_) return a.compare_rational(*b.rational_);

  UniPoly g = UniPoly::gcd(a.def_, b.def_);
  bool g_usable = g.degree() >= 1;
  while (true) {
    if (a.hi_ <= b.lo_) return -1;
    if (b.hi_ <= a.lo_) return 1;
    Rational L = std::max(a.lo_, b.lo_), U = std::min(a.hi_, b.hi_);
    if (g_usable) {
      int sL = g.eval(L).sign(), sU = g.eval(U).sign();
      if (sL == 0) {
        // L is a root of one defining polynomial only (interval endpoints are
        // never roots of their own defining polynomial)
        if (a.def_.eval(L).sign() == 0) return -1;  // alpha == L == b.lo < beta
        return 1;                                   // beta == L == a.lo < alpha
      }
      if (sU == 0) {
        if (a.def_.eval(U).sign() == 0) return 1;  // alpha == U == b.hi > beta
        return -1;
      }
      if (sL * sU < 0) return 0;  // shared root inside both isolating intervals
    }
    a.refine_to((a.hi_ - a.lo_) * Rational(1, 2));
    b.refine_to((b.hi_ - b.lo_) * Rational(1, 2));
  }
}

std::string AlgebraicNumber::to_string() const {
  if (closed_) return closed_->to_string();
  std::ostringstream os;
  os << "root(" << def_.to_string() << ") ~ " << approx();
  return os.str();
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& w) {
  AlgebraicNumber r = a;
  r.refine_to(w);
  return r;
}

// ---------------- real root isolation ----------------

namespace {

// Divisors of |n| up to `cap` candidates; empty result signals "gave up"
// (also for integers too large to factor cheaply).
std::vector<Rational> small_divisors(const Rational& n_int, size_t cap) {
  std::vector<Rational> out;
  auto fits = n_int.abs().to_long_if_small();
  if (!fits || *fits == 0) return out;
  long n = *fits;
  std::vector<std::pair<long, int>> fac;
  long m = n;
  for (long p = 2; p * p <= m && p <= 65536; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) fac.push_back({p, e});
  }
  if (m > 1) {
    // leftover cofactor: usable as an atom only when it is actually prime
    // (beyond the trial bound we cannot tell cheaply for large m)
    if (m > (1L << 33)) return {};
    fac.push_back({m, 1});
  }
  out.push_back(Rational(1));
  for (auto& [p, e] : fac) {
    size_t base = out.size();
    Rational pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= Rational(p);
      for (size_t i = 0; i < base; ++i) {
        out.push_back(out[i] * pk);
        if (out.size() > cap) return {};
      }
    }
  }
  return out;
}

struct DescartesCtx {
  UniPoly r;  // squarefree, rational roots removed (best effort)
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Rational> exact_hits;

  int variations(const Rational& a, const Rational& b) const {
    // roots of r in (a,b)  <->  sign variations of (1+t)^n * S(1/(1+t)),
    // S(u) = r(a + (b-a) u)
    UniPoly s = r.shifted(a).dilated(b - a);
    UniPoly t = s.reversed().shifted(Rational(1));
    return t.sign_variations();
  }

  void isolate(const Rational& a, const Rational& b, int depth) {
    if (depth > 200) throw std::runtime_error("root isolation: excessive recursion");
    int v = variations(a, b);
    if (v == 0) return;
    if (v == 1) {
      intervals.push_back({a, b});
      return;
    }
    Rational mid = (a + b) * Rational(1, 2);
    if (r.eval(mid).is_zero()) {
      exact_hits.push_back(mid);
      // shrink a gap around the hit until it holds that root alone, then
      // recurse outside the gap; endpoints of the gap must not be roots
      Rational h = (b - a) * Rational(1, 64);
      while (r.eval(mid - h).is_zero() || r.eval(mid + h).is_zero() ||
             variations(mid - h, mid + h) != 1)
        h = h * Rational(1, 2);
      isolate(a, mid - h, depth + 1);
      isolate(mid + h, b, depth + 1);
      return;
    }
    isolate(a, mid, depth + 1);
    isolate(mid, b, depth + 1);
  }
};

}  // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  std::vector<AlgebraicNumber> roots;
  if (p.degree() == 0) return roots;

  UniPoly q = p.squarefree_part().primitive_integer();

  // best-effort extraction of rational roots (keeps closed forms exact)
  std::vector<Rational> ratroots;
  UniPoly r = q;
  if (r.coeff(0).is_zero()) {
    ratroots.push_back(Rational(0));
    r = r.exact_div(UniPoly({Rational(0), Rational(1)}, q.var()));
  }
  {
    Rational a0 = r.coeff(0), an = r.leading();
    if (!a0.is_zero() && r.degree() >= 1) {
      auto dn = small_divisors(a0, 512);
      auto dd = small_divisors(an, 512);
      if (!dn.empty() && !dd.empty() && dn.size() * dd.size() <= 4096) {
        for (const auto& num : dn)
          for (const auto& den : dd) {
            Rational cand = num / den;
            for (int s = 0; s < 2; ++s, cand = -cand) {
              if (r.eval(cand).is_zero()) {
                ratroots.push_back(cand);
                r = r.exact_div(UniPoly({-cand, Rational(1)}, q.var()));
              }
              if (r.degree() == 0) break;
            }
            if (r.degree() == 0) break;
          }
      }
    }
  }

  std::vector<std::pair<Rational, Rational>> intervals;
  if (r.degree() >= 1) {
    // Cauchy bound: all roots in (-B, B)
    Rational maxc(0);
    for (int i = 0; i < r.degree(); ++i) {
      Rational m = (r.coeff(i) / r.leading()).abs();
      if (m > maxc) maxc = m;
    }
    Rational B = Rational(1) + maxc;
    DescartesCtx ctx{r, {}, {}};
    ctx.isolate(-B, B, 0);
    for (const Rational& hit : ctx.exact_hits) ratroots.push_back(hit);
    intervals = std::move(ctx.intervals);
  }

  for (const Rational& rt : ratroots) roots.emplace_back(rt);
  for (auto& [a, b] : intervals) {
    // q may have extracted rational roots inside (a,b)'s closure; shrink via
    // sign-change bisection on r until the interval is clean for q
    Rational lo = a, hi = b;
    auto contains_foreign = [&]() {
      for (const Rational& rt : ratroots)
        if (lo < rt && rt < hi) return true;
      return q.eval(lo).is_zero() || q.eval(hi).is_zero();
    };
    int slo = r.eval(lo).sign();
    while (contains_foreign()) {
      Rational mid = (lo + hi) * Rational(1, 2);
      int sm = r.eval(mid).sign();
      if (sm == 0) {
        // r's root inside is exactly mid (rational after all)
        roots.emplace_back(mid);
        lo = hi;  // drop the interval
        break;
      }
      if (slo * sm < 0)
        hi = mid;
      else {
        lo = mid;
        slo = sm;
      }
    }
    if (lo < hi) roots.emplace_back(q, lo, hi);
  }

  std::sort(roots.begin(), roots.end(), [](const AlgebraicNumber& u, const AlgebraicNumber& v) {
    return AlgebraicNumber::compare(u, v) < 0;
  });
  // disjoint isolating intervals across the list
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    while (!(roots[i].upper() <= roots[i + 1].lower())) {
      roots[i].refine_to((roots[i].upper() - roots[i].lower()) * Rational(1, 2));
      roots[i + 1].refine_to((roots[i + 1].upper() - roots[i + 1].lower()) * Rational(1, 2));
    }
  }
  return roots;
}

// ---------------- AlgebraicPoint2D ----------------

namespace {
const UniPoly kOne = UniPoly::constant(Rational(1));
const UniPoly kIdentityPoly({Rational(0), Rational(1)});
}  // namespace

AlgebraicPoint2D::AlgebraicPoint2D()
    : t_(Rational(0)), xn_(kIdentityPoly), xd_(kOne), yn_(kIdentityPoly), yd_(kOne) {}

AlgebraicPoint2D::AlgebraicPoint2D(AlgebraicNumber t, UniPoly xn, UniPoly xd, UniPoly yn,
                                   UniPoly yd)
    : t_(std::move(t)), xn_(std::move(xn)), xd_(std::move(xd)), yn_(std::move(yn)),
      yd_(std::move(yd)) {
  if (xd_.is_zero() || yd_.is_zero() || t_.sign_of(xd_) == 0 || t_.sign_of(yd_) == 0)
    throw std::invalid_argument("AlgebraicPoint2D: coordinate denominator vanishes");
}

AlgebraicPoint2D AlgebraicPoint2D::y_of_x(AlgebraicNumber x, UniPoly y_num, UniPoly y_den) {
  return AlgebraicPoint2D(std::move(x), kIdentityPoly, kOne, std::move(y_num), std::move(y_den));
}

AlgebraicPoint2D AlgebraicPoint2D::x_of_y(AlgebraicNumber y, UniPoly x_num, UniPoly x_den) {
  return AlgebraicPoint2D(std::move(y), std::move(x_num), std::move(x_den), kIdentityPoly, kOne);
}

AlgebraicPoint2D AlgebraicPoint2D::from_rationals(const Rational& x, const Rational& y) {
  return AlgebraicPoint2D(AlgebraicNumber(x), kIdentityPoly, kOne, UniPoly::constant(y), kOne);
}

int AlgebraicPoint2D::sign_of(const BiPoly& p) const {
  if (p.is_zero()) return 0;
  UniPoly u = p.subst_xy_rational_cleared(xn_, xd_, yn_, yd_);
  int s = t_.sign_of(u);
  if (s == 0) return 0;
  if (p.degree_x() % 2 != 0 && t_.sign_of(xd_) < 0) s = -s;
  if (p.degree_y() % 2 != 0 && t_.sign_of(yd_) < 0) s = -s;
  return s;
}

RatInterval AlgebraicPoint2D::coord_interval(const UniPoly& num, const UniPoly& den,
                                             const Rational& w) const {
  Rational pw = w * Rational(1, 16);
  for (int iter = 0; iter < 300; ++iter) {
    t_.refine_to(pw);
    RatInterval I = t_.interval();
    RatInterval D = eval_interval(den, I);
    if (!D.contains_zero()) {
      RatInterval V = eval_interval(num, I) / D;
      if (V.width() <= w) return V;
    }
    pw = pw * Rational(1, 4);
  }
  throw std::runtime_error("AlgebraicPoint2D: coordinate interval failed to converge");
}

RatInterval AlgebraicPoint2D::x_interval(const Rational& w) const {
  return coord_interval(xn_, xd_, w);
}

RatInterval AlgebraicPoint2D::y_interval(const Rational& w) const {
  return coord_interval(yn_, yd_, w);
}

double AlgebraicPoint2D::x_approx() const {
  if (auto r = x_rational()) return r->to_double();
  return x_interval(Rational(1, 1000000000000000L)).mid_double();
}

double AlgebraicPoint2D::y_approx() const {
  if (auto r = y_rational()) return r->to_double();
  return y_interval(Rational(1, 1000000000000000L)).mid_double();
}

std::optional<Rational> AlgebraicPoint2D::x_rational() const {
  if (!t_.is_rational()) return std::nullopt;
  const Rational& t = t_.rational_value();
  return xn_.eval(t) / xd_.eval(t);
}

std::optional<Rational> AlgebraicPoint2D::y_rational() const {
  if (!t_.is_rational()) return std::nullopt;
  const Rational& t = t_.rational_value();
  return yn_.eval(t) / yd_.eval(t);
}

AlgebraicNumber AlgebraicPoint2D::coord_algebraic(const UniPoly& num, const UniPoly& den) const {
  // rational shortcut: constant coordinate or rational parameter
  if (t_.is_rational()) {
    const Rational& tv = t_.rational_value();
    return AlgebraicNumber(num.eval(tv) / den.eval(tv));
  }
  if (num.degree() <= 0 && den.degree() <= 0)
    return AlgebraicNumber(num.coeff(0) / den.coeff(0));
  // eliminate the parameter: resultant_t(defining(t), V*den(t) - num(t));
  // build in BiPoly with t on the x-axis and the coordinate V on the y-axis
  // (variable tags only guide from_unipoly's axis choice: force the x-axis)
  UniPoly dpoly = t_.defining();
  dpoly.set_var(Var::X);
  BiPoly D = BiPoly::from_unipoly(dpoly);
  UniPoly nx = num, dx = den;
  nx.set_var(Var::X);
  dx.set_var(Var::X);
  BiPoly E = BiPoly::monomial(0, 1, Rational(1)) * BiPoly::from_unipoly(dx) -
             BiPoly::from_unipoly(nx);
  // resultant with respect to t (the x-axis): swap so the shared machinery
  // eliminates the y-axis
  std::vector<UniPoly> res = subresultant_in_y(D.swap_xy(), E.swap_xy(), 0);
  UniPoly defining = res[0];
  if (defining.is_zero())
    throw std::runtime_error("AlgebraicPoint2D: degenerate coordinate resultant");
  defining = defining.squarefree_part();
  // pick out which root of the eliminant the coordinate is: refine the
  // coordinate interval until it contains exactly one candidate
  auto roots = isolate_real_roots(defining);
  Rational w(1, 1024);
  for (int iter = 0; iter < 300; ++iter) {
    RatInterval I = coord_interval(num, den, w);
    int inside = 0;
    const AlgebraicNumber* hit = nullptr;
    for (const auto& r : roots) {
      if (r.compare_rational(I.lo) >= 0 && r.compare_rational(I.hi) <= 0) {
        ++inside;
        hit = &r;
      }
    }
    if (inside == 1) return *hit;
    w = w * Rational(1, 64);
  }
  throw std::runtime_error("AlgebraicPoint2D: coordinate isolation failed");
}

const AlgebraicNumber& AlgebraicPoint2D::x_algebraic() const {
  if (!x_cache_) x_cache_ = coord_algebraic(xn_, xd_);
  return *x_cache_;
}

const AlgebraicNumber& AlgebraicPoint2D::y_algebraic() const {
  if (!y_cache_) y_cache_ = coord_algebraic(yn_, yd_);
  return *y_cache_;
}

std::optional<QuadExt> AlgebraicPoint2D::x_closed() const {
  if (!t_.closed_form()) return std::nullopt;
  return QuadExt::eval_poly(xn_, *t_.closed_form()) / QuadExt::eval_poly(xd_, *t_.closed_form());
}

std::optional<QuadExt> AlgebraicPoint2D::y_closed() const {
  if (!t_.closed_form()) return std::nullopt;
  return QuadExt::eval_poly(yn_, *t_.closed_form()) / QuadExt::eval_poly(yd_, *t_.closed_form());
}

bool AlgebraicPoint2D::same_point(const AlgebraicPoint2D& a, const AlgebraicPoint2D& b) {
  return AlgebraicNumber::compare(a.x_algebraic(), b.x_algebraic()) == 0 &&
         AlgebraicNumber::compare(a.y_algebraic(), b.y_algebraic()) == 0;
}

bool AlgebraicPoint2D::less_xy(const AlgebraicPoint2D& a, const AlgebraicPoint2D& b) {
  int cx = AlgebraicNumber::compare(a.x_algebraic(), b.x_algebraic());
  if (cx != 0) return cx < 0;
  return AlgebraicNumber::compare(a.y_algebraic(), b.y_algebraic()) < 0;
}

std::string AlgebraicPoint2D::to_string() const {
  std::ostringstream os;
  auto xc = x_closed();
  auto yc = y_closed();
  os << "(";
  if (xc)
    os << xc->to_string();
  else
    os << x_approx();
  os << ", ";
  if (yc)
    os << yc->to_string();
  else
    os << y_approx();
  os << ")";
  return os.str();
}

}  // namespace qsi
