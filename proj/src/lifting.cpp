#include "qsi/lifting.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include <complex>

#include <Eigen/Eigenvalues>

#include "qsi/factor.hpp"

namespace qsi {

namespace {

const UniPoly kOne = UniPoly::constant(Rational(1));

RatInterval eval_box(const BiPoly& p, const RatInterval& X, const RatInterval& Y) {
  RatInterval acc(Rational(0));
  int dy = p.degree_y();
  for (int j = dy; j >= 0; --j) {
    acc = acc * Y;
    acc = acc + eval_interval(p.coeff_of_y(j), X);
  }
  return acc;
}

// exact sign of g(x0) + h(x0) * sqrt(r(x0)), assuming r(x0) >= 0
int radical_sign_at(const UniPoly& g, const UniPoly& h, const UniPoly& r,
                    const AlgebraicNumber& x0) {
  int sg = x0.sign_of(g);
  int sr = r.is_zero() ? 0 : x0.sign_of(r);
  int sh = (sr == 0 || h.is_zero()) ? 0 : x0.sign_of(h);
  if (sh == 0) return sg;
  if (sg == 0) return sh;
  if (sg == sh) return sg;
  int t = x0.sign_of(g * g - h * h * r);
  if (t == 0) return 0;
  return t > 0 ? sg : sh;
}

int radical_sign_at_rational(const UniPoly& g, const UniPoly& h, const UniPoly& r,
                             const Rational& s) {
  Rational gv = g.eval(s);
  Rational rv = r.is_zero() ? Rational(0) : r.eval(s);
  Rational hv = (rv.is_zero() || h.is_zero()) ? Rational(0) : h.eval(s);
  int sg = gv.sign(), sh = hv.sign();
  if (sh == 0) return sg;
  if (sg == 0) return sh;
  if (sg == sh) return sg;
  int t = (gv * gv - hv * hv * rv).sign();
  if (t == 0) return 0;
  return t > 0 ? sg : sh;
}

// B(x, (u + s*sqrt(r))/w) * w^deg_y(B) = U(x) + V(x)*sqrt(r)
void subst_radical(const BiPoly& B, const UniPoly& u, int s, const UniPoly& r, const UniPoly& w,
                   UniPoly* U, UniPoly* V) {
  int dy = B.degree_y();
  std::vector<UniPoly> P(dy + 1), Q(dy + 1), wp(dy + 1);
  P[0] = kOne;
  Q[0] = UniPoly();
  wp[0] = kOne;
  Rational sr(static_cast<long>(s));
  for (int j = 1; j <= dy; ++j) {
    P[j] = P[j - 1] * u + Q[j - 1].scaled(sr) * r;
    Q[j] = P[j - 1].scaled(sr) + Q[j - 1] * u;
    wp[j] = wp[j - 1] * w;
  }
  UniPoly Uacc, Vacc;
  for (int j = 0; j <= dy; ++j) {
    UniPoly cj = B.coeff_of_y(j);
    if (cj.is_zero()) continue;
    Uacc = Uacc + cj * P[j] * wp[dy - j];
    Vacc = Vacc + cj * Q[j] * wp[dy - j];
  }
  *U = Uacc;
  *V = Vacc;
}

void reduce_triple(UniPoly* a, UniPoly* b, UniPoly* c) {
  UniPoly g = *c;
  if (!a->is_zero()) g = g.is_zero() ? *a : UniPoly::gcd(g, *a);
  if (!b->is_zero()) g = g.is_zero() ? *b : UniPoly::gcd(g, *b);
  if (g.degree() >= 1) {
    if (!a->is_zero()) *a = a->exact_div(g);
    if (!b->is_zero()) *b = b->exact_div(g);
    *c = c->exact_div(g);
  }
  Rational lc = c->leading();
  if (!lc.is_zero() && !lc.is_one()) {
    Rational inv = lc.inverse();
    *a = a->scaled(inv);
    *b = b->scaled(inv);
    *c = c->scaled(inv);
  }
}

std::string approx_str(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// a nearby rational with a small power-of-two denominator, kept strictly
// inside (lo, hi); falls back to the exact target for very tight windows
Rational snap_dyadic(const Rational& lo, const Rational& hi, const Rational& target) {
  double w = (hi - lo).to_double();
  if (!(w > 0) || w < 1e-12) return target;
  int s = std::max(0, static_cast<int>(std::ceil(std::log2(8.0 / w))));
  if (s > 45) return target;
  long den = 1L << s;
  if (std::abs(target.to_double()) * static_cast<double>(den) > 4e18) return target;
  Rational cand(std::llround(target.to_double() * static_cast<double>(den)), den);
  if (lo < cand && cand < hi) return cand;
  return target;
}

}  // namespace

// ---------------- lifting of exact points ----------------

std::vector<LiftedPoint> lift(const AlgebraicPoint2D& pt, const MonicZPair& pair,
                              const EliminationBundle& bundle, double precision) {
  if (!pt.lies_on(bundle.s0)) throw std::domain_error("lift: point is not on the cutcurve");
  (void)precision;
  std::vector<LiftedPoint> out;
  Rational w(1, 1000000000000000L);

  int sl = pt.sign_of(bundle.s1_lin);  // q1 - p1 at the point
  bool rational_pt = pt.x_rational().has_value();
  Rational xr, yr;
  if (rational_pt) {
    xr = *pt.x_rational();
    yr = *pt.y_rational();
  }

  if (sl != 0) {
    LiftedPoint lp;
    lp.source = LiftSource::S1Formula;
    if (rational_pt) {
      Rational zr = (pair.p0.eval(xr, yr) - pair.q0.eval(xr, yr)) /
                    (pair.q1.eval(xr, yr) - pair.p1.eval(xr, yr));
      lp.exact = true;
      lp.exact_coords = {xr, yr, zr};
      lp.p = {xr.to_double(), yr.to_double(), zr.to_double()};
      assert(pair.eval_f(xr, yr, zr).is_zero() && pair.eval_g(xr, yr, zr).is_zero());
    } else {
      Rational pw = w;
      bool done = false;
      for (int iter = 0; iter < 60 && !done; ++iter) {
        RatInterval X = pt.x_interval(pw), Y = pt.y_interval(pw);
        RatInterval num = eval_box(pair.p0 - pair.q0, X, Y);
        RatInterval den = eval_box(pair.q1 - pair.p1, X, Y);
        if (!den.contains_zero()) {
          RatInterval Z = num / den;
          lp.p = {X.mid_double(), Y.mid_double(), Z.mid_double()};
          done = true;
        }
        pw = pw * Rational(1, 16);
      }
      if (!done) throw std::runtime_error("lift: interval lift failed to converge");
    }
    out.push_back(std::move(lp));
    return out;
  }

  // on the line p1 = q1: quadratic formula on f
  int sd = pt.sign_of(bundle.delta1);
  if (sd < 0) throw std::domain_error("lift: on-line point outside the admissible region");
  if (sd == 0) {
    LiftedPoint lp;
    lp.source = LiftSource::QuadraticOnF;
    lp.multiplicity = 2;
    if (rational_pt) {
      Rational zr = -pair.p1.eval(xr, yr) * Rational(1, 2);
      lp.exact = true;
      lp.exact_coords = {xr, yr, zr};
      lp.p = {xr.to_double(), yr.to_double(), zr.to_double()};
    } else {
      RatInterval X = pt.x_interval(w), Y = pt.y_interval(w);
      lp.p = {X.mid_double(), Y.mid_double(), -eval_box(pair.p1, X, Y).mid_double() / 2};
    }
    out.push_back(std::move(lp));
    return out;
  }
  if (rational_pt) {
    Rational p1v = pair.p1.eval(xr, yr);
    Rational disc = p1v * p1v - Rational(4) * pair.p0.eval(xr, yr);
    Rational root;
    if (disc.sqrt_exact(&root)) {
      for (int s = -1; s <= 1; s += 2) {
        LiftedPoint lp;
        lp.source = LiftSource::QuadraticOnF;
        Rational zr = (-p1v + root * Rational(static_cast<long>(s))) * Rational(1, 2);
        lp.exact = true;
        lp.exact_coords = {xr, yr, zr};
        lp.p = {xr.to_double(), yr.to_double(), zr.to_double()};
        out.push_back(std::move(lp));
      }
    } else {
      double p1d = p1v.to_double(), dd = disc.to_double();
      for (int s = -1; s <= 1; s += 2) {
        LiftedPoint lp;
        lp.source = LiftSource::QuadraticOnF;
        lp.p = {xr.to_double(), yr.to_double(), (-p1d + s * std::sqrt(dd)) / 2};
        out.push_back(std::move(lp));
      }
    }
  } else {
    RatInterval X = pt.x_interval(w), Y = pt.y_interval(w);
    double p1d = eval_box(pair.p1, X, Y).mid_double();
    double dd = eval_box(bundle.delta1, X, Y).mid_double();
    if (dd < 0) dd = 0;
    for (int s = -1; s <= 1; s += 2) {
      LiftedPoint lp;
      lp.source = LiftSource::QuadraticOnF;
      lp.p = {X.mid_double(), Y.mid_double(), (-p1d + s * std::sqrt(dd)) / 2};
      out.push_back(std::move(lp));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LiftedPoint& u, const LiftedPoint& v) { return u.p[2] < v.p[2]; });
  return out;
}

// ---------------- critical x values ----------------

std::vector<AlgebraicNumber> critical_x_values(const CutcurveAnalysis& an) {
  std::vector<AlgebraicNumber> xs;
  if (an.degenerate_shared_z) return xs;
  const BiPoly& s_tr = an.p1_equals_q1 ? an.conic : an.bundle.s0_squarefree;
  if (s_tr.is_zero()) return xs;

  for (const SingularPoint& sp : an.singular_points) xs.push_back(sp.location.x_algebraic());
  for (const BoundaryPoint& bp : an.boundary_points) xs.push_back(bp.location.x_algebraic());

  int dy = s_tr.degree_y();
  if (dy >= 1) {
    UniPoly disc = subresultant_in_y(s_tr, s_tr.deriv_y(), 0)[0];
    if (!disc.is_zero() && disc.degree() >= 1)
      for (const AlgebraicNumber& r : isolate_real_roots(disc)) xs.push_back(r);
    UniPoly lc = s_tr.coeff_of_y(dy);
    if (lc.degree() >= 1)
      for (const AlgebraicNumber& r : isolate_real_roots(lc)) xs.push_back(r);
  } else {
    UniPoly xonly = s_tr.coeff_of_y(0);
    if (xonly.degree() >= 1)
      for (const AlgebraicNumber& r : isolate_real_roots(xonly)) xs.push_back(r);
  }

  std::sort(xs.begin(), xs.end(), [](const AlgebraicNumber& u, const AlgebraicNumber& v) {
    return AlgebraicNumber::compare(u, v) < 0;
  });
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](const AlgebraicNumber& u, const AlgebraicNumber& v) {
                         return AlgebraicNumber::compare(u, v) == 0;
                       }),
           xs.end());
  return xs;
}

// ---------------- closed-form branches ----------------

double RadicalExpr1D::eval(double x) const {
  double av = a.eval_double(x);
  double cv = c.eval_double(x);
  if (!is_rational()) {
    double rv = r.eval_double(x);
    if (rv < 0) rv = 0;
    av += b.eval_double(x) * std::sqrt(rv);
  }
  return av / cv;
}

std::string RadicalExpr1D::to_string(const char* var) const {
  std::ostringstream os;
  bool denom_trivial = c.degree() == 0 && c.coeff(0).is_one();
  if (is_rational()) {
    if (denom_trivial) return a.to_string(var);
    os << "(" << a.to_string(var) << ") / (" << c.to_string(var) << ")";
    return os.str();
  }
  os << "(" << a.to_string(var);
  std::string bs = b.to_string(var);
  if (bs == "1")
    os << " + ";
  else if (bs == "-1")
    os << " - ";
  else
    os << " + (" << bs << ")*";
  os << "sqrt(" << r.to_string(var) << "))";
  if (!denom_trivial) os << " / (" << c.to_string(var) << ")";
  return os.str();
}

double ZQuadraticForm::eval(double x, double y) const {
  double l = zlin.eval_double(x, y);
  double d = zdisc.eval_double(x, y);
  if (d < 0) d = 0;
  return (-l + sz * std::sqrt(d)) / 2;
}

std::string ZQuadraticForm::to_string() const {
  std::ostringstream os;
  os << "(";
  if (!zlin.is_zero()) os << "-(" << zlin.to_string() << ") ";
  os << (sz > 0 ? "+" : "-") << " sqrt(" << zdisc.to_string() << "))/2";
  return os.str();
}

std::string XInterval::to_string() const {
  std::ostringstream os;
  os << (lo && lo_closed ? "[" : "(");
  if (lo)
    os << (lo->closed_form() ? lo->closed_form()->to_string() : approx_str(lo->approx()));
  else
    os << "-inf";
  os << ", ";
  if (hi)
    os << (hi->closed_form() ? hi->closed_form()->to_string() : approx_str(hi->approx()));
  else
    os << "+inf";
  os << (hi && hi_closed ? "]" : ")");
  return os.str();
}

namespace {

struct DomainConditions {
  UniPoly denom;     // c(x) != 0
  UniPoly radicand;  // r(x) >= 0 when nonzero
  struct Cond {
    UniPoly g, h;
  };
  std::vector<Cond> conds;  // g + h*sqrt(r) >= 0
  UniPoly r;

  bool pass_rational(const Rational& s) const {
    if (denom.eval(s).is_zero()) return false;
    if (!radicand.is_zero() && radicand.eval(s).sign() < 0) return false;
    for (const auto& c : conds)
      if (radical_sign_at_rational(c.g, c.h, r, s) < 0) return false;
    return true;
  }
  bool pass_algebraic(const AlgebraicNumber& x0) const {
    if (x0.sign_of(denom) == 0) return false;
    if (!radicand.is_zero() && x0.sign_of(radicand) < 0) return false;
    for (const auto& c : conds)
      if (radical_sign_at(c.g, c.h, r, x0) < 0) return false;
    return true;
  }
};

std::vector<XInterval> compute_domain(const DomainConditions& dc) {
  std::vector<AlgebraicNumber> bps;
  auto add_roots = [&](const UniPoly& p) {
    if (!p.is_zero() && p.degree() >= 1)
      for (const AlgebraicNumber& t : isolate_real_roots(p)) bps.push_back(t);
  };
  add_roots(dc.denom);
  add_roots(dc.radicand);
  for (const auto& c : dc.conds) {
    if (c.h.is_zero())
      add_roots(c.g);
    else
      add_roots(c.g * c.g - c.h * c.h * dc.r);
  }
  std::sort(bps.begin(), bps.end(), [](const AlgebraicNumber& u, const AlgebraicNumber& v) {
    return AlgebraicNumber::compare(u, v) < 0;
  });
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [](const AlgebraicNumber& u, const AlgebraicNumber& v) {
                          return AlgebraicNumber::compare(u, v) == 0;
                        }),
            bps.end());

  int n = static_cast<int>(bps.size());
  std::vector<bool> slot_ok(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rational s;
    if (n == 0)
      s = Rational(0);
    else if (i == 0)
      s = bps[0].lower() - Rational(1);
    else if (i == n)
      s = bps[n - 1].upper() + Rational(1);
    else {
      while (!(bps[i - 1].upper() < bps[i].lower())) {
        bps[i - 1].refine_to((bps[i - 1].upper() - bps[i - 1].lower()) * Rational(1, 2));
        bps[i].refine_to((bps[i].upper() - bps[i].lower()) * Rational(1, 2));
      }
      s = (bps[i - 1].upper() + bps[i].lower()) * Rational(1, 2);
    }
    slot_ok[i] = dc.pass_rational(s);
  }
  std::vector<bool> bp_ok(n);
  for (int i = 0; i < n; ++i) bp_ok[i] = dc.pass_algebraic(bps[i]);

  std::vector<XInterval> out;
  int i = 0;
  while (i <= n) {
    if (!slot_ok[i]) {
      // an admissible pinch point between two failing slots
      if (i < n && bp_ok[i] && !slot_ok[i + 1]) {
        XInterval iv;
        iv.lo = bps[i];
        iv.hi = bps[i];
        out.push_back(std::move(iv));
      }
      ++i;
      continue;
    }
    XInterval iv;
    if (i > 0) {
      iv.lo = bps[i - 1];
      iv.lo_closed = bp_ok[i - 1];
    }
    int j = i;
    while (j < n && bp_ok[j] && slot_ok[j + 1]) ++j;
    if (j < n) {
      iv.hi = bps[j];
      iv.hi_closed = bp_ok[j];
    }
    out.push_back(std::move(iv));
    i = j + 1;
  }
  return out;
}

}  // namespace

std::vector<CurveBranch> try_parameterize(const CutcurveAnalysis& an, const MonicZPair& pair) {
  std::vector<CurveBranch> out;
  if (an.degenerate_shared_z) return out;
  const BiPoly& s_param = an.p1_equals_q1 ? an.conic : an.bundle.s0_squarefree;
  if (s_param.is_zero()) return out;

  std::vector<BiPoly> factors = factor_in_y(s_param);
  for (const BiPoly& f : factors)
    if (f.degree_y() >= 3 || f.degree_y() == 0) return {};  // discretize instead

  BiPoly nmr = pair.p0 - pair.q0;  // S1 lift: z = nmr/dnm on the curve
  BiPoly dnm = pair.q1 - pair.p1;
  const BiPoly& d1 = an.bundle.delta1;
  const BiPoly& d2 = an.bundle.delta2;

  for (const BiPoly& f : factors) {
    bool on_line = !an.bundle.line.is_zero() && BiPoly::proportional(f, an.bundle.line);
    if (f.degree_y() == 1) {
      UniPoly A = f.coeff_of_y(1), B = f.coeff_of_y(0);
      UniPoly yn = -B, yd = A, ydummy;
      reduce_triple(&yn, &ydummy, &yd);
      RadicalExpr1D ybr{yn, UniPoly(), UniPoly(), yd};
      DomainConditions dc;
      dc.denom = A;
      dc.r = UniPoly();
      for (const BiPoly* delta : {&d1, &d2}) {
        DomainConditions::Cond c;
        c.g = delta->subst_y_rational_cleared(-B, A);
        if (delta->degree_y() % 2 != 0) c.g = c.g * A;  // restore the sign of A^odd
        dc.conds.push_back(c);
      }
      std::vector<XInterval> dom = compute_domain(dc);
      if (dom.empty()) continue;

      if (on_line || an.p1_equals_q1) {
        for (int sz = -1; sz <= 1; sz += 2) {
          CurveBranch br;
          br.kind = CurveBranch::Kind::Parameterized;
          br.param.y = ybr;
          br.param.on_line = true;
          br.param.z = ZQuadraticForm{pair.p1, an.bundle.delta1, sz};
          br.param.domain = dom;
          out.push_back(std::move(br));
        }
      } else {
        UniPoly zn = nmr.subst_y_rational_cleared(-B, A);
        UniPoly zd = dnm.subst_y_rational_cleared(-B, A);
        for (int k = 0; k < dnm.degree_y() - nmr.degree_y(); ++k) zn = zn * A;
        for (int k = 0; k < nmr.degree_y() - dnm.degree_y(); ++k) zd = zd * A;
        if (zd.is_zero()) return {};  // whole branch inside the line: unreachable
        UniPoly dummy;
        reduce_triple(&zn, &dummy, &zd);
        CurveBranch br;
        br.kind = CurveBranch::Kind::Parameterized;
        br.param.y = ybr;
        br.param.z = RadicalExpr1D{zn, UniPoly(), UniPoly(), zd};
        br.param.domain = dom;
        out.push_back(std::move(br));
      }
      continue;
    }

    // quadratic factor a y^2 + b y + c
    UniPoly a = f.coeff_of_y(2), b = f.coeff_of_y(1), c = f.coeff_of_y(0);
    UniPoly rr = b * b - UniPoly::constant(Rational(4)) * a * c;
    UniPoly w = a.scaled(Rational(2));
    for (int s = -1; s <= 1; s += 2) {
      RadicalExpr1D ybr{-b, UniPoly::constant(Rational(static_cast<long>(s))), rr, w};
      DomainConditions dc;
      dc.denom = w;
      dc.radicand = rr;
      dc.r = rr;
      for (const BiPoly* delta : {&d1, &d2}) {
        UniPoly g, h;
        subst_radical(*delta, -b, s, rr, w, &g, &h);
        if (delta->degree_y() % 2 != 0) {
          g = g * w;
          h = h * w;
        }
        dc.conds.push_back({g, h});
      }
      std::vector<XInterval> dom = compute_domain(dc);
      if (dom.empty()) continue;

      if (an.p1_equals_q1) {
        for (int sz = -1; sz <= 1; sz += 2) {
          CurveBranch br;
          br.kind = CurveBranch::Kind::Parameterized;
          br.param.y = ybr;
          br.param.z = ZQuadraticForm{pair.p1, an.bundle.delta1, sz};
          br.param.domain = dom;
          out.push_back(std::move(br));
        }
        continue;
      }
      UniPoly un, vn, ud, vd;
      subst_radical(nmr, -b, s, rr, w, &un, &vn);
      subst_radical(dnm, -b, s, rr, w, &ud, &vd);
      for (int k = 0; k < dnm.degree_y() - nmr.degree_y(); ++k) {
        un = un * w;
        vn = vn * w;
      }
      for (int k = 0; k < nmr.degree_y() - dnm.degree_y(); ++k) {
        ud = ud * w;
        vd = vd * w;
      }
      UniPoly norm = ud * ud - vd * vd * rr;
      if (norm.is_zero()) return {};  // a radical branch cannot lie in the line
      UniPoly za = un * ud - vn * vd * rr;
      UniPoly zb = vn * ud - un * vd;
      reduce_triple(&za, &zb, &norm);
      CurveBranch br;
      br.kind = CurveBranch::Kind::Parameterized;
      br.param.y = ybr;
      br.param.z = RadicalExpr1D{za, zb, rr, norm};
      br.param.domain = dom;
      out.push_back(std::move(br));
    }
  }
  return out;
}

// ---------------- discretization ----------------

namespace {

std::vector<double> lift_sample(const Rational& alpha, const AlgebraicNumber& y,
                                const MonicZPair& pair, const EliminationBundle& bundle,
                                const Rational& width, bool force_quadratic) {
  UniPoly line_y = bundle.line.subst_x(alpha);
  bool on_line = force_quadratic || line_y.is_zero() || y.sign_of(line_y) == 0;
  if (!on_line) {
    UniPoly num = (pair.p0 - pair.q0).subst_x(alpha);
    UniPoly den = (pair.q1 - pair.p1).subst_x(alpha);
    Rational pw = width;
    for (int iter = 0; iter < 60; ++iter) {
      y.refine_to(pw);
      RatInterval I = y.interval();
      RatInterval D = eval_interval(den, I);
      if (!D.contains_zero()) {
        RatInterval Z = eval_interval(num, I) / D;
        if (Z.width() <= width) return {Z.mid_double()};
      }
      pw = pw * Rational(1, 16);
    }
    throw std::runtime_error("lift_sample: linear-subresultant lift failed to converge");
  }
  UniPoly p1y = pair.p1.subst_x(alpha);
  y.refine_to(width * Rational(1, 1024));
  RatInterval I = y.interval();
  double p1v = eval_interval(p1y, I).mid_double();
  double discv = eval_interval(bundle.delta1.subst_x(alpha), I).mid_double();
  if (discv < 0) discv = 0;
  double sq = std::sqrt(discv);
  return {(-p1v - sq) / 2, (-p1v + sq) / 2};
}

struct AnchorInfo {
  const AlgebraicPoint2D* location;
  std::string label;
};

}  // namespace


namespace {

// sign-preserving integer scaling (primitive_integer would flip the sign of
// a negative-leading polynomial, which breaks Sturm chains)
UniPoly scale_keep_sign(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.content().abs().inverse());
}

// number of distinct real roots via a Sturm chain (exact)
int sturm_real_count(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(scale_keep_sign(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return 0;
  chain.push_back(scale_keep_sign(d));
  while (!chain.back().is_zero() && chain.back().degree() >= 0) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    if (b.degree() < 1) break;
    UniPoly r;
    UniPoly::divrem(a, b, nullptr, &r);
    if (r.is_zero()) break;
    chain.push_back(scale_keep_sign(-r));
  }
  auto variations = [&](int at_minus_inf) {
    int v = 0, last = 0;
    for (const UniPoly& q : chain) {
      if (q.is_zero()) continue;
      int s = q.leading().sign();
      if (at_minus_inf && q.degree() % 2 != 0) s = -s;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(1) - variations(0);
}

// real roots of a low-degree polynomial via the companion matrix, one Newton
// polishing step, certified afterwards by exact sign-change brackets
std::vector<double> companion_real_roots(const UniPoly& p) {
  int n = p.degree();
  std::vector<double> out;
  if (n < 1) return out;
  std::vector<double> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = p.coeff(i).to_double();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) M(i, n - 1) = -c[i] / c[n];
  for (int i = 1; i < n; ++i) M(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, /*computeEigenvectors=*/false);
  UniPoly dp = p.derivative();
  double scale = 0;
  for (int i = 0; i <= n; ++i) scale = std::max(scale, std::abs(c[i]));
  for (int i = 0; i < n; ++i) {
    std::complex<double> ev = es.eigenvalues()[i];
    if (std::abs(ev.imag()) > 1e-8 * (1 + std::abs(ev.real()))) continue;
    double v = ev.real();
    double pv = p.eval_double(v), dv = dp.eval_double(v);
    if (dv != 0) v -= pv / dv;  // one polishing step
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// certified-real roots: numeric first, exact isolation fallback
std::vector<AlgebraicNumber> certified_sample_roots(const UniPoly& p) {
  UniPoly sf = p;
  UniPoly g = UniPoly::gcd(p, p.derivative());
  if (g.degree() > 0) return isolate_real_roots(p);  // at a critical slice: be exact
  int count = sturm_real_count(sf);
  if (count == 0) return {};
  std::vector<double> numeric = companion_real_roots(sf);
  // merge duplicates the eigensolver may report for near-equal roots
  std::vector<double> distinct;
  for (double v : numeric)
    if (distinct.empty() || v - distinct.back() > 1e-9 * (1 + std::abs(v))) distinct.push_back(v);
  if (static_cast<int>(distinct.size()) == count) {
    std::vector<AlgebraicNumber> roots;
    bool ok = true;
    for (size_t i = 0; i < distinct.size() && ok; ++i) {
      double v = distinct[i];
      double gapl = (i == 0) ? 1.0 : (v - distinct[i - 1]) / 4;
      double gapr = (i + 1 == distinct.size()) ? 1.0 : (distinct[i + 1] - v) / 4;
      double d = std::min({1e-7 * (1 + std::abs(v)), gapl, gapr});
      if (!(d > 0)) {
        ok = false;
        break;
      }
      int shift = std::min(52, std::max(20, static_cast<int>(std::ceil(std::log2(4.0 / d)))));
      double den = std::ldexp(1.0, shift);
      if (std::abs(v) * den > 4e18) {
        ok = false;  // dyadic bracket would overflow: use the exact isolator
        break;
      }
      Rational lo(static_cast<long>(std::floor((v - d) * den)), 1L << shift);
      Rational hi(static_cast<long>(std::ceil((v + d) * den)), 1L << shift);
      if (!(lo < hi) || sf.eval(lo).sign() * sf.eval(hi).sign() >= 0) {
        ok = false;
        break;
      }
      roots.emplace_back(sf, lo, hi);
    }
    // distinct certified brackets matching the exact count pin every root
    if (ok && static_cast<int>(roots.size()) == count) {
      for (size_t i = 0; i + 1 < roots.size(); ++i)
        if (!(roots[i].upper() <= roots[i + 1].lower())) {
          ok = false;
          break;
        }
      if (ok) return roots;
    }
  }
  return isolate_real_roots(p);
}

}  // namespace

std::vector<CurveBranch> trace_branches(const CutcurveAnalysis& an, const MonicZPair& pair,
                                        const TraceOptions& opts) {
  std::vector<CurveBranch> out;
  if (an.degenerate_shared_z) return out;
  BiPoly s_tr = an.p1_equals_q1 ? an.conic : an.bundle.s0_squarefree;
  if (s_tr.is_zero()) return out;
  long prec_den = 1000000000000L;
  if (opts.precision > 1e-15 && opts.precision < 1e-3)
    prec_den = std::max(1000L, static_cast<long>(std::llround(1.0 / opts.precision)));
  const Rational kWidth(1, prec_den);

  // vertical-line components are swept in y separately; the abscissa may be
  // any real algebraic number, all sign decisions stay exact
  UniPoly contx = s_tr.content_x();
  if (contx.degree() > 0) {
    s_tr = s_tr.divide_by_unipoly_x(contx);
    for (const AlgebraicNumber& xrn : isolate_real_roots(contx)) {
      // square the precision: quadratic-formula lifting takes a square root
      // of values that vanish to first order in the abscissa error
      xrn.refine_to(kWidth * kWidth);
      double xv = xrn.approx();
      // window in y from the discriminant roots along the line (double is
      // enough for the window; membership below is exact)
      double lo = -opts.window_halfwidth, hi = opts.window_halfwidth;
      for (const BiPoly* delta : {&an.bundle.delta1, &an.bundle.delta2}) {
        // coarse scan for sign changes of delta(xv, y) in double
        double prev = delta->eval_double(xv, -opts.window_halfwidth * 4);
        for (int i = 1; i <= 256; ++i) {
          double y = -opts.window_halfwidth * 4 + opts.window_halfwidth * 8 * i / 256.0;
          double cur = delta->eval_double(xv, y);
          if ((prev <= 0 && cur > 0) || (prev >= 0 && cur < 0)) {
            lo = std::min(lo, y - 1.0);
            hi = std::max(hi, y + 1.0);
          }
          prev = cur;
        }
      }
      int n = std::max(8, opts.samples_per_interval * 2);
      Polyline3 pl_lo, pl_hi;  // the two z-sheets over the line
      Polyline3* sheets[2] = {&pl_lo, &pl_hi};
      auto flush = [&]() {
        for (Polyline3* pl : sheets) {
          if (pl->pts.size() >= 2) {
            CurveBranch br;
            br.kind = CurveBranch::Kind::Polyline;
            br.polyline = std::move(*pl);
            out.push_back(std::move(br));
          }
          *pl = Polyline3{};
        }
      };
      for (int i = 0; i <= n; ++i) {
        double yv = lo + (hi - lo) * i / n;
        Rational yq(static_cast<long>(std::llround(yv * 1048576.0)), 1048576L);
        if (xrn.sign_of(an.bundle.delta1.subst_y(yq)) < 0 ||
            xrn.sign_of(an.bundle.delta2.subst_y(yq)) < 0) {
          flush();
          continue;
        }
        int line_sign = xrn.sign_of(an.bundle.line.subst_y(yq));
        if (line_sign != 0) {
          // z = (p0-q0)/(q1-p1) evaluated on the line by interval refinement
          UniPoly num = (pair.p0 - pair.q0).subst_y(yq);
          UniPoly den = (pair.q1 - pair.p1).subst_y(yq);
          Rational pw = kWidth;
          for (int iter = 0; iter < 60; ++iter) {
            xrn.refine_to(pw);
            RatInterval I = xrn.interval();
            RatInterval D = eval_interval(den, I);
            if (!D.contains_zero()) {
              RatInterval Z = eval_interval(num, I) / D;
              pl_lo.pts.push_back({xv, yq.to_double(), Z.mid_double()});
              break;
            }
            pw = pw * Rational(1, 16);
          }
        } else {
          RatInterval I = xrn.interval();
          double p1v = eval_interval(pair.p1.subst_y(yq), I).mid_double();
          double disc = eval_interval(an.bundle.delta1.subst_y(yq), I).mid_double();
          if (disc < 0) disc = 0;
          double sq = std::sqrt(disc);
          pl_lo.pts.push_back({xv, yq.to_double(), (-p1v - sq) / 2});
          pl_hi.pts.push_back({xv, yq.to_double(), (-p1v + sq) / 2});
        }
      }
      flush();
    }
    if (s_tr.degree_y() < 1 && s_tr.degree_x() < 1) return out;
  }

  std::vector<AlgebraicNumber> crit = critical_x_values(an);
  std::vector<AnchorInfo> anchors;
  {
    int si = 0, bi = 0;
    for (const SingularPoint& sp : an.singular_points) {
      std::ostringstream lbl;
      lbl << "S" << ++si;
      anchors.push_back({&sp.location, lbl.str()});
    }
    for (const BoundaryPoint& bp : an.boundary_points) {
      std::ostringstream lbl;
      lbl << "B" << ++bi;
      anchors.push_back({&bp.location, lbl.str()});
    }
  }

  std::vector<std::pair<Rational, Rational>> gaps;
  std::vector<std::pair<int, int>> gap_crits;
  if (crit.empty()) {
    Rational wnd(static_cast<long>(opts.window_halfwidth));
    gaps.push_back({-wnd, wnd});
    gap_crits.push_back({-1, -1});
  } else {
    for (auto& cx : crit) cx.refine_to(Rational(1, 1048576));
    for (size_t i = 0; i + 1 < crit.size(); ++i)
      while (!(crit[i].upper() <= crit[i + 1].lower())) {
        crit[i].refine_to((crit[i].upper() - crit[i].lower()) * Rational(1, 2));
        crit[i + 1].refine_to((crit[i + 1].upper() - crit[i + 1].lower()) * Rational(1, 2));
      }
    Rational span = crit.back().upper() - crit.front().lower();
    Rational pad = std::max(Rational(1), span * Rational(1, 4));
    gaps.push_back({crit.front().lower() - pad, crit.front().lower()});
    gap_crits.push_back({-1, 0});
    for (size_t i = 0; i + 1 < crit.size(); ++i) {
      gaps.push_back({crit[i].upper(), crit[i + 1].lower()});
      gap_crits.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    }
    gaps.push_back({crit.back().upper(), crit.back().upper() + pad});
    gap_crits.push_back({static_cast<int>(crit.size()) - 1, -1});
  }

  for (size_t gi = 0; gi < gaps.size(); ++gi) {
    const auto& [glo, ghi] = gaps[gi];
    if (!(glo < ghi)) continue;
    int k = std::max(2, opts.samples_per_interval);
    Rational step = (ghi - glo) / Rational(static_cast<long>(k + 1));

    std::vector<Rational> alphas;
    std::vector<std::vector<AlgebraicNumber>> yroots;
    int expected = -1;
    bool inconsistent = false;
    for (int j = 1; j <= k; ++j) {
      Rational target = glo + step * Rational(static_cast<long>(j));
      Rational alpha = snap_dyadic(target - step * Rational(1, 3),
                                   target + step * Rational(1, 3), target);
      UniPoly py = s_tr.subst_x(alpha);
      std::vector<AlgebraicNumber> inregion;
      if (!py.is_zero() && py.degree() >= 1) {
        for (const AlgebraicNumber& y : certified_sample_roots(py)) {
          int s1 = y.sign_of(an.bundle.delta1.subst_x(alpha));
          int s2 = y.sign_of(an.bundle.delta2.subst_x(alpha));
          if (s1 >= 0 && s2 >= 0) inregion.push_back(y);
        }
      }
      int zcount = 0;
      UniPoly line_y = an.bundle.line.subst_x(alpha);
      for (const AlgebraicNumber& y : inregion)
        zcount += (an.p1_equals_q1 || line_y.is_zero() || y.sign_of(line_y) == 0) ? 2 : 1;
      if (expected < 0)
        expected = zcount;
      else if (zcount != expected)
        inconsistent = true;
      alphas.push_back(alpha);
      yroots.push_back(std::move(inregion));
    }
    if (inconsistent)
      throw InternalInconsistencyError(
          "trace_branches: branch count changed inside a sample interval "
          "(missed critical value); recompute critical values");
    if (expected <= 0) continue;

    std::vector<Polyline3> lines(expected);
    for (size_t j = 0; j < alphas.size(); ++j) {
      double xv = alphas[j].to_double();
      size_t slot = 0;
      for (const AlgebraicNumber& y : yroots[j]) {
        bool quad = an.p1_equals_q1;
        std::vector<double> zs = lift_sample(alphas[j], y, pair, an.bundle, kWidth, quad);
        std::sort(zs.begin(), zs.end());
        double yv = y.approx();
        for (double z : zs) {
          if (slot < lines.size()) lines[slot].pts.push_back({xv, yv, z});
          ++slot;
        }
      }
      if (slot != static_cast<size_t>(expected))
        throw InternalInconsistencyError("trace_branches: inconsistent lift multiplicity");
    }

    auto attach = [&](int crit_idx, bool at_start) {
      if (crit_idx < 0) return;
      const AlgebraicNumber& cx = crit[static_cast<size_t>(crit_idx)];
      for (const AnchorInfo& a : anchors) {
        if (AlgebraicNumber::compare(a.location->x_algebraic(), cx) != 0) continue;
        double ax = a.location->x_approx(), ay = a.location->y_approx();
        std::vector<LiftedPoint> lifted;
        try {
          lifted = lift(*a.location, pair, an.bundle);
        } catch (const std::exception&) {
          continue;  // off the region: nothing to anchor in space
        }
        for (Polyline3& pl : lines) {
          if (pl.pts.empty()) continue;
          const auto& e = at_start ? pl.pts.front() : pl.pts.back();
          double step_x = std::abs(e[0] - ax);
          if (std::abs(e[1] - ay) > 64 * (step_x + 1e-12) * (1 + std::abs(ay))) continue;
          const LiftedPoint* best = nullptr;
          double bestd = 1e300;
          for (const LiftedPoint& lp : lifted) {
            double d = std::abs(lp.p[2] - e[2]);
            if (d < bestd) {
              bestd = d;
              best = &lp;
            }
          }
          if (!best) continue;
          if (bestd > 64 * (step_x + 1e-12) * (1 + std::abs(best->p[2]))) continue;
          std::array<double, 3> ap{ax, ay, best->p[2]};
          if (at_start) {
            pl.pts.insert(pl.pts.begin(), ap);
            pl.start_anchor = a.label;
          } else {
            pl.pts.push_back(ap);
            pl.end_anchor = a.label;
          }
        }
      }
    };
    attach(gap_crits[gi].first, true);
    attach(gap_crits[gi].second, false);

    for (Polyline3& pl : lines) {
      if (pl.pts.size() < 2) continue;
      CurveBranch br;
      br.kind = CurveBranch::Kind::Polyline;
      br.polyline = std::move(pl);
      out.push_back(std::move(br));
    }
  }
  return out;
}

// ---------------- assembly ----------------

IntersectionResult assemble(const CutcurveAnalysis& an, const MonicZPair& pair,
                            const NormalizedScene& scene, const AssembleOptions& opts) {
  IntersectionResult res;
  if (pair.p1 == pair.q1 && pair.p0 == pair.q0) {
    res.identical_quadrics = true;
    res.shared_component = true;
    return res;
  }
  if (an.degenerate_shared_z) {
    res.shared_component = true;
    return res;
  }

  std::vector<CurveBranch> param;
  if (opts.path != AssembleOptions::Path::Discretize) param = try_parameterize(an, pair);
  if (!param.empty()) {
    res.branches = std::move(param);
    res.parameterized = true;
  } else {
    res.branches = trace_branches(an, pair, opts.trace);
    res.parameterized = false;
  }

  int si = 0;
  for (const SingularPoint& sp : an.singular_points) {
    ++si;
    if (!sp.in_region) continue;
    std::vector<LiftedPoint> lifted = lift(sp.location, pair, an.bundle);
    std::string label = "S" + std::to_string(si);
    for (LiftedPoint& lp : lifted) {
      lp.label = label;
      res.singular_lifted.push_back(lp);
    }

    double px = sp.location.x_approx(), py = sp.location.y_approx();
    bool adjacent = false;
    for (const CurveBranch& br : res.branches) {
      if (br.kind == CurveBranch::Kind::Polyline) {
        for (const auto& q : br.polyline.pts) {
          if (std::hypot(q[0] - px, q[1] - py) < 1e-6 * (1 + std::abs(px) + std::abs(py))) {
            adjacent = true;
            break;
          }
        }
        // anchored endpoints carry the exact location even when samples are far
        if (!adjacent && (br.polyline.start_anchor == "S" + std::to_string(si) ||
                          br.polyline.end_anchor == "S" + std::to_string(si)))
          adjacent = true;
      } else {
        for (const XInterval& iv : br.param.domain) {
          double lo = iv.lo ? iv.lo->approx() : -1e300;
          double hi = iv.hi ? iv.hi->approx() : 1e300;
          if (px < lo - 1e-9 || px > hi + 1e-9) continue;
          double yv = br.param.y.eval(px);
          if (std::abs(yv - py) < 1e-6 * (1 + std::abs(py))) {
            adjacent = true;
            break;
          }
        }
      }
      if (adjacent) break;
    }
    if (!adjacent)
      for (const LiftedPoint& lp : res.singular_lifted)
        if (lp.label == label) res.isolated_points.push_back(lp);
  }

  if (!scene.to_original.is_identity()) {
    for (CurveBranch& br : res.branches)
      if (br.kind == CurveBranch::Kind::Polyline)
        for (auto& q : br.polyline.pts) q = scene.to_original.apply(q);
    auto map_points = [&](std::vector<LiftedPoint>& v) {
      for (LiftedPoint& lp : v) {
        if (lp.exact) {
          auto m = scene.to_original.apply(lp.exact_coords);
          lp.exact_coords = m;
          lp.p = {m[0].to_double(), m[1].to_double(), m[2].to_double()};
        } else {
          lp.p = scene.to_original.apply(lp.p);
        }
      }
    };
    map_points(res.singular_lifted);
    map_points(res.isolated_points);
  }

  res.empty_intersection =
      res.branches.empty() && res.isolated_points.empty() && res.singular_lifted.empty();
  return res;
}

}  // namespace qsi
