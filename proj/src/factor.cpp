#include "qsi/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsi/elimination.hpp"

namespace qsi {

namespace {

UniPoly normalize_factor(const UniPoly& f) {
  UniPoly p = f.primitive_integer();
  if (p.leading().sign() < 0) p = -p;
  return p;
}

// rational roots of h (exact), via isolation: every real rational root is
// recognized either by extraction or by the degree<=2 closed form
std::vector<Rational> rational_roots(const UniPoly& h) {
  std::vector<Rational> out;
  if (h.degree() < 1) return out;
  for (const AlgebraicNumber& r : isolate_real_roots(h))
    if (r.is_rational()) out.push_back(r.rational_value());
  return out;
}

// monic quadratics t^2 + u t + v over Q dividing h; found by reducing h mod
// the symbolic divisor and eliminating v from the two remainder coefficients
std::vector<UniPoly> monic_quadratic_divisors(const UniPoly& h) {
  std::vector<UniPoly> out;
  int n = h.degree();
  if (n < 2) return out;
  // remainder coefficients as polynomials in (u, v): x-axis = u, y-axis = v
  std::vector<BiPoly> r(n + 1);
  for (int i = 0; i <= n; ++i) r[i] = BiPoly::constant(h.coeff(i));
  BiPoly U = BiPoly::monomial(1, 0, Rational(1));
  BiPoly V = BiPoly::monomial(0, 1, Rational(1));
  for (int i = n; i >= 2; --i) {
    BiPoly q = r[i];
    if (q.is_zero()) continue;
    r[i] = BiPoly();
    r[i - 1] = r[i - 1] - q * U;
    r[i - 2] = r[i - 2] - q * V;
  }
  BiPoly R1 = r[1], R0 = r[0];
  // both remainder coefficients depend on (u, v) for any h of degree >= 2;
  // a vanishing one would make every monic quadratic a divisor
  if (R1.is_zero() || R0.is_zero()) return out;
  std::vector<UniPoly> res = subresultant_in_y(R1, R0, 0);
  UniPoly ru = res[0];
  if (ru.is_zero()) return out;  // shared component in (u,v): give up, callers verify
  for (const Rational& u0 : rational_roots(ru)) {
    UniPoly g1 = R1.subst_x(u0);  // polynomial in v
    UniPoly g0 = R0.subst_x(u0);
    UniPoly g = g1.is_zero() ? g0 : (g0.is_zero() ? g1 : UniPoly::gcd(g1, g0));
    if (g.is_zero() || g.degree() < 1) continue;
    for (const Rational& v0 : rational_roots(g)) {
      UniPoly cand({v0, u0, Rational(1)}, h.var());
      if (cand.divides(h)) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const UniPoly& a, const UniPoly& b) { return a.coeff(0) < b.coeff(0) ||
                (a.coeff(0) == b.coeff(0) && a.coeff(1) < b.coeff(1)); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<UniFactor> factor_univariate(const UniPoly& h) {
  if (h.is_zero()) throw std::domain_error("factor_univariate: zero input");
  std::vector<UniFactor> out;
  UniPoly rest = normalize_factor(h);
  if (rest.degree() == 0) return out;

  auto peel = [&](const UniPoly& f) {
    int mult = 0;
    while (f.divides(rest)) {
      rest = rest.exact_div(f);
      ++mult;
    }
    if (mult) out.push_back({normalize_factor(f), mult});
  };

  for (const Rational& r : rational_roots(rest))
    peel(UniPoly({-r, Rational(1)}, h.var()));
  if (rest.degree() >= 2)
    for (const UniPoly& q : monic_quadratic_divisors(rest)) peel(q);
  if (rest.degree() >= 1) out.push_back({normalize_factor(rest), 1});
  return out;
}

std::vector<UniPoly> monic_divisors(const UniPoly& h, int max_deg) {
  std::vector<UniPoly> divs{UniPoly::constant(Rational(1), h.var())};
  if (h.is_zero()) return divs;
  for (const UniFactor& f : factor_univariate(h)) {
    if (f.factor.degree() > max_deg) continue;
    size_t base = divs.size();
    UniPoly fm = f.factor.monic();
    UniPoly power = fm;
    for (int e = 1; e <= f.multiplicity; ++e) {
      for (size_t i = 0; i < base; ++i) {
        UniPoly d = divs[i] * power;
        if (d.degree() <= max_deg) divs.push_back(d);
        if (divs.size() > 4096) return divs;  // enough candidates; callers verify
      }
      if (e < f.multiplicity) power = power * fm;
    }
  }
  std::sort(divs.begin(), divs.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

BiPoly squarefree_part_univariate(const BiPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero input");
  if (p.degree_y() == 0) {
    UniPoly u = p.coeff_of_y(0);
    if (u.degree() == 0) return BiPoly::constant(Rational(1));
    return BiPoly::from_unipoly(u.squarefree_part());
  }
  if (p.degree_x() == 0) {
    UniPoly u = p.coeff_of_x(0);
    UniPoly sf = u.squarefree_part();
    sf.set_var(Var::Y);
    return BiPoly::from_unipoly(sf);
  }
  throw std::invalid_argument("squarefree_part_univariate: input involves both variables");
}

namespace {

// ---- polynomial roots over Q(x) and quartic splitting ----

struct RationalFunction {
  UniPoly num, den;  // den monic
};

// rational numbers c solving E(c) == 0 for every UniPoly-in-x coefficient of
// the polynomial-vector equations; candidates come from the first nonzero
// coefficient equation
std::vector<Rational> common_rational_roots(const std::vector<UniPoly>& eqs_in_c) {
  std::vector<Rational> out;
  const UniPoly* first = nullptr;
  for (const auto& e : eqs_in_c)
    if (!e.is_zero()) {
      first = &e;
      break;
    }
  if (!first) return out;  // identically satisfied: caller treats separately
  for (const Rational& c : rational_roots(*first)) {
    bool ok = true;
    for (const auto& e : eqs_in_c)
      if (!e.eval(c).is_zero()) {
        ok = false;
        break;
      }
    if (ok) out.push_back(c);
  }
  if (first->degree() == 0) out.clear();
  return out;
}

// all y0 = num/den in Q(x) with F(x, y0(x)) == 0; F viewed in y
std::vector<RationalFunction> poly_roots_in_y(const BiPoly& F) {
  std::vector<RationalFunction> out;
  int d = F.degree_y();
  if (d < 1) return out;
  UniPoly lc = F.coeff_of_y(d);
  // Kronecker: w = lc*y turns F into a monic polynomial in w over Q[x]
  // with coefficients a_j * lc^(d-1-j)
  std::vector<UniPoly> cw(d + 1);
  for (int j = 0; j <= d; ++j) {
    UniPoly aj = F.coeff_of_y(j);
    cw[j] = aj;
    for (int k = 0; k < d - 1 - j; ++k) cw[j] = cw[j] * lc;
  }
  cw[d] = UniPoly::constant(Rational(1), Var::X);
  UniPoly w0 = cw[0];  // constant coefficient of the monic transform
  if (w0.is_zero()) {
    // w = 0 is a root: y = 0, i.e. y | F
    out.push_back({UniPoly(Var::X), UniPoly::constant(Rational(1), Var::X)});
    // peel y and recurse
    BiPoly Fy = F.exact_div(BiPoly::monomial(0, 1, Rational(1)));
    for (auto& r : poly_roots_in_y(Fy)) out.push_back(r);
    return out;
  }
  int max_deg = lc.degree() + 3;
  for (const UniPoly& D : monic_divisors(w0, max_deg)) {
    // candidate root w = c * D(x): expand sum cw[j] * (cD)^j and solve for c
    // coefficient-wise; the resulting equations live in Q[c] per x-power
    std::vector<UniPoly> eqs;  // UniPolys in c, indexed by x-power
    {
      // build sum as BiPoly in (x, c): x-axis = x, y-axis = c
      BiPoly acc;
      BiPoly Dc = BiPoly::from_unipoly(D);  // in x
      BiPoly Cv = BiPoly::monomial(0, 1, Rational(1));
      BiPoly pw = BiPoly::constant(Rational(1));
      for (int j = 0; j <= d; ++j) {
        if (!cw[j].is_zero()) acc = acc + BiPoly::from_unipoly(cw[j]) * pw;
        if (j < d) pw = pw * Dc * Cv;
      }
      for (int i = 0; i <= acc.degree_x(); ++i) eqs.push_back(acc.coeff_of_x(i));
    }
    for (const Rational& c : common_rational_roots(eqs)) {
      if (c.is_zero()) continue;
      // y0 = c*D/lc, reduced
      UniPoly num = D.scaled(c);
      UniPoly den = lc;
      UniPoly g = UniPoly::gcd(num, den);
      if (g.degree() > 0) {
        num = num.exact_div(g);
        den = den.exact_div(g);
      }
      // verify
      UniPoly check = F.subst_y_rational_cleared(num, den);
      if (check.is_zero()) out.push_back({num, den});
    }
  }
  return out;
}

BiPoly linear_factor_from_root(const RationalFunction& r) {
  // den(x)*y - num(x), primitive
  BiPoly f = BiPoly::from_unipoly(r.den) * BiPoly::monomial(0, 1, Rational(1)) -
             BiPoly::from_unipoly(r.num);
  UniPoly cx = f.content_x();
  if (cx.degree() > 0) f = f.divide_by_unipoly_x(cx);
  return f;
}

// splits a y-squarefree, y-primitive polynomial; factors of y-degree <= 2
// are split out completely, higher-degree remainders stay whole
void split_squarefree_y(const BiPoly& F, std::vector<BiPoly>* out);

// quartic with constant leading y-coefficient: Descartes/Euler style split
// into two monic quadratics over Q(x) through the resolvent cubic
bool split_quartic(const BiPoly& F, std::vector<BiPoly>* out) {
  UniPoly lc = F.coeff_of_y(4);
  if (lc.degree() != 0) return false;  // only needed for total degree <= 4 inputs
  Rational lead = lc.coeff(0);
  BiPoly P = F.scaled(lead.inverse());
  UniPoly p = P.coeff_of_y(3), q = P.coeff_of_y(2), r = P.coeff_of_y(1), s = P.coeff_of_y(0);

  // resolvent cubic R(z) = z^3 - q z^2 + (pr - 4s) z - (p^2 s - 4 q s + r^2)
  UniPoly four = UniPoly::constant(Rational(4), Var::X);
  UniPoly Rz2 = -q;
  UniPoly Rz1 = p * r - four * s;
  UniPoly Rz0 = -(p * p * s - four * q * s + r * r);

  std::vector<UniPoly> z_candidates;
  if (Rz0.is_zero()) {
    z_candidates.push_back(UniPoly(Var::X));  // z = 0
    // remaining roots solve z^2 + Rz2 z + Rz1 = 0
    UniPoly disc = Rz2 * Rz2 - four * Rz1;
    UniPoly w;
    if (disc.sqrt_exact(&w)) {
      Rational half(1, 2);
      z_candidates.push_back((-Rz2 + w).scaled(half));
      z_candidates.push_back((-Rz2 - w).scaled(half));
    }
  } else {
    for (const UniPoly& D : monic_divisors(Rz0, 2)) {
      // z = c*D: c^3 D^3 + Rz2 c^2 D^2 + Rz1 c D + Rz0 == 0
      BiPoly Dc = BiPoly::from_unipoly(D);
      BiPoly Cv = BiPoly::monomial(0, 1, Rational(1));
      BiPoly acc = (Dc * Cv).pow(3) + BiPoly::from_unipoly(Rz2) * (Dc * Cv).pow(2) +
                   BiPoly::from_unipoly(Rz1) * (Dc * Cv) + BiPoly::from_unipoly(Rz0);
      std::vector<UniPoly> eqs;
      for (int i = 0; i <= acc.degree_x(); ++i) eqs.push_back(acc.coeff_of_x(i));
      for (const Rational& c : common_rational_roots(eqs))
        if (!c.is_zero()) z_candidates.push_back(D.scaled(c));
    }
  }

  Rational half(1, 2);
  for (const UniPoly& z0 : z_candidates) {
    UniPoly D1 = p * p - four * (q - z0);
    UniPoly D2 = z0 * z0 - four * s;
    UniPoly a, b;
    if (!D1.sqrt_exact(&a) || !D2.sqrt_exact(&b)) continue;
    UniPoly target = p * z0 - r.scaled(Rational(2));
    UniPoly ab = a * b;
    int u;
    if (ab == target)
      u = 1;
    else if (ab == -target)
      u = -1;
    else
      continue;
    UniPoly beta = (p + a).scaled(half), delta = (p - a).scaled(half);
    UniPoly gamma = (z0 + b.scaled(Rational(u))).scaled(half);
    UniPoly eps = (z0 - b.scaled(Rational(u))).scaled(half);
    BiPoly Y = BiPoly::monomial(0, 1, Rational(1));
    BiPoly F1 = Y * Y + BiPoly::from_unipoly(beta) * Y + BiPoly::from_unipoly(gamma);
    BiPoly F2 = Y * Y + BiPoly::from_unipoly(delta) * Y + BiPoly::from_unipoly(eps);
    if (F1 * F2 != P) continue;
    std::vector<BiPoly> sub;
    split_squarefree_y(F1.scaled(lead), &sub);
    split_squarefree_y(F2, &sub);
    out->insert(out->end(), sub.begin(), sub.end());
    return true;
  }
  return false;
}

void split_squarefree_y(const BiPoly& F, std::vector<BiPoly>* out) {
  int d = F.degree_y();
  if (d <= 0) {
    if (!F.is_constant()) out->push_back(F);
    return;
  }
  if (d == 1) {
    out->push_back(F);
    return;
  }
  if (d == 2) {
    // split iff the y-discriminant is a polynomial square
    UniPoly a = F.coeff_of_y(2), b = F.coeff_of_y(1), c = F.coeff_of_y(0);
    UniPoly disc = b * b - UniPoly::constant(Rational(4), Var::X) * a * c;
    UniPoly w;
    if (disc.sqrt_exact(&w)) {
      BiPoly Y = BiPoly::monomial(0, 1, Rational(1));
      BiPoly two_a = BiPoly::from_unipoly(a.scaled(Rational(2)));
      BiPoly G1 = two_a * Y + BiPoly::from_unipoly(b - w);
      BiPoly G2 = two_a * Y + BiPoly::from_unipoly(b + w);
      UniPoly c1 = G1.content_x();
      if (c1.degree() > 0) G1 = G1.divide_by_unipoly_x(c1);
      UniPoly c2 = G2.content_x();
      if (c2.degree() > 0) G2 = G2.divide_by_unipoly_x(c2);
      // fold the residual constant so that the product matches F
      BiPoly prod = G1 * G2;
      if (!prod.is_zero() && F.divisible_by(prod)) {
        BiPoly k = F.exact_div(prod);
        if (k.is_constant()) G1 = G1 * k;
      }
      out->push_back(G1);
      out->push_back(G2);
      return;
    }
    out->push_back(F);
    return;
  }
  // d >= 3: peel linear-in-y factors, then try the quartic split
  BiPoly rest = F;
  bool peeled = false;
  for (const RationalFunction& root : poly_roots_in_y(rest)) {
    BiPoly lf = linear_factor_from_root(root);
    while (rest.degree_y() >= 1 && rest.divisible_by(lf)) {
      rest = rest.exact_div(lf);
      out->push_back(lf);
      peeled = true;
    }
    if (rest.degree_y() <= 2) break;
  }
  if (peeled) {
    if (!rest.is_constant()) split_squarefree_y(rest, out);
    return;
  }
  if (rest.degree_y() == 4 && split_quartic(rest, out)) return;
  out->push_back(rest);
}

}  // namespace

std::vector<BiPoly> factor_in_y(const BiPoly& s) {
  if (s.is_zero()) throw std::domain_error("factor_in_y: zero input");
  if (s.degree_y() > 4) throw std::invalid_argument("factor_in_y: degree in y exceeds 4");
  std::vector<BiPoly> out;

  UniPoly cont = s.content_x();
  BiPoly pp = s;
  if (cont.degree() > 0) {
    pp = s.divide_by_unipoly_x(cont);
    for (const UniFactor& f : factor_univariate(cont))
      for (int k = 0; k < f.multiplicity; ++k) out.push_back(BiPoly::from_unipoly(f.factor));
  }
  if (pp.degree_y() == 0) return out;

  // multiplicity chain: g0 = pp, g_{i+1} = gcd(g_i, d/dy g_i)
  std::vector<BiPoly> chain{pp};
  while (chain.back().degree_y() > 0) {
    const BiPoly& g = chain.back();
    BiPoly nx = gcd_in_y(g, g.deriv_y());
    chain.push_back(nx);
    if (nx.degree_y() == 0) break;
  }
  // w_i = chain[i-1]/chain[i] = product of factors with multiplicity >= i;
  // factors of multiplicity exactly i are w_i / w_{i+1}
  std::vector<BiPoly> w;
  for (size_t i = 1; i < chain.size(); ++i) {
    BiPoly q = chain[i - 1].exact_div(chain[i]);
    UniPoly cx = q.content_x();
    if (cx.degree() > 0) q = q.divide_by_unipoly_x(cx);
    w.push_back(q);
  }
  for (size_t i = 0; i < w.size(); ++i) {
    BiPoly exact_i = (i + 1 < w.size()) ? w[i].exact_div(w[i + 1]) : w[i];
    UniPoly cx = exact_i.content_x();
    if (cx.degree() > 0) exact_i = exact_i.divide_by_unipoly_x(cx);
    if (exact_i.is_constant()) continue;
    std::vector<BiPoly> parts;
    split_squarefree_y(exact_i, &parts);
    for (const BiPoly& f : parts)
      for (size_t k = 0; k <= i; ++k) out.push_back(f);
  }
  return out;
}

}  // namespace qsi
