#ifndef QSI_ALGEBRAIC_HPP
#define QSI_ALGEBRAIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsi/bipoly.hpp"
#include "qsi/interval.hpp"
#include "qsi/unipoly.hpp"

namespace qsi {

// Closed radical form a + b*sqrt(d) with rational a, b and d >= 0.
// Stored for algebraic numbers of degree <= 2; d is not normalized, equality
// compares values, not representations.
struct QuadExt {
  Rational a, b, d;

  QuadExt() = default;
  explicit QuadExt(const Rational& r) : a(r), b(0), d(0) {}
  QuadExt(Rational a_, Rational b_, Rational d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}

  bool is_rational() const { return b.is_zero() || d.is_zero(); }
  friend QuadExt operator+(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator-(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator*(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator/(const QuadExt& u, const QuadExt& v);
  QuadExt operator-() const { return {-a, -b, d}; }
  bool same_value(const QuadExt& o) const;
  bool is_zero() const;
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  static QuadExt eval_poly(const UniPoly& p, const QuadExt& at);
};

// Real algebraic number: squarefree defining polynomial together with an open
// isolating interval (lo, hi) containing exactly one of its real roots;
// endpoints are never roots.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  explicit AlgebraicNumber(const Rational& r);
  // defining must be squarefree with exactly one root in (lo, hi).
  AlgebraicNumber(UniPoly defining, Rational lo, Rational hi);

  const UniPoly& defining() const { return def_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  int degree() const { return def_.degree(); }
  bool is_rational() const { return rational_.has_value(); }
  const Rational& rational_value() const { return *rational_; }
  const std::optional<QuadExt>& closed_form() const { return closed_; }

  // Shrink the isolating interval to width <= w (never changes the root).
  void refine_to(const Rational& w) const;
  RatInterval interval() const { return {lo_, hi_}; }
  double approx(double width = 1e-15) const;

  // Exact sign of p at this number.
  int sign_of(const UniPoly& p) const;
  bool is_root_of(const UniPoly& p) const { return sign_of(p) == 0; }

  // Total order; exact.
  static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  int compare_rational(const Rational& r) const;

  std::string to_string() const;

 private:
  void detect_rational();
  void compute_closed_form();
  UniPoly def_;
  // interval members are refined lazily from const contexts
  mutable Rational lo_, hi_;
  std::optional<Rational> rational_;
  std::optional<QuadExt> closed_;
};

// Exact interval evaluation of a univariate polynomial (Horner).
RatInterval eval_interval(const UniPoly& p, const RatInterval& I);

// One AlgebraicNumber per distinct real root, ascending, pairwise-disjoint
// isolating intervals.  Throws on the zero polynomial.
// Method: squarefree reduction, then Descartes' rule bisection on
// integer-scaled polynomials.
std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p);

// Interval width <= w, same root.  (Functional flavor of refine_to.)
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& w);

// Exact planar point: both coordinates are rational functions of a single
// primary algebraic number t, which keeps every sign test and comparison
// exact.  The usual cases x = t (y coupled) and y = t (x coupled) are just
// special parameterizations.
class AlgebraicPoint2D {
 public:
  AlgebraicPoint2D();
  // x = xn(t)/xd(t), y = yn(t)/yd(t); denominators must not vanish at t.
  AlgebraicPoint2D(AlgebraicNumber t, UniPoly xn, UniPoly xd, UniPoly yn, UniPoly yd);
  static AlgebraicPoint2D y_of_x(AlgebraicNumber x, UniPoly y_num, UniPoly y_den);
  static AlgebraicPoint2D x_of_y(AlgebraicNumber y, UniPoly x_num, UniPoly x_den);
  static AlgebraicPoint2D from_rationals(const Rational& x, const Rational& y);

  const AlgebraicNumber& parameter() const { return t_; }

  // Exact sign of a bivariate polynomial at the point.
  int sign_of(const BiPoly& p) const;
  bool lies_on(const BiPoly& p) const { return sign_of(p) == 0; }

  RatInterval x_interval(const Rational& w) const;
  RatInterval y_interval(const Rational& w) const;
  double x_approx() const;
  double y_approx() const;

  // Exactly rational coordinates (available when the parameter is rational).
  std::optional<Rational> x_rational() const;
  std::optional<Rational> y_rational() const;

  // Coordinates as standalone algebraic numbers (defining polynomial by
  // eliminating the parameter); computed on demand and cached.
  const AlgebraicNumber& x_algebraic() const;
  const AlgebraicNumber& y_algebraic() const;

  // Closed radical coordinates when the parameter has degree <= 2.
  std::optional<QuadExt> x_closed() const;
  std::optional<QuadExt> y_closed() const;

  static bool same_point(const AlgebraicPoint2D& a, const AlgebraicPoint2D& b);
  static bool less_xy(const AlgebraicPoint2D& a, const AlgebraicPoint2D& b);

  std::string to_string() const;

 private:
  RatInterval coord_interval(const UniPoly& num, const UniPoly& den, const Rational& w) const;
  AlgebraicNumber coord_algebraic(const UniPoly& num, const UniPoly& den) const;
  AlgebraicNumber t_;
  UniPoly xn_, xd_, yn_, yd_;
  mutable std::optional<AlgebraicNumber> x_cache_, y_cache_;
};

}  // namespace qsi

#endif
