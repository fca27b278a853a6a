#ifndef QSI_BIPOLY_HPP
#define QSI_BIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "qsi/unipoly.hpp"

namespace qsi {

// Sparse bivariate polynomial in (x, y) over Rational.
// Terms are kept in a map ordered lexicographically by (x-exp, y-exp);
// zero coefficients are never stored.
class BiPoly {
 public:
  struct Mono {
    int i = 0;  // x exponent
    int j = 0;  // y exponent
    friend auto operator<=>(const Mono&, const Mono&) = default;
  };

  BiPoly() = default;
  static BiPoly constant(const Rational& r);
  static BiPoly monomial(int i, int j, const Rational& coeff);
  static BiPoly from_unipoly(const UniPoly& p);  // uses p.var() to pick the axis
  // Convenience builder: list of (i, j, coeff) integer triples.
  static BiPoly from_terms(std::initializer_list<std::tuple<int, int, long>> terms);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{}); }
  int degree_x() const;
  int degree_y() const;
  int total_degree() const;
  const std::map<Mono, Rational>& terms() const { return t_; }
  Rational coeff(int i, int j) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  BiPoly scaled(const Rational& r) const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly pow(unsigned e) const;
  BiPoly deriv_x() const;
  BiPoly deriv_y() const;
  BiPoly swap_xy() const;

  Rational eval(const Rational& x, const Rational& y) const;
  double eval_double(double x, double y) const;

  // Coefficient of y^j, as a polynomial in x (and the mirrored direction).
  UniPoly coeff_of_y(int j) const;
  UniPoly coeff_of_x(int i) const;
  std::vector<UniPoly> coeffs_in_y() const;  // index j, each a UniPoly in x
  static BiPoly from_coeffs_in_y(const std::vector<UniPoly>& cs);

  // Substitutions producing univariate polynomials.
  UniPoly subst_x(const Rational& x) const;  // UniPoly in y
  UniPoly subst_y(const Rational& y) const;  // UniPoly in x
  // den^degy * B(x, num/den): clears the denominator of a rational-function
  // substitution y = num(x)/den(x).
  UniPoly subst_y_rational_cleared(const UniPoly& num, const UniPoly& den) const;
  UniPoly subst_x_rational_cleared(const UniPoly& num, const UniPoly& den) const;
  // xd^degx * yd^degy * B(xn/xd, yn/yd) as a polynomial in the parameter of
  // the four inputs.
  UniPoly subst_xy_rational_cleared(const UniPoly& xn, const UniPoly& xd, const UniPoly& yn,
                                    const UniPoly& yd) const;

  // gcd over Q[x] of the y-coefficients: the part of the polynomial that
  // depends on x only.  Monic; 1 when the polynomial is y-primitive.
  UniPoly content_x() const;
  UniPoly content_y() const;
  BiPoly divide_by_unipoly_x(const UniPoly& d) const;  // exact, divisor in x only
  BiPoly divide_by_unipoly_y(const UniPoly& d) const;

  // Exact multivariate division; throws when not divisible.
  BiPoly exact_div(const BiPoly& d) const;
  bool divisible_by(const BiPoly& d) const;

  // True when a == c*b for a nonzero rational c (both nonzero).
  static bool proportional(const BiPoly& a, const BiPoly& b);

  std::string to_string() const;

 private:
  void insert_term(const Mono& m, const Rational& r);
  static bool try_divide(const BiPoly& a, const BiPoly& d, BiPoly* quotient);
  std::map<Mono, Rational> t_;
};

// gcd in Q(x)[y] via a primitive polynomial remainder sequence.  The result is
// primitive in y (content_x == 1) with monic leading UniPoly up to sign.
BiPoly gcd_in_y(const BiPoly& a, const BiPoly& b);

// Product of distinct irreducible factors of a bivariate polynomial.
BiPoly bivariate_squarefree(const BiPoly& p);

}  // namespace qsi

#endif
