#ifndef QSI_UNIPOLY_HPP
#define QSI_UNIPOLY_HPP

#include <string>
#include <vector>

#include "qsi/rational.hpp"

namespace qsi {

enum class Var : unsigned char { X, Y };

inline const char* var_name(Var v) { return v == Var::X ? "x" : "y"; }

// Dense univariate polynomial over Rational, coefficients ascending by degree.
// Zero polynomial has an empty coefficient list (degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Var v) : var_(v) {}
  UniPoly(std::vector<Rational> coeffs, Var v = Var::X) : c_(std::move(coeffs)), var_(v) { trim(); }
  static UniPoly constant(const Rational& r, Var v = Var::X) {
    return UniPoly(std::vector<Rational>{r}, v);
  }
  static UniPoly monomial(int deg, const Rational& coeff, Var v = Var::X);
  // Convenience for tests/fixtures: {a0, a1, ...} from longs.
  static UniPoly from_ints(std::initializer_list<long> coeffs, Var v = Var::X);

  Var var() const { return var_; }
  void set_var(Var v) { var_ = v; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  UniPoly scaled(const Rational& r) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  double eval_double(double x) const;
  // p(q(t)): substitute the variable by another polynomial.
  UniPoly compose(const UniPoly& q) const;
  UniPoly pow(unsigned e) const;

  // Taylor shift p(x + a) and dilation p(a * x).
  UniPoly shifted(const Rational& a) const;
  UniPoly dilated(const Rational& a) const;
  // x^n * p(1/x) for n = degree (coefficient reversal).
  UniPoly reversed() const;

  UniPoly monic() const;
  // Positive rational c with p = c * (integer poly with coprime coefficients).
  Rational content() const;
  UniPoly primitive_integer() const { return scaled(content().inverse()); }

  // Field division: a = q*b + r with deg r < deg b.  b must be nonzero.
  static void divrem(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r);
  // Exact division; throws if the remainder is nonzero.
  UniPoly exact_div(const UniPoly& b) const;
  bool divides(const UniPoly& b) const;  // *this | b

  // Monic gcd.  Throws std::domain_error when both inputs are zero.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);
  // Product of distinct irreducible factors, monic.
  UniPoly squarefree_part() const;
  // True iff p = w^2 for a polynomial w (returned through *out, leading > 0).
  bool sqrt_exact(UniPoly* out) const;

  int sign_variations() const;

  std::string to_string() const { return to_string(var_name(var_)); }
  std::string to_string(const char* name) const;

 private:
  void trim();
  std::vector<Rational> c_;
  Var var_ = Var::X;
};

}  // namespace qsi

#endif
