#ifndef QSI_QUADRIC_HPP
#define QSI_QUADRIC_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "qsi/elimination.hpp"

namespace qsi {

struct UnsupportedCaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// General quadric surface: symmetric 4x4 rational matrix A with
// (x y z 1) A (x y z 1)^T = 0.
class Quadric {
 public:
  Quadric();
  explicit Quadric(const std::array<std::array<Rational, 4>, 4>& m);
  // Coefficient order: x^2, y^2, z^2, xy, xz, yz, x, y, z, 1.
  static Quadric from_coefficients(const std::array<Rational, 10>& c);

  const Rational& a(int i, int j) const { return m_[i][j]; }
  bool is_zero() const;
  std::array<Rational, 10> coefficients() const;

  // The defining polynomial arranged by powers of z:
  // c2 z^2 + c1(x,y) z + c0(x,y).
  BiPoly z2_coeff() const;  // constant, returned as BiPoly for uniformity
  BiPoly z1_coeff() const;
  BiPoly z0_coeff() const;

  Rational eval(const Rational& x, const Rational& y, const Rational& z) const;
  double eval(double x, double y, double z) const;
  // Quadratic-form value Q(v) of the second-order part.
  Rational quadratic_form(const Rational& vx, const Rational& vy, const Rational& vz) const;

  // Quadric of the substituted polynomial F(M p + t).
  Quadric transformed(const struct AffineMap3& map) const;

  static bool proportional(const Quadric& a, const Quadric& b);

  std::string to_string() const;

 private:
  std::array<std::array<Rational, 4>, 4> m_;
};

// Invertible affine coordinate change p_original = M p_new + t.
struct AffineMap3 {
  std::array<std::array<Rational, 3>, 3> m;
  std::array<Rational, 3> t;

  static AffineMap3 identity();
  bool is_identity() const;
  AffineMap3 inverse() const;
  std::array<Rational, 3> apply(const std::array<Rational, 3>& p) const;
  std::array<double, 3> apply(const std::array<double, 3>& p) const;
  std::string to_string() const;
};

// One quadric monic-quadratic in z, the other of degree exactly 1 in z.
struct MixedZPair {
  BiPoly p1, p0;  // f = z^2 + p1 z + p0
  BiPoly q1, q0;  // g = q1 z + q0, q1 != 0
};

// Normalized input scene: both quadrics in the monic form (or the mixed
// (2,1) form) together with the coordinate change that got them there.
struct NormalizedScene {
  std::variant<MonicZPair, MixedZPair> pair;
  AffineMap3 to_original;    // map normalized-frame points back
  AffineMap3 from_original;  // inverse
  Rational scale1, scale2;   // divisors applied (z^2 or z coefficient)

  bool is_mixed() const { return std::holds_alternative<MixedZPair>(pair); }
  const MonicZPair& monic() const { return std::get<MonicZPair>(pair); }
  const MixedZPair& mixed() const { return std::get<MixedZPair>(pair); }
};

// Brings both quadrics to the monic-in-z normal form, searching a fixed
// deterministic list of coordinate changes (identity, axis permutations,
// shears) when a z^2 coefficient vanishes.  With allow_transform = false the
// identity map is the only candidate, and a (2,1) pair is returned as
// MixedZPair.  Throws UnsupportedCaseError when both quadrics have degree
// <= 1 in z in every frame considered (plane-plane case).
NormalizedScene normalize(const Quadric& e1, const Quadric& e2, bool allow_transform = true);

// Semialgebraic description of the projection for the (2,1) case.
struct MixedProjection {
  BiPoly s0;      // resultant, = q0^2 - p1 q0 q1 + p0 q1^2
  BiPoly delta1;  // p1^2 - 4 p0 >= 0 on both pieces
  BiPoly q1, q0;  // piece 1: q1 != 0 (lift z = -q0/q1); piece 2: q1 = 0 = q0
  bool q1_vanishes_identically = false;  // planar-section special case
};
MixedProjection project_mixed(const MixedZPair& pair);

// Maps normalized-frame points back to the original frame.
std::array<Rational, 3> map_back(const NormalizedScene& scene, const std::array<Rational, 3>& p);
std::array<double, 3> map_back(const NormalizedScene& scene, const std::array<double, 3>& p);

}  // namespace qsi

#endif
