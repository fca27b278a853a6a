#include "qsi/quadric.hpp"

#include <sstream>

namespace qsi {

Quadric::Quadric() {
  for (auto& row : m_)
    for (auto& v : row) v = Rational(0);
}

Quadric::Quadric(const std::array<std::array<Rational, 4>, 4>& m) : m_(m) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (m_[i][j] != m_[j][i]) throw std::invalid_argument("Quadric: matrix not symmetric");
  if (is_zero()) throw std::invalid_argument("Quadric: zero matrix");
}

Quadric Quadric::from_coefficients(const std::array<Rational, 10>& c) {
  // x^2, y^2, z^2, xy, xz, yz, x, y, z, 1
  std::array<std::array<Rational, 4>, 4> m;
  Rational half(1, 2);
  m[0][0] = c[0];
  m[1][1] = c[1];
  m[2][2] = c[2];
  m[0][1] = m[1][0] = c[3] * half;
  m[0][2] = m[2][0] = c[4] * half;
  m[1][2] = m[2][1] = c[5] * half;
  m[0][3] = m[3][0] = c[6] * half;
  m[1][3] = m[3][1] = c[7] * half;
  m[2][3] = m[3][2] = c[8] * half;
  m[3][3] = c[9];
  return Quadric(m);
}

bool Quadric::is_zero() const {
  for (const auto& row : m_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

std::array<Rational, 10> Quadric::coefficients() const {
  Rational two(2);
  return {m_[0][0],       m_[1][1],       m_[2][2],       m_[0][1] * two, m_[0][2] * two,
          m_[1][2] * two, m_[0][3] * two, m_[1][3] * two, m_[2][3] * two, m_[3][3]};
}

BiPoly Quadric::z2_coeff() const { return BiPoly::constant(m_[2][2]); }

BiPoly Quadric::z1_coeff() const {
  Rational two(2);
  BiPoly p = BiPoly::monomial(1, 0, m_[0][2] * two) + BiPoly::monomial(0, 1, m_[1][2] * two) +
             BiPoly::constant(m_[2][3] * two);
  return p;
}

BiPoly Quadric::z0_coeff() const {
  Rational two(2);
  return BiPoly::monomial(2, 0, m_[0][0]) + BiPoly::monomial(0, 2, m_[1][1]) +
         BiPoly::monomial(1, 1, m_[0][1] * two) + BiPoly::monomial(1, 0, m_[0][3] * two) +
         BiPoly::monomial(0, 1, m_[1][3] * two) + BiPoly::constant(m_[3][3]);
}

Rational Quadric::eval(const Rational& x, const Rational& y, const Rational& z) const {
  std::array<Rational, 4> v{x, y, z, Rational(1)};
  Rational acc(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += m_[i][j] * v[i] * v[j];
  return acc;
}

double Quadric::eval(double x, double y, double z) const {
  double v[4] = {x, y, z, 1.0};
  double acc = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += m_[i][j].to_double() * v[i] * v[j];
  return acc;
}

Rational Quadric::quadratic_form(const Rational& vx, const Rational& vy, const Rational& vz) const {
  std::array<Rational, 3> v{vx, vy, vz};
  Rational acc(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += m_[i][j] * v[i] * v[j];
  return acc;
}

Quadric Quadric::transformed(const AffineMap3& map) const {
  // S = [[M, t], [0, 1]],  A' = S^T A S
  std::array<std::array<Rational, 4>, 4> S;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) S[i][j] = map.m[i][j];
    S[i][3] = map.t[i];
    S[3][i] = Rational(0);
  }
  S[3][3] = Rational(1);
  std::array<std::array<Rational, 4>, 4> AS{}, out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      AS[i][j] = Rational(0);
      for (int k = 0; k < 4; ++k) AS[i][j] += m_[i][k] * S[k][j];
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      out[i][j] = Rational(0);
      for (int k = 0; k < 4; ++k) out[i][j] += S[k][i] * AS[k][j];
    }
  return Quadric(out);
}

bool Quadric::proportional(const Quadric& a, const Quadric& b) {
  Rational ratio(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Rational &u = a.m_[i][j], &v = b.m_[i][j];
      if (u.is_zero() != v.is_zero()) return false;
      if (u.is_zero()) continue;
      Rational r = u / v;
      if (ratio.is_zero())
        ratio = r;
      else if (r != ratio)
        return false;
    }
  return !ratio.is_zero();
}

std::string Quadric::to_string() const {
  // assemble as a trivariate display: c0(x,y) + c1(x,y) z + c2 z^2
  std::ostringstream os;
  BiPoly c0 = z0_coeff(), c1 = z1_coeff();
  Rational c2 = m_[2][2];
  bool first = true;
  if (!c2.is_zero()) {
    if (c2.is_one())
      os << "z^2";
    else
      os << c2.to_string() << "*z^2";
    first = false;
  }
  if (!c1.is_zero()) {
    if (!first) os << " + ";
    os << "(" << c1.to_string() << ")*z";
    first = false;
  }
  if (!c0.is_zero() || first) {
    if (!first) os << " + ";
    os << c0.to_string();
  }
  return os.str();
}

// ---------------- AffineMap3 ----------------

AffineMap3 AffineMap3::identity() {
  AffineMap3 a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a.m[i][j] = Rational(i == j ? 1 : 0);
    a.t[i] = Rational(0);
  }
  return a;
}

bool AffineMap3::is_identity() const {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
    if (!t[i].is_zero()) return false;
  }
  return true;
}

AffineMap3 AffineMap3::inverse() const {
  // adjugate / determinant
  auto det2 = [&](int r0, int r1, int c0, int c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  Rational det = m[0][0] * det2(1, 2, 1, 2) - m[0][1] * det2(1, 2, 0, 2) + m[0][2] * det2(1, 2, 0, 1);
  if (det.is_zero()) throw std::domain_error("AffineMap3: singular map");
  AffineMap3 inv;
  inv.m[0][0] = det2(1, 2, 1, 2) / det;
  inv.m[0][1] = -(m[0][1] * m[2][2] - m[0][2] * m[2][1]) / det;
  inv.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  inv.m[1][0] = -det2(1, 2, 0, 2) / det;
  inv.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  inv.m[1][2] = -(m[0][0] * m[1][2] - m[0][2] * m[1][0]) / det;
  inv.m[2][0] = det2(1, 2, 0, 1) / det;
  inv.m[2][1] = -(m[0][0] * m[2][1] - m[0][1] * m[2][0]) / det;
  inv.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  for (int i = 0; i < 3; ++i) {
    inv.t[i] = Rational(0);
    for (int j = 0; j < 3; ++j) inv.t[i] -= inv.m[i][j] * t[j];
  }
  return inv;
}

std::array<Rational, 3> AffineMap3::apply(const std::array<Rational, 3>& p) const {
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = t[i];
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * p[j];
  }
  return out;
}

std::array<double, 3> AffineMap3::apply(const std::array<double, 3>& p) const {
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = t[i].to_double();
    for (int j = 0; j < 3; ++j) out[i] += m[i][j].to_double() * p[j];
  }
  return out;
}

std::string AffineMap3::to_string() const {
  if (is_identity()) return "identity";
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << "[";
    for (int j = 0; j < 3; ++j) os << m[i][j].to_string() << (j < 2 ? " " : "");
    os << "]";
  }
  os << "] + [";
  for (int i = 0; i < 3; ++i) os << t[i].to_string() << (i < 2 ? " " : "");
  os << "]";
  return os.str();
}

// ---------------- normalization ----------------

namespace {

std::vector<AffineMap3> candidate_maps() {
  std::vector<AffineMap3> out;
  out.push_back(AffineMap3::identity());
  // the six axis permutations
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int p = 1; p < 6; ++p) {
    AffineMap3 a = AffineMap3::identity();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.m[i][j] = Rational(perms[p][j] == i ? 1 : 0);
    out.push_back(a);
  }
  // shears sending e_z to (lam, mu, 1): x -> x + lam z, y -> y + mu z
  const long lams[] = {1, -1, 2, -2, 3, -3};
  for (long l : lams) {
    AffineMap3 a = AffineMap3::identity();
    a.m[0][2] = Rational(l);
    out.push_back(a);
    a = AffineMap3::identity();
    a.m[1][2] = Rational(l);
    out.push_back(a);
  }
  for (long l : lams)
    for (long u : lams) {
      AffineMap3 a = AffineMap3::identity();
      a.m[0][2] = Rational(l);
      a.m[1][2] = Rational(u);
      out.push_back(a);
    }
  return out;
}

}  // namespace

NormalizedScene normalize(const Quadric& e1, const Quadric& e2, bool allow_transform) {
  if (e1.is_zero() || e2.is_zero()) throw std::invalid_argument("normalize: zero quadric");

  std::vector<AffineMap3> maps =
      allow_transform ? candidate_maps() : std::vector<AffineMap3>{AffineMap3::identity()};

  // first pass: a common frame where both quadrics are quadratic in z
  for (const AffineMap3& map : maps) {
    // z^2 coefficient after substitution is the quadratic form at the z-column
    Rational v1 = e1.quadratic_form(map.m[0][2], map.m[1][2], map.m[2][2]);
    Rational v2 = e2.quadratic_form(map.m[0][2], map.m[1][2], map.m[2][2]);
    if (v1.is_zero() || v2.is_zero()) continue;
    Quadric f = e1.transformed(map);
    Quadric g = e2.transformed(map);
    NormalizedScene scene;
    scene.scale1 = f.a(2, 2);
    scene.scale2 = g.a(2, 2);
    Rational inv1 = scene.scale1.inverse(), inv2 = scene.scale2.inverse();
    scene.pair = MonicZPair(f.z1_coeff().scaled(inv1), f.z0_coeff().scaled(inv1),
                            g.z1_coeff().scaled(inv2), g.z0_coeff().scaled(inv2));
    scene.to_original = map;
    scene.from_original = map.inverse();
    return scene;
  }

  // second pass: one quadric quadratic in z, the other of degree exactly 1
  for (const AffineMap3& map : maps) {
    Rational v1 = e1.quadratic_form(map.m[0][2], map.m[1][2], map.m[2][2]);
    Rational v2 = e2.quadratic_form(map.m[0][2], map.m[1][2], map.m[2][2]);
    const Quadric* quad = nullptr;
    const Quadric* lin = nullptr;
    Rational vq;
    if (!v1.is_zero()) {
      quad = &e1;
      lin = &e2;
      vq = v1;
    } else if (!v2.is_zero()) {
      quad = &e2;
      lin = &e1;
      vq = v2;
    } else {
      continue;
    }
    Quadric f = quad->transformed(map);
    Quadric g = lin->transformed(map);
    BiPoly q1 = g.z1_coeff();
    // q1 == 0 is allowed: g is z-free and the pipeline takes the
    // planar-section path flagged by project_mixed
    NormalizedScene scene;
    scene.scale1 = f.a(2, 2);
    scene.scale2 = Rational(1);
    Rational inv1 = scene.scale1.inverse();
    MixedZPair mp;
    mp.p1 = f.z1_coeff().scaled(inv1);
    mp.p0 = f.z0_coeff().scaled(inv1);
    mp.q1 = q1;
    mp.q0 = g.z0_coeff();
    scene.pair = mp;
    scene.to_original = map;
    scene.from_original = map.inverse();
    return scene;
  }

  throw UnsupportedCaseError(
      "normalize: both quadrics have degree <= 1 in z in every candidate frame "
      "(plane-plane case is unsupported)");
}

MixedProjection project_mixed(const MixedZPair& pair) {
  MixedProjection out;
  out.q1 = pair.q1;
  out.q0 = pair.q0;
  out.delta1 = pair.p1 * pair.p1 - pair.p0.scaled(Rational(4));
  // Resultant(z^2 + p1 z + p0, q1 z + q0; z) = q0^2 - p1 q0 q1 + p0 q1^2
  out.s0 = pair.q0 * pair.q0 - pair.p1 * pair.q0 * pair.q1 + pair.p0 * pair.q1 * pair.q1;
  out.q1_vanishes_identically = pair.q1.is_zero();
  return out;
}

std::array<Rational, 3> map_back(const NormalizedScene& scene, const std::array<Rational, 3>& p) {
  return scene.to_original.apply(p);
}

std::array<double, 3> map_back(const NormalizedScene& scene, const std::array<double, 3>& p) {
  return scene.to_original.apply(p);
}

}  // namespace qsi
