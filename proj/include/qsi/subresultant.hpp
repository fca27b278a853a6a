#ifndef QSI_SUBRESULTANT_HPP
#define QSI_SUBRESULTANT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qsi {

// Dense polynomial in one symbol T over an arbitrary commutative ring.
// Ring must provide: default construction (zero), +, -, *, is_zero().
template <class Ring>
struct RingPoly {
  std::vector<Ring> c;  // ascending by degree, trimmed

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Ring coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Ring(); }

  static RingPoly constant(Ring r) {
    RingPoly p;
    p.c.push_back(std::move(r));
    p.trim();
    return p;
  }

  friend RingPoly operator+(const RingPoly& a, const RingPoly& b) {
    RingPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
      if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.trim();
    return r;
  }
  friend RingPoly operator*(const RingPoly& a, const RingPoly& b) {
    RingPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  RingPoly operator-() const {
    RingPoly r = *this;
    for (auto& x : r.c) x = Ring() - x;
    return r;
  }
};

// Determinant of a matrix with RingPoly entries by Laplace expansion over
// column subsets, memoized.  Sizes here stay <= 8, entries are degree <= 1.
template <class Ring>
RingPoly<Ring> ringpoly_det(const std::vector<std::vector<RingPoly<Ring>>>& M) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return RingPoly<Ring>::constant(Ring());
  if (n > 16) throw std::invalid_argument("ringpoly_det: matrix too large");
  std::vector<char> seen(size_t(1) << n, 0);
  std::vector<RingPoly<Ring>> memo(size_t(1) << n);

  // det over rows [n - popcount(mask), n) and columns in mask; mask != 0
  auto rec = [&](auto&& self, uint32_t mask) -> const RingPoly<Ring>& {
    if (seen[mask]) return memo[mask];
    seen[mask] = 1;
    int k = __builtin_popcount(mask);
    int row = n - k;
    RingPoly<Ring> acc;
    int pos = 0;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const RingPoly<Ring>& e = M[row][col];
      if (!e.is_zero()) {
        uint32_t sub = mask & ~(1u << col);
        RingPoly<Ring> term;
        if (sub == 0) {
          term = e;
        } else {
          term = e * self(self, sub);
        }
        if (pos % 2 == 1) term = -term;
        acc = acc + term;
      }
      ++pos;
    }
    memo[mask] = std::move(acc);
    return memo[mask];
  };
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  return rec(rec, full);
}

// j-th subresultant polynomial Sres_j(P, Q; T) of two polynomials over Ring,
// as the determinant of the coefficient matrix carrying (1, -T) staircase
// rows; Sres_0 is the resultant.  Requires 0 <= j <= min(deg P, deg Q).
template <class Ring>
RingPoly<Ring> subresultant_poly(const RingPoly<Ring>& P, const RingPoly<Ring>& Q, int j,
                                 const Ring& one) {
  const int m = P.degree(), n = Q.degree();
  if (m < 0 || n < 0) throw std::invalid_argument("subresultant: zero polynomial");
  if (j < 0 || j > std::min(m, n)) throw std::out_of_range("subresultant: index out of range");
  const int N = m + n - j;
  if (N == 0) {
    // m = n = j = 0: empty determinant, conventionally 1
    return RingPoly<Ring>::constant(one);
  }
  // entries are polynomials in T of degree <= 1
  std::vector<std::vector<RingPoly<Ring>>> M(N, std::vector<RingPoly<Ring>>(N));
  // descending coefficient lists: a0 = leading
  for (int r = 0; r < n - j; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + k] = RingPoly<Ring>::constant(P.coeff(m - k));
  for (int i = 0; i < j; ++i) {
    int row = (n - j) + i;
    int col = m + n - 2 * j - 1 + i;
    M[row][col] = RingPoly<Ring>::constant(one);
    RingPoly<Ring> minusT;
    minusT.c.resize(2);
    minusT.c[1] = Ring() - one;
    M[row][col + 1] = minusT;
  }
  for (int r = 0; r < m - j; ++r)
    for (int k = 0; k <= n; ++k) M[(n - j) + j + r][r + k] = RingPoly<Ring>::constant(Q.coeff(n - k));
  return ringpoly_det(M);
}

// Resultant as a ring element.
template <class Ring>
Ring resultant(const RingPoly<Ring>& P, const RingPoly<Ring>& Q, const Ring& one) {
  RingPoly<Ring> r = subresultant_poly(P, Q, 0, one);
  return r.coeff(0);
}

}  // namespace qsi

#endif
