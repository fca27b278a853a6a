#ifndef QSI_FACTOR_HPP
#define QSI_FACTOR_HPP

#include <vector>

#include "qsi/algebraic.hpp"
#include "qsi/bipoly.hpp"

namespace qsi {

// Squarefree part of a bivariate polynomial that involves only one of the two
// variables.  Throws when the input is zero or genuinely bivariate.
BiPoly squarefree_part_univariate(const BiPoly& p);

// Irreducible factors (over Q) of degree <= 2 of a univariate polynomial,
// with multiplicities; any unsplit remainder of degree >= 3 is appended
// whole.  Factors are primitive with positive leading coefficient; the
// rational content is dropped.
struct UniFactor {
  UniPoly factor;
  int multiplicity;
};
std::vector<UniFactor> factor_univariate(const UniPoly& h);

// Monic divisors of h with degree <= max_deg, built from factor_univariate.
// May be incomplete when an unsplit remainder hides further divisors; callers
// must verify candidates anyway.
std::vector<UniPoly> monic_divisors(const UniPoly& h, int max_deg);

// Factorization of a bivariate polynomial (deg_y <= 4) over Q(x)[y]:
// factors of degree <= 2 in y are fully split out; an irreducible factor of
// higher y-degree is returned whole.  Repeated factors appear repeatedly.
// Factors depending on x alone come from the y-content and are split too.
std::vector<BiPoly> factor_in_y(const BiPoly& s);

}  // namespace qsi

#endif
