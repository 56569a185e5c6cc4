#pragma once

// Separator polynomials, Lagrange interpolation on P-independent sets, dual
// P-bases and the quotient F[x; sigma, delta] / I(Omega).

#include <vector>

#include "skewpoly/geometry.hpp"
#include "skewpoly/skewring.hpp"

namespace skewpoly {

/// F vanishing on B with F(b) != 0 and deg F <= #B, read off a left null
/// vector of V(B, #B + 1). Throws NotSeparable when b is in the closure of B.
SkewPolynomial separator(const PointSet& basis, const Point& b, const Frame& frame);

/// Newton construction: F_1 = a_1, then
/// F_{i+1} = F_i + (a_{i+1} - F_i(b_{i+1})) G(b_{i+1})^-1 G with G a
/// separator of {b_1..b_i} from b_{i+1}. Throws NotPIndependent.
SkewPolynomial lagrange_interpolate(const PointSet& basis, const std::vector<Element>& values, const Frame& frame);

/// Solves (F_m)_m V(B, #B) = (a_1..a_M) from the left. Throws NotPIndependent
/// when the system is inconsistent.
SkewPolynomial lagrange_via_vandermonde(const PointSet& basis, const std::vector<Element>& values, const Frame& frame);

/// Which rows of V(B, #B) the elimination prefers as pivots.
enum class PivotPreference { LowMonomials, HighMonomials };

struct DualPBasis {
  PointSet basis;
  std::vector<SkewPolynomial> duals;  // F_i(b_j) = [i == j]
  std::vector<Monomial> monomials;    // the rows of the square system
};

DualPBasis dual_p_basis(const PointSet& basis, const Frame& frame,
                        PivotPreference preference = PivotPreference::LowMonomials);

struct QuotientElement {
  std::vector<Element> coordinates;
  bool operator==(const QuotientElement&) const = default;
};

/// Coordinates (F(b_1), ..., F(b_M)).
QuotientElement reduce_mod_ideal(const SkewPolynomial& f, const DualPBasis& dual, const Frame& frame);
/// sum_i u_i F_i.
SkewPolynomial representative(const QuotientElement& u, const DualPBasis& dual, const Frame& frame);
/// Product in the quotient ring; throws NotARing unless I(Omega) is two-sided
/// (decided over finite fields only).
QuotientElement quotient_mul(const QuotientElement& u, const QuotientElement& v, const DualPBasis& dual,
                             const Frame& frame);

}  // namespace skewpoly
