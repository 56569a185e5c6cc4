#include "skewpoly/interpolation.hpp"

#include <algorithm>

namespace skewpoly {

namespace {

SkewPolynomial from_rows(const RowVector& lambda, const std::vector<Monomial>& monomials, const Ring& ring) {
  SkewPolynomial out(ring);
  for (std::size_t r = 0; r < lambda.size(); ++r) out.add_term(monomials[r], lambda[r]);
  return out;
}

void require_values(const PointSet& basis, const std::vector<Element>& values) {
  if (values.size() != basis.size()) {
    throw Error(ErrorCode::InvalidInput, std::to_string(values.size()) + " values for " +
                                             std::to_string(basis.size()) + " points");
  }
}

}  // namespace

SkewPolynomial separator(const PointSet& basis, const Point& b, const Frame& frame) {
  const Ring& ring = frame.ring();
  if (basis.contains(b)) throw Error(ErrorCode::NotSeparable, "point " + b.to_text() + " belongs to the set");
  // lambda with lambda V(B, #B + 1) = 0 and lambda v(b) = 1 is a separator.
  const std::size_t d = basis.size() + 1;
  PointSet extended = basis;
  extended.push_back(b);
  RowVector target(extended.size(), ring.zero());
  target.back() = ring.one();
  try {
    return from_rows(solve_left(vandermonde(extended, d, frame), target), monomials_below(frame.n(), d), ring);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSolution) throw;
    throw Error(ErrorCode::NotSeparable, "point " + b.to_text() + " lies in the P-closure of the set");
  }
}

SkewPolynomial lagrange_interpolate(const PointSet& basis, const std::vector<Element>& values, const Frame& frame) {
  require_values(basis, values);
  const Ring& ring = frame.ring();
  SkewPolynomial f(ring);
  if (basis.empty()) return f;
  f = SkewPolynomial::constant(values[0]);
  PointSet prefix{basis[0]};
  for (std::size_t i = 1; i < basis.size(); ++i) {
    const Point& b = basis[i];
    SkewPolynomial g(ring);
    try {
      g = separator(prefix, b, frame);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSeparable) throw;
      throw Error(ErrorCode::NotPIndependent, "point " + b.to_text() + " depends on the points before it");
    }
    const Element correction = (values[i] - evaluate(f, b, frame)) * evaluate(g, b, frame).inverse();
    f += g.scale_left(correction);
    prefix.push_back(b);
  }
  return f;
}

SkewPolynomial lagrange_via_vandermonde(const PointSet& basis, const std::vector<Element>& values, const Frame& frame) {
  require_values(basis, values);
  const Ring& ring = frame.ring();
  if (basis.empty()) return SkewPolynomial(ring);
  const std::size_t d = basis.size();
  try {
    const RowVector lambda = solve_left(vandermonde(basis, d, frame), values);
    return from_rows(lambda, monomials_below(frame.n(), d), ring);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSolution) throw;
    throw Error(ErrorCode::NotPIndependent, "interpolation system is inconsistent; the points are P-dependent");
  }
}

DualPBasis dual_p_basis(const PointSet& basis, const Frame& frame, PivotPreference preference) {
  const Ring& ring = frame.ring();
  const std::size_t m = basis.size();
  DualPBasis out{basis, {}, {}};
  if (m == 0) return out;
  auto monomials = monomials_below(frame.n(), m);
  const DRMatrix full = vandermonde(basis, m, frame);
  std::vector<std::size_t> order(full.rows());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  if (preference == PivotPreference::HighMonomials) std::reverse(order.begin(), order.end());
  // Rows are taken greedily in preference order, keeping each row that is
  // independent of those kept before it.
  RowSpace space(ring, m);
  for (std::size_t k = 0; k < order.size() && space.rank() < m; ++k) space.add(full.row(order[k]));
  if (space.rank() != m) throw Error(ErrorCode::NotPIndependent, "V(B, #B) does not have full column rank");

  std::vector<std::size_t> chosen;
  for (const auto position : space.accepted()) chosen.push_back(order[position]);
  std::sort(chosen.begin(), chosen.end());
  DRMatrix square(ring, m, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t c = 0; c < m; ++c) square(k, c) = full(chosen[k], c);
    out.monomials.push_back(monomials[chosen[k]]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    RowVector e(m, ring.zero());
    e[i] = ring.one();
    out.duals.push_back(from_rows(solve_left(square, e), out.monomials, ring));
  }
  return out;
}

QuotientElement reduce_mod_ideal(const SkewPolynomial& f, const DualPBasis& dual, const Frame& frame) {
  QuotientElement out;
  for (const auto& b : dual.basis) out.coordinates.push_back(evaluate(f, b, frame));
  return out;
}

SkewPolynomial representative(const QuotientElement& u, const DualPBasis& dual, const Frame& frame) {
  if (u.coordinates.size() != dual.duals.size()) {
    throw Error(ErrorCode::InvalidInput, "quotient coordinates do not match the dual basis");
  }
  SkewPolynomial out(frame.ring());
  for (std::size_t i = 0; i < u.coordinates.size(); ++i) out += dual.duals[i].scale_left(u.coordinates[i]);
  return out;
}

QuotientElement quotient_mul(const QuotientElement& u, const QuotientElement& v, const DualPBasis& dual,
                             const Frame& frame) {
  if (!frame.ring().is_finite()) {
    throw Error(ErrorCode::NotARing, "two-sidedness of I(Omega) cannot be decided over an infinite ring");
  }
  if (!is_two_sided(dual.basis, frame)) {
    throw Error(ErrorCode::NotARing, "I(Omega) is not two-sided, so the quotient is not a ring");
  }
  return reduce_mod_ideal(mul(representative(u, dual, frame), representative(v, dual, frame), frame), dual, frame);
}

}  // namespace skewpoly
