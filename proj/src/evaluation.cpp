#include "skewpoly/evaluation.hpp"

namespace skewpoly {

namespace {

void require_point(const Point& a, const Frame& frame) {
  if (a.dimension() != frame.n()) {
    throw Error(ErrorCode::InvalidInput, "point of dimension " + std::to_string(a.dimension()) + " for a frame in " +
                                             std::to_string(frame.n()) + " variables");
  }
  for (const auto& c : a) {
    if (!(c.ring() == frame.ring())) throw Error(ErrorCode::RingMismatch, "point coordinate from another ring");
  }
}

void require_polynomial(const SkewPolynomial& f, const Frame& frame) {
  if (!(f.ring() == frame.ring())) throw Error(ErrorCode::RingMismatch, "polynomial over another ring");
  if (f.variables_used() > frame.n()) {
    throw Error(ErrorCode::InvalidInput, "polynomial uses x" + std::to_string(f.variables_used()) +
                                             " but the frame has " + std::to_string(frame.n()) + " variables");
  }
}

}  // namespace

DivisionResult divide(const SkewPolynomial& f, const Point& a, const Frame& frame) {
  require_polynomial(f, frame);
  require_point(a, frame);
  const Ring& ring = frame.ring();
  DivisionResult out{std::vector<SkewPolynomial>(frame.n(), SkewPolynomial(ring)), ring.zero()};
  SkewPolynomial rest = f;
  // Eliminate the leading monomial m x_i with c m (x_i - a_i) =
  // c m x_i - c (m a_i); the second part has degree <= deg m, so the leading
  // monomial strictly drops.
  while (!rest.is_zero() && !rest.leading_monomial().is_one()) {
    const Monomial lm = rest.leading_monomial();
    const Element c = rest.leading_coefficient();
    const std::size_t i = lm[lm.degree() - 1];
    const Monomial m = lm.drop_last();
    out.quotients[i].add_term(m, c);
    rest.add_term(lm, -c);
    rest += mul_monomial_constant(m, a[i], frame).scale_left(c);
  }
  out.remainder = rest.coefficient(Monomial());
  return out;
}

SkewPolynomial reconstruct(const DivisionResult& d, const Point& a, const Frame& frame) {
  const Ring& ring = frame.ring();
  SkewPolynomial out = SkewPolynomial::constant(d.remainder);
  for (std::size_t i = 0; i < d.quotients.size(); ++i) {
    SkewPolynomial factor = SkewPolynomial::monomial(ring, Monomial::variable(i));
    factor.add_term(Monomial(), -a[i]);
    out += mul(d.quotients[i], factor, frame);
  }
  return out;
}

FundamentalTable::FundamentalTable(const Point& a, const Frame& frame) : a_(a), frame_(frame) {
  require_point(a, frame);
}

const Element& FundamentalTable::operator()(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  if (m.is_one()) return cache_.emplace(m, frame_.ring().one()).first->second;
  // N_{x_i w}(a) = sum_j sigma_ij(N_w(a)) a_j + delta_i(N_w(a)).
  const Element nw = (*this)(m.drop_first());
  const std::size_t i = m[0];
  Element value = frame_.delta_is_zero(i) ? frame_.ring().zero() : frame_.delta(i)(nw);
  for (std::size_t j = 0; j < frame_.n(); ++j) {
    if (!frame_.sigma_is_zero(i, j)) value += frame_.sigma(i, j)(nw) * a_[j];
  }
  return cache_.emplace(m, std::move(value)).first->second;
}

Element fundamental(const Monomial& m, const Point& a, const Frame& frame) {
  FundamentalTable table(a, frame);
  return table(m);
}

Element evaluate(const SkewPolynomial& f, const Point& a, const Frame& frame) {
  require_polynomial(f, frame);
  FundamentalTable table(a, frame);
  Element acc = frame.ring().zero();
  for (const auto& [m, c] : f.terms()) acc += c * table(m);
  return acc;
}

Element evaluate_by_division(const SkewPolynomial& f, const Point& a, const Frame& frame) {
  return divide(f, a, frame).remainder;
}

Point conjugate(const Point& a, const Element& c, const Frame& frame) {
  require_point(a, frame);
  if (c.is_zero()) throw Error(ErrorCode::DivisionByZero, "conjugation by zero");
  const Element ci = c.inverse();
  const std::size_t n = frame.n();
  const auto s = frame.apply_sigma(c);
  const Point d = frame.apply_delta(c);
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) {
    Element v = d[i];
    for (std::size_t j = 0; j < n; ++j) v += s[i * n + j] * a[j];
    out.push_back(v * ci);
  }
  return Point(std::move(out));
}

ProductRuleReport check_product_rule(const SkewPolynomial& f, const SkewPolynomial& g, const Point& a,
                                     const Frame& frame) {
  ProductRuleReport r;
  r.g_at_a = evaluate(g, a, frame);
  r.fg_at_a = evaluate(mul(f, g, frame), a, frame);
  if (r.g_at_a.is_zero()) {
    r.expected = frame.ring().zero();
  } else {
    r.conjugated = conjugate(a, r.g_at_a, frame);
    r.f_at_conjugate = evaluate(f, *r.conjugated, frame);
    r.expected = *r.f_at_conjugate * r.g_at_a;
  }
  r.holds = r.fg_at_a == r.expected;
  return r;
}

}  // namespace skewpoly
