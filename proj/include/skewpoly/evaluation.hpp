#pragma once

// Right division by {x_i - a_i}, standard evaluation, fundamental functions,
// conjugation and the product rule.

#include <map>
#include <optional>
#include <vector>

#include "skewpoly/frame.hpp"
#include "skewpoly/point.hpp"
#include "skewpoly/skewring.hpp"

namespace skewpoly {

struct DivisionResult {
  std::vector<SkewPolynomial> quotients;  // G_1..G_n
  Element remainder;                      // b
};

/// F = sum_i G_i (x_i - a_i) + b with the unique G_i and b.
DivisionResult divide(const SkewPolynomial& f, const Point& a, const Frame& frame);

/// sum_i G_i (x_i - a_i) + b.
SkewPolynomial reconstruct(const DivisionResult& d, const Point& a, const Frame& frame);

/// N_m(a) for one monomial.
Element fundamental(const Monomial& m, const Point& a, const Frame& frame);

/// Fundamental functions at a fixed point, memoized on word suffixes.
class FundamentalTable {
 public:
  FundamentalTable(const Point& a, const Frame& frame);
  const Element& operator()(const Monomial& m);

 private:
  Point a_;
  const Frame& frame_;
  std::map<Monomial, Element> cache_;
};

/// F(a) = sum_m F_m N_m(a).
Element evaluate(const SkewPolynomial& f, const Point& a, const Frame& frame);
/// F(a) as the remainder of divide().
Element evaluate_by_division(const SkewPolynomial& f, const Point& a, const Frame& frame);

/// a^c = sigma(c) a c^-1 + delta(c) c^-1; throws DivisionByZero for c = 0.
Point conjugate(const Point& a, const Element& c, const Frame& frame);

struct ProductRuleReport {
  Element g_at_a;                // c = G(a)
  Element fg_at_a;               // (FG)(a)
  std::optional<Point> conjugated;  // a^c when c != 0
  std::optional<Element> f_at_conjugate;  // F(a^c)
  Element expected;              // 0 or F(a^c) G(a)
  bool holds = false;
};

ProductRuleReport check_product_rule(const SkewPolynomial& f, const SkewPolynomial& g, const Point& a,
                                     const Frame& frame);

}  // namespace skewpoly
