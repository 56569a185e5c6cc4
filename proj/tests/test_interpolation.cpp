#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skewpoly/interpolation.hpp"
#include "support.hpp"

using namespace skewpoly;
using namespace skewpoly::testing;

namespace {

PointSet random_subset(const std::vector<Point>& universe, std::size_t size, Rng& rng) {
  std::vector<Point> pts = universe;
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.resize(std::min(size, pts.size()));
  return PointSet(pts);
}

std::vector<Element> random_values(const Ring& ring, std::size_t m, Rng& rng) {
  std::vector<Element> out;
  for (std::size_t k = 0; k < m; ++k) out.push_back(random_element(ring, rng));
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("separators") {
  const Ring r = Ring::prime_field(7);
  const Frame c = Frame::conventional(r, 1);
  const Point b{r.from_int(4)};
  CHECK(separator(PointSet(), b, c) == SkewPolynomial::constant(r.one()));

  const Point a{r.from_int(2)};
  const SkewPolynomial g = separator(PointSet{a}, b, c);
  CHECK(evaluate(g, a, c).is_zero());
  CHECK_FALSE(evaluate(g, b, c).is_zero());
  CHECK(g.degree() == Degree(1));
  // Up to a left scalar, x - a.
  CHECK(g.scale_left(g.leading_coefficient().inverse()) == SkewPolynomial::parse(r, "x1 + 5"));

  const Ring f4 = Ring::extension_field(2, 2);
  const Frame fr = frobenius_frame(f4, 2);
  const auto universe = all_points(f4, 2);
  Rng rng(51);
  int checked = 0;
  while (checked < 20) {
    const PointSet pair = random_subset(universe, 2, rng);
    if (!is_p_independent_set(pair, fr)) continue;
    for (const auto& p : universe) {
      if (pair.contains(p)) continue;
      if (oracle_in_closure(p, pair, fr)) {
        CHECK(code_of([&] { separator(pair, p, fr); }) == ErrorCode::NotSeparable);
        continue;
      }
      const SkewPolynomial s = separator(pair, p, fr);
      for (const auto& q : pair) CHECK(evaluate(s, q, fr).is_zero());
      CHECK_FALSE(evaluate(s, p, fr).is_zero());
      CHECK(s.degree().value() <= 2);
    }
    ++checked;
  }
}

TEST_CASE("Lagrange interpolation, GF(5), n = 2, three points") {
  const Ring r = Ring::prime_field(5);
  const Frame f = Frame::conventional(r, 2);
  const PointSet b{Point{r.zero(), r.zero()}, Point{r.one(), r.zero()}, Point{r.zero(), r.one()}};
  const std::vector<Element> values{r.from_int(1), r.from_int(2), r.from_int(3)};
  for (const SkewPolynomial& p : {lagrange_interpolate(b, values, f), lagrange_via_vandermonde(b, values, f)}) {
    for (std::size_t k = 0; k < 3; ++k) CHECK(evaluate(p, b[k], f) == values[k]);
    CHECK(p.degree().value() <= 2);
  }
}

TEST_CASE("degenerate interpolation inputs") {
  const Ring r = Ring::prime_field(3);
  const Frame f = Frame::conventional(r, 2);
  const PointSet one{Point{r.one(), r.from_int(2)}};
  CHECK(lagrange_interpolate(one, {r.from_int(2)}, f) == SkewPolynomial::constant(r.from_int(2)));
  CHECK(lagrange_via_vandermonde(one, {r.from_int(2)}, f) == SkewPolynomial::constant(r.from_int(2)));

  const PointSet two{Point{r.one(), r.zero()}, Point{r.zero(), r.one()}};
  const SkewPolynomial z = lagrange_interpolate(two, {r.zero(), r.zero()}, f);
  for (const auto& p : two) CHECK(evaluate(z, p, f).is_zero());

  const Ring f4 = Ring::extension_field(2, 2);
  const Frame fr = frobenius_frame(f4, 1);
  const PointSet cls{Point{f4.from_code(1)}, Point{f4.from_code(2)}, Point{f4.from_code(3)}};
  const std::vector<Element> vals{f4.one(), f4.zero(), f4.zero()};
  CHECK(code_of([&] { lagrange_interpolate(cls, vals, fr); }) == ErrorCode::NotPIndependent);
  CHECK(code_of([&] { lagrange_via_vandermonde(cls, vals, fr); }) == ErrorCode::NotPIndependent);
}

TEST_CASE("n = 1 conventional over GF(7) matches classical Lagrange") {
  const Ring r = Ring::prime_field(7);
  const Frame f = Frame::conventional(r, 1);
  Rng rng(52);
  for (int t = 0; t < 50; ++t) {
    const PointSet b = random_subset(all_points(r, 1), 3, rng);
    const std::vector<Element> values = random_values(r, 3, rng);
    const auto coeffs = oracle_classical_lagrange({b[0][0], b[1][0], b[2][0]}, values);
    SkewPolynomial expected(r);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      expected.add_term(Monomial(std::vector<std::uint16_t>(k, 0)), coeffs[k]);
    }
    CHECK(lagrange_interpolate(b, values, f) == expected);
    CHECK(lagrange_via_vandermonde(b, values, f) == expected);
  }
}

TEST_CASE("both interpolation paths agree on the whole closure") {
  Rng rng(53);
  for (const Frame& f : {frobenius_frame(Ring::extension_field(2, 2), 2), gf4_triangular_frame(),
                         frobenius_frame(Ring::extension_field(3, 2), 1), Frame::conventional(Ring::prime_field(3), 2)}) {
    const auto universe = all_points(f.ring(), f.n());
    for (int t = 0; t < 10; ++t) {
      const PointSet b = find_p_basis(random_subset(universe, 1 + t % 5, rng), f).basis;
      const std::vector<Element> values = random_values(f.ring(), b.size(), rng);
      const SkewPolynomial p = lagrange_interpolate(b, values, f), q = lagrange_via_vandermonde(b, values, f);
      CHECK((p.degree().is_bottom() || p.degree().value() < b.size()));
      for (std::size_t k = 0; k < b.size(); ++k) CHECK(evaluate(p, b[k], f) == values[k]);
      for (const auto& x : closure_members(b, f)) CHECK(evaluate(p, x, f) == evaluate(q, x, f));
    }
  }
}

TEST_CASE("quaternion interpolation substitutes back exactly") {
  Rng rng(54);
  for (const Frame& f : {quaternion_inner_frame(), quaternion_dense_frame(), Frame::conventional(Ring::quaternions(), 1)}) {
    for (int t = 0; t < 10; ++t) {
      PointSet candidates;
      while (candidates.size() < 3) {
        const Point p = random_point(f, rng);
        if (!candidates.contains(p)) candidates.push_back(p);
      }
      const PointSet b = find_p_basis(candidates, f).basis;
      const std::vector<Element> values = random_values(f.ring(), b.size(), rng);
      const SkewPolynomial p = lagrange_interpolate(b, values, f), q = lagrange_via_vandermonde(b, values, f);
      for (std::size_t k = 0; k < b.size(); ++k) {
        CHECK(evaluate(p, b[k], f) == values[k]);
        CHECK(evaluate(q, b[k], f) == values[k]);
      }
    }
  }
}

TEST_CASE("dual P-bases") {
  const Ring r = Ring::prime_field(5);
  const Frame c = Frame::conventional(r, 2);
  const DualPBasis single = dual_p_basis(PointSet{Point{r.one(), r.one()}}, c);
  REQUIRE(single.duals.size() == 1);
  CHECK(single.duals[0] == SkewPolynomial::constant(r.one()));

  Rng rng(55);
  for (const Frame& f : {frobenius_frame(Ring::extension_field(2, 2), 2), gf4_triangular_frame(),
                         Frame::conventional(Ring::prime_field(2), 2)}) {
    const auto universe = all_points(f.ring(), f.n());
    for (int t = 0; t < 10; ++t) {
      const PointSet b = find_p_basis(random_subset(universe, 1 + t % 6, rng), f).basis;
      const DualPBasis low = dual_p_basis(b, f), high = dual_p_basis(b, f, PivotPreference::HighMonomials);
      for (const DualPBasis* d : {&low, &high}) {
        REQUIRE(d->duals.size() == b.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
          CHECK(d->duals[i].degree().value() < b.size());
          for (std::size_t j = 0; j < b.size(); ++j) {
            const Element v = evaluate(d->duals[i], b[j], f);
            CHECK(v == (i == j ? f.ring().one() : f.ring().zero()));
          }
        }
      }
      for (const auto& x : closure_members(b, f)) {
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(evaluate(low.duals[i], x, f) == evaluate(high.duals[i], x, f));
      }
    }
  }
}

TEST_CASE("reduction modulo I(closure)") {
  const Ring r = Ring::prime_field(2);
  const Frame f = Frame::conventional(r, 2);
  const PointSet all(all_points(r, 2));
  const DualPBasis d = dual_p_basis(all, f);

  const SkewPolynomial p = SkewPolynomial::parse(r, "x1.x2.x1");
  const QuotientElement u = reduce_mod_ideal(p, d, f);
  for (std::size_t k = 0; k < 4; ++k) CHECK(u.coordinates[k] == evaluate(p, all[k], f));
  const SkewPolynomial rep = representative(u, d, f);
  CHECK(rep.degree().value() < 4);
  for (const auto& x : all) CHECK(evaluate(rep, x, f) == evaluate(p, x, f));

  for (std::size_t i = 0; i < 4; ++i) {
    QuotientElement e{std::vector<Element>(4, r.zero())};
    e.coordinates[i] = r.one();
    CHECK(reduce_mod_ideal(d.duals[i], d, f) == e);
  }
  const SkewPolynomial vanishing = SkewPolynomial::parse(r, "x1.x1 + x1");
  CHECK(reduce_mod_ideal(vanishing, d, f) == QuotientElement{std::vector<Element>(4, r.zero())});
}

TEST_CASE("quotient multiplication") {
  const Ring r = Ring::prime_field(2);
  const Frame f = Frame::conventional(r, 2);
  const PointSet all(all_points(r, 2));
  const DualPBasis d = dual_p_basis(all, f);
  const QuotientElement one = reduce_mod_ideal(SkewPolynomial::constant(r.one()), d, f);
  Rng rng(56);
  for (int t = 0; t < 30; ++t) {
    const QuotientElement u = reduce_mod_ideal(random_polynomial(f, rng, 3, 4), d, f);
    const QuotientElement v = reduce_mod_ideal(random_polynomial(f, rng, 3, 4), d, f);
    QuotientElement pointwise{std::vector<Element>(4, r.zero())};
    for (std::size_t k = 0; k < 4; ++k) pointwise.coordinates[k] = u.coordinates[k] * v.coordinates[k];
    CHECK(quotient_mul(u, v, d, f) == pointwise);
    CHECK(quotient_mul(one, v, d, f) == v);
  }

  const Frame line = Frame::conventional(r, 1);
  const DualPBasis dl = dual_p_basis(PointSet(all_points(r, 1)), line);
  const QuotientElement x = reduce_mod_ideal(SkewPolynomial::parse(r, "x1"), dl, line);
  CHECK(quotient_mul(x, x, dl, line) == x);
  CHECK(reduce_mod_ideal(SkewPolynomial::parse(r, "x1.x1"), dl, line) == x);

  const Ring f4 = Ring::extension_field(2, 2);
  const Frame fr = frobenius_frame(f4, 1);
  const DualPBasis one_sided = dual_p_basis(PointSet{Point{f4.one()}}, fr);
  const QuotientElement w{{f4.one()}};
  CHECK(code_of([&] { quotient_mul(w, w, one_sided, fr); }) == ErrorCode::NotARing);
  const Frame qf = Frame::conventional(Ring::quaternions(), 1);
  const DualPBasis qd = dual_p_basis(PointSet{Point{qf.ring().one()}}, qf);
  const QuotientElement qe{{qf.ring().one()}};
  CHECK(code_of([&] { quotient_mul(qe, qe, qd, qf); }) == ErrorCode::NotARing);
}

TEST_CASE("image dimension equals rank, kernel splits over the full space") {
  Rng rng(57);
  for (const Frame& f : {Frame::conventional(Ring::prime_field(2), 2), gf4_triangular_frame()}) {
    const auto universe = all_points(f.ring(), f.n());
    const PointSet full(universe);
    for (int t = 0; t < 8; ++t) {
      const PointSet b = find_p_basis(random_subset(universe, 1 + t % 4, rng), f).basis;
      const PointSet omega = closure_members(b, f);
      const DualPBasis d = dual_p_basis(b, f);
      // Evaluation vectors of the duals over the closure.
      std::vector<RowVector> rows;
      for (const auto& g : d.duals) {
        RowVector row;
        for (const auto& x : omega) row.push_back(evaluate(g, x, f));
        rows.push_back(row);
      }
      const DRMatrix image = DRMatrix::from_rows(f.ring(), rows, omega.size());
      CHECK(rank(image) == rank_of(omega, f));
      CHECK(rank(image) == b.size());

      const ComplementResult comp = complementary_p_basis(b, full, f);
      PointSet joint = b;
      for (const auto& c : comp.complement) joint.push_back(c);
      CHECK(joint.size() == rank_of(full, f));
      const DualPBasis dj = dual_p_basis(joint, f);
      for (int s = 0; s < 10; ++s) {
        const SkewPolynomial h = random_polynomial(f, rng, 4, 5);
        const SkewPolynomial k = h - representative(reduce_mod_ideal(h, d, f), d, f);
        for (const auto& x : omega) CHECK(evaluate(k, x, f).is_zero());
        SkewPolynomial rest = k;
        for (std::size_t i = b.size(); i < joint.size(); ++i) rest -= dj.duals[i].scale_left(evaluate(k, joint[i], f));
        for (const auto& x : universe) CHECK(evaluate(rest, x, f).is_zero());
      }
    }
  }
}
