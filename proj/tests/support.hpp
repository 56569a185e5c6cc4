#pragma once

// Frames, random generators and brute-force oracles shared by the unit tests
// and the acceptance binary. The oracles deliberately avoid the library's
// fast paths: they recompute products, evaluations and closures from the
// defining rules.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skewpoly/evaluation.hpp"
#include "skewpoly/frame.hpp"
#include "skewpoly/geometry.hpp"
#include "skewpoly/skewring.hpp"

namespace skewpoly::testing {

using Rng = std::mt19937_64;

struct NamedFrame {
  std::string name;
  Frame frame;
};

inline Element omega(const Ring& gf4) { return gf4.from_code(2); }

inline Frame frobenius_frame(const Ring& ring, std::size_t n, unsigned power = 1) {
  std::vector<AdditiveMap> endos(n, AdditiveMap::frobenius(ring, power));
  std::vector<AdditiveMap> ders(n, AdditiveMap::zero(ring));
  return make_diagonal_frame(ring, endos, ders);
}

/// a -> c a c^-1 as a catalog map.
inline AdditiveMap inner_automorphism(const Element& c) {
  return AdditiveMap::compose({AdditiveMap::left_mul(c), AdditiveMap::right_mul(c.inverse())});
}

/// n = 2, sigma = diag(conjugation by 1+i, Id), delta(a) = sigma(a) (j, k) - (j, k) a.
inline Frame quaternion_inner_frame() {
  const Ring h = Ring::quaternions();
  const AdditiveMap zero = AdditiveMap::zero(h);
  std::vector<AdditiveMap> sigma{inner_automorphism(h.quaternion(1, 1, 0, 0)), zero, zero, AdditiveMap::identity(h)};
  return make_inner_frame(h, 2, sigma, Point{h.quaternion(0, 0, 1, 0), h.quaternion(0, 0, 0, 1)});
}

/// n = 2, sigma(a) = M diag(a, a) M^-1 with a non-diagonal quaternion M and an
/// inner derivation: every sigma_ij is nonzero.
inline Frame quaternion_dense_frame() {
  const Ring h = Ring::quaternions();
  // M = [[1, i], [j, 1]], M^-1 = [[(1+k)/2, (-i-j)/2], [(-i-j)/2, (1-k)/2]].
  const Element one = h.one(), i = h.quaternion(0, 1, 0, 0), j = h.quaternion(0, 0, 1, 0);
  const mpq_class half(1, 2);
  const Element x = h.quaternion(half, 0, 0, half);
  const Element y = h.quaternion(0, -half, -half, 0);
  const Element z = y;
  const Element w = h.quaternion(half, 0, 0, -half);
  const Element m[2][2] = {{one, i}, {j, one}};
  const Element minv[2][2] = {{x, y}, {z, w}};
  std::vector<AdditiveMap> sigma;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      std::vector<AdditiveMap> terms;
      for (int l = 0; l < 2; ++l) {
        terms.push_back(AdditiveMap::compose({AdditiveMap::left_mul(m[r][l]), AdditiveMap::right_mul(minv[l][c])}));
      }
      sigma.push_back(AdditiveMap::sum(terms));
    }
  }
  Frame::make(h, 2, sigma, {AdditiveMap::zero(h), AdditiveMap::zero(h)});
  return make_inner_frame(h, 2, sigma, Point{h.quaternion(1, 0, 1, 0), h.quaternion(0, 2, 0, -1)});
}

/// GF(4), n = 2: sigma(a) = [[a, a + a^2], [0, a^2]] (conjugate of
/// diag(a, a^2) by [[1, 1], [0, 1]]) with the inner derivation for
/// beta = (1, omega).
inline Frame gf4_triangular_frame() {
  const Ring f = Ring::extension_field(2, 2);
  const AdditiveMap id = AdditiveMap::identity(f), fr = AdditiveMap::frobenius(f), zero = AdditiveMap::zero(f);
  std::vector<AdditiveMap> sigma{id, AdditiveMap::sum({id, fr}), zero, fr};
  return make_inner_frame(f, 2, sigma, Point{f.one(), omega(f)});
}

/// The acceptance frame matrix: conventional GF(5), Frobenius GF(4) and
/// GF(9), the quaternion inner frame.
inline std::vector<NamedFrame> acceptance_frames() {
  return {
      {"GF(5) conventional n=2", Frame::conventional(Ring::prime_field(5), 2)},
      {"GF(4) Frobenius n=2", frobenius_frame(Ring::extension_field(2, 2), 2)},
      {"GF(9) Frobenius n=2", frobenius_frame(Ring::extension_field(3, 2), 2)},
      {"H(Q) inner n=2", quaternion_inner_frame()},
  };
}

/// A wider matrix for unit tests.
inline std::vector<NamedFrame> test_frames() {
  auto frames = acceptance_frames();
  frames.push_back({"GF(4) triangular inner n=2", gf4_triangular_frame()});
  frames.push_back({"H(Q) dense inner n=2", quaternion_dense_frame()});
  frames.push_back({"GF(8) Frobenius^2 n=1", frobenius_frame(Ring::extension_field(2, 3), 1, 2)});
  frames.push_back({"H(Q) conventional n=1", Frame::conventional(Ring::quaternions(), 1)});
  frames.push_back({"GF(7) conventional n=3", Frame::conventional(Ring::prime_field(7), 3)});
  return frames;
}

// ---------------------------------------------------------------------------
// Random generators

inline Element random_element(const Ring& ring, Rng& rng, int height = 3) {
  if (ring.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> pick(0, ring.order() - 1);
    return ring.from_code(static_cast<std::uint32_t>(pick(rng)));
  }
  std::uniform_int_distribution<int> num(-height, height), den(1, height);
  auto r = [&] { return mpq_class(num(rng), den(rng)); };
  return ring.quaternion(r(), r(), r(), r());
}

inline Element random_nonzero(const Ring& ring, Rng& rng, int height = 3) {
  for (;;) {
    Element e = random_element(ring, rng, height);
    if (!e.is_zero()) return e;
  }
}

inline Point random_point(const Frame& frame, Rng& rng, int height = 3) {
  std::vector<Element> coords;
  for (std::size_t i = 0; i < frame.n(); ++i) coords.push_back(random_element(frame.ring(), rng, height));
  return Point(std::move(coords));
}

inline Monomial random_monomial(std::size_t n, std::size_t degree, Rng& rng) {
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<std::uint16_t> word;
  for (std::size_t k = 0; k < degree; ++k) word.push_back(static_cast<std::uint16_t>(var(rng)));
  return Monomial(std::move(word));
}

/// Random polynomial with up to `terms` terms of degree <= max_degree.
inline SkewPolynomial random_polynomial(const Frame& frame, Rng& rng, std::size_t max_degree, std::size_t terms,
                                        int height = 3) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  SkewPolynomial f(frame.ring());
  for (std::size_t t = 0; t < terms; ++t) {
    f.add_term(random_monomial(frame.n(), deg(rng), rng), random_element(frame.ring(), rng, height));
  }
  return f;
}

inline SkewPolynomial random_nonzero_polynomial(const Frame& frame, Rng& rng, std::size_t max_degree,
                                                std::size_t terms, int height = 3) {
  for (;;) {
    SkewPolynomial f = random_polynomial(frame, rng, max_degree, terms, height);
    if (!f.is_zero()) return f;
  }
}

// ---------------------------------------------------------------------------
// Oracles

/// m * (a n) by the defining recursion
///   (m' x_i)(a n) = sum_j m'(sigma_ij(a) (x_j n)) + m'(delta_i(a) n),
/// peeling letters off the right end of m.
inline void oracle_monomial_times(const Monomial& m, const Element& a, const Monomial& n, const Frame& frame,
                                  SkewPolynomial& out) {
  if (a.is_zero()) return;
  if (m.is_one()) {
    out.add_term(n, a);
    return;
  }
  const std::size_t i = m[m.degree() - 1];
  const Monomial rest = m.drop_last();
  for (std::size_t j = 0; j < frame.n(); ++j) {
    oracle_monomial_times(rest, frame.sigma(i, j)(a), Monomial::variable(j) * n, frame, out);
  }
  oracle_monomial_times(rest, frame.delta(i)(a), n, frame, out);
}

/// FG = sum_m sum_n F_m (m (G_n n)).
inline SkewPolynomial oracle_mul(const SkewPolynomial& f, const SkewPolynomial& g, const Frame& frame) {
  SkewPolynomial out(frame.ring());
  for (const auto& [m, fm] : f.terms()) {
    for (const auto& [n, gn] : g.terms()) {
      SkewPolynomial piece(frame.ring());
      oracle_monomial_times(m, gn, n, frame, piece);
      out += piece.scale_left(fm);
    }
  }
  return out;
}

/// Conventional frames only: F(a) = sum_m F_m a_{i_k} ... a_{i_1} for
/// m = x_{i_1} ... x_{i_k}.
inline Element oracle_plug_in(const SkewPolynomial& f, const Point& a) {
  Element acc = f.ring().zero();
  for (const auto& [m, c] : f.terms()) {
    Element prod = f.ring().one();
    for (std::size_t pos = 0; pos < m.degree(); ++pos) prod = a[m[pos]] * prod;
    acc += c * prod;
  }
  return acc;
}

/// All vectors in the left F-span of `rows`, by closing {0} under adding
/// scalar multiples of each row. Finite fields only.
inline std::set<std::vector<std::uint32_t>> oracle_span(const std::vector<std::vector<Element>>& rows,
                                                        const Ring& ring, std::size_t width) {
  std::set<std::vector<std::uint32_t>> span{std::vector<std::uint32_t>(width, 0)};
  const auto scalars = ring.enumerate();
  for (const auto& row : rows) {
    std::set<std::vector<std::uint32_t>> next;
    for (const auto& v : span) {
      for (const auto& c : scalars) {
        std::vector<std::uint32_t> w(width);
        for (std::size_t k = 0; k < width; ++k) w[k] = (ring.from_code(v[k]) + c * row[k]).code();
        next.insert(std::move(w));
      }
    }
    span = std::move(next);
  }
  return span;
}

/// b lies in the closure of B iff every polynomial of degree <= #B vanishing
/// on B vanishes at b. The achievable value tuples (F(b_1), ..., F(b_M), F(b))
/// over all coefficient vectors form the span of the monomial rows, whose
/// entries are computed by right division.
inline bool oracle_in_closure(const Point& b, const PointSet& basis, const Frame& frame) {
  const Ring& ring = frame.ring();
  std::vector<Point> pts(basis.begin(), basis.end());
  pts.push_back(b);
  std::vector<std::vector<Element>> rows;
  for (const auto& m : monomials_below(frame.n(), basis.size() + 1)) {
    std::vector<Element> row;
    const SkewPolynomial mono = SkewPolynomial::monomial(ring, m);
    for (const auto& p : pts) row.push_back(evaluate_by_division(mono, p, frame));
    rows.push_back(std::move(row));
  }
  for (const auto& v : oracle_span(rows, ring, pts.size())) {
    bool vanishes_on_basis = true;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) vanishes_on_basis = vanishes_on_basis && v[k] == 0;
    if (vanishes_on_basis && v.back() != 0) return false;
  }
  return true;
}

/// Classical Lagrange interpolation over a field, n = 1, returned as the
/// coefficient list c_0..c_{M-1}.
inline std::vector<Element> oracle_classical_lagrange(const std::vector<Element>& xs, const std::vector<Element>& ys) {
  const Ring ring = xs.front().ring();
  std::vector<Element> out(xs.size(), ring.zero());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Element> basis{ring.one()};
    Element denom = ring.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      std::vector<Element> next(basis.size() + 1, ring.zero());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xs[j] * basis[k];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    const Element scale = ys[i] * denom.inverse();
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += scale * basis[k];
  }
  return out;
}

/// All points of F^n for a finite field.
inline std::vector<Point> all_points(const Ring& ring, std::size_t n) {
  std::vector<Point> out{Point()};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> next;
    for (const auto& p : out) {
      for (const auto& e : ring.enumerate()) {
        std::vector<Element> coords = p.coords();
        coords.push_back(e);
        next.emplace_back(std::move(coords));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace skewpoly::testing
