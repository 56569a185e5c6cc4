#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewpoly/linalg.hpp"
#include "support.hpp"

using namespace skewpoly;
using namespace skewpoly::testing;

namespace {

DRMatrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, Rng& rng, int zero_bias = 0) {
  DRMatrix m(ring, rows, cols);
  std::uniform_int_distribution<int> coin(0, 3);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) >= zero_bias) m(r, c) = random_element(ring, rng);
    }
  }
  return m;
}

bool is_zero_row(const RowVector& v) {
  for (const auto& e : v) {
    if (!e.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity and zero matrices") {
  const Ring r = Ring::prime_field(5);
  const auto red = row_reduce_left(DRMatrix::identity(r, 3));
  CHECK(red.reduced == DRMatrix::identity(r, 3));
  CHECK(red.transform == DRMatrix::identity(r, 3));
  CHECK(red.pivots.size() == 3);
  CHECK(left_null_space(DRMatrix::identity(r, 3)).empty());
  const auto z = row_reduce_left(DRMatrix(r, 2, 3));
  CHECK(z.pivots.empty());
  CHECK(rank(DRMatrix(r, 2, 3)) == 0);
}

TEST_CASE("quaternion 2x2 [[i, 1], [j, 0]] has rank 2") {
  const Ring h = Ring::quaternions();
  const Element i = h.quaternion(0, 1, 0, 0), j = h.quaternion(0, 0, 1, 0);
  const DRMatrix a = DRMatrix::from_rows(h, {{i, h.one()}, {j, h.zero()}});
  CHECK(rank(a) == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    RowVector e(2, h.zero());
    e[k] = h.one();
    CHECK(left_multiply(solve_left(a, e), a) == e);
  }
}

TEST_CASE("GF(2) [[1, 1], [1, 1], [0, 1]] has rank 2 and span of size 4") {
  const Ring r = Ring::prime_field(2);
  const DRMatrix a = DRMatrix::from_rows(r, {{r.one(), r.one()}, {r.one(), r.one()}, {r.zero(), r.one()}});
  CHECK(rank(a) == 2);
  CHECK(oracle_span({a.row(0), a.row(1), a.row(2)}, r, 2).size() == 4);
  const auto null = left_null_space(a);
  REQUIRE(null.size() == 1);
  CHECK(null[0] == RowVector{r.one(), r.one(), r.zero()});
}

TEST_CASE("GF(4) Vandermonde-shaped 3x2 null space, checked against all of GF(4)^3") {
  const Ring f4 = Ring::extension_field(2, 2);
  const Element w = omega(f4);
  const DRMatrix a = DRMatrix::from_rows(f4, {{f4.one(), f4.one()}, {w, w * w}, {w * w, w}});
  const auto null = left_null_space(a);
  REQUIRE(null.size() == 1);
  CHECK(is_zero_row(left_multiply(null[0], a)));
  std::size_t solutions = 0;
  for (const auto& x : f4.enumerate()) {
    for (const auto& y : f4.enumerate()) {
      for (const auto& z : f4.enumerate()) {
        if (is_zero_row(left_multiply({x, y, z}, a))) ++solutions;
      }
    }
  }
  CHECK(solutions == 4);
}

TEST_CASE("quaternion 2x1 left system") {
  const Ring h = Ring::quaternions();
  const Element i = h.quaternion(0, 1, 0, 0), j = h.quaternion(0, 0, 1, 0), k = h.quaternion(0, 0, 0, 1);
  const DRMatrix a = DRMatrix::from_rows(h, {{i}, {j}});
  const RowVector lambda = solve_left(a, {k});
  CHECK(lambda == RowVector{-j, h.zero()});
  CHECK(left_multiply(lambda, a) == RowVector{k});
}

TEST_CASE("solve_left basics and inconsistency") {
  const Ring r = Ring::prime_field(7);
  const RowVector b{r.from_int(3), r.from_int(5), r.from_int(6)};
  CHECK(solve_left(DRMatrix::identity(r, 3), b) == b);
  CHECK(solve_left(DRMatrix::identity(r, 3), RowVector(3, r.zero())) == RowVector(3, r.zero()));
  const DRMatrix a = DRMatrix::from_rows(r, {{r.one(), r.zero()}, {r.from_int(2), r.zero()}});
  try {
    solve_left(a, {r.zero(), r.one()});
    FAIL("expected NoSolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSolution);
  }
}

TEST_CASE("T A = R, null vectors, solutions on random matrices") {
  Rng rng(31);
  for (const Ring& ring : {Ring::prime_field(2), Ring::extension_field(3, 2), Ring::quaternions()}) {
    INFO(ring.description());
    for (int t = 0; t < 40; ++t) {
      const std::size_t rows = 1 + t % 5, cols = 1 + (t / 5) % 4;
      const DRMatrix a = random_matrix(ring, rows, cols, rng, t % 3);
      const auto red = row_reduce_left(a);
      CHECK(red.transform * a == red.reduced);
      CHECK(rank(DRMatrix::from_rows(ring, {})) == 0);
      const auto null = left_null_space(a);
      CHECK(null.size() == rows - red.pivots.size());
      for (const auto& v : null) CHECK(is_zero_row(left_multiply(v, a)));
      if (!null.empty()) CHECK(rank(DRMatrix::from_rows(ring, null)) == null.size());
      // Any combination of rows is solvable and substitutes exactly.
      RowVector lambda;
      for (std::size_t r = 0; r < rows; ++r) lambda.push_back(random_element(ring, rng));
      const RowVector b = left_multiply(lambda, a);
      const RowVector sol = solve_left(a, b);
      CHECK(left_multiply(sol, a) == b);
      std::vector<RowVector> support;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!sol[r].is_zero()) support.push_back(a.row(r));
      }
      // The solution only uses rows that are independent of each other.
      CHECK(support.size() <= red.pivots.size());
      if (!support.empty()) CHECK(rank(DRMatrix::from_rows(ring, support)) == support.size());
    }
  }
}

TEST_CASE("incremental row and column spaces") {
  Rng rng(32);
  for (const Ring& ring : {Ring::extension_field(2, 2), Ring::quaternions()}) {
    for (int t = 0; t < 30; ++t) {
      const DRMatrix a = random_matrix(ring, 2 + t % 4, 1 + t % 3, rng, t % 3);
      RowSpace rows(ring, a.cols());
      for (std::size_t r = 0; r < a.rows(); ++r) rows.add(a.row(r));
      ColumnSpace cols(ring);
      for (std::size_t c = 0; c < a.cols(); ++c) cols.add(a.column(c));
      CHECK(rows.rank() == row_reduce_left(a).pivots.size());
      CHECK(cols.rank() == rows.rank());
      // Right combinations of the columns stay in the column span.
      std::vector<Element> combo(a.rows(), ring.zero());
      for (std::size_t c = 0; c < a.cols(); ++c) {
        const Element mu = random_element(ring, rng);
        for (std::size_t r = 0; r < a.rows(); ++r) combo[r] += a(r, c) * mu;
      }
      CHECK(cols.contains(combo));
      // Left combinations of the rows are expressed exactly.
      RowVector lambda;
      for (std::size_t r = 0; r < a.rows(); ++r) lambda.push_back(random_element(ring, rng));
      const auto mu = rows.express(left_multiply(lambda, a));
      REQUIRE(mu.has_value());
      RowVector back(a.cols(), ring.zero());
      for (std::size_t k = 0; k < mu->size(); ++k) {
        for (std::size_t c = 0; c < a.cols(); ++c) back[c] += (*mu)[k] * a(rows.accepted()[k], c);
      }
      CHECK(back == left_multiply(lambda, a));
    }
  }
  // (i, -1) = (1, i) i lies in the right span of (1, i); (i, 1) does not.
  const Ring h = Ring::quaternions();
  const Element i = h.quaternion(0, 1, 0, 0);
  ColumnSpace cs(h);
  CHECK(cs.add({h.one(), i}));
  CHECK(cs.contains({i, -h.one()}));
  CHECK_FALSE(cs.contains({i, h.one()}));
}

TEST_CASE("row rank equals column rank on all small GF(2) matrices") {
  const Ring r = Ring::prime_field(2);
  for (std::size_t rows = 1; rows <= 3; ++rows) {
    for (std::size_t cols = 1; cols <= 3; ++cols) {
      for (std::uint32_t bits = 0; bits < (1u << (rows * cols)); ++bits) {
        DRMatrix a(r, rows, cols), at(r, cols, rows);
        for (std::size_t k = 0; k < rows * cols; ++k) {
          const Element e = r.from_code(bits >> k & 1u);
          a(k / cols, k % cols) = e;
          at(k % cols, k / cols) = e;
        }
        std::vector<RowVector> rs, cs;
        for (std::size_t i = 0; i < rows; ++i) rs.push_back(a.row(i));
        for (std::size_t i = 0; i < cols; ++i) cs.push_back(at.row(i));
        const std::size_t row_span = oracle_span(rs, r, cols).size();
        const std::size_t col_span = oracle_span(cs, r, rows).size();
        CHECK(row_span == col_span);
        CHECK(row_span == (std::size_t{1} << rank(a)));
        CHECK(rank(a) == rank(at));
      }
    }
  }
}
