#pragma once

// Point sets, skew Vandermonde matrices, P-closure, P-independence, P-bases
// and the matroid they form.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "skewpoly/evaluation.hpp"
#include "skewpoly/frame.hpp"
#include "skewpoly/linalg.hpp"
#include "skewpoly/point.hpp"
#include "skewpoly/skewring.hpp"

namespace skewpoly {

/// Ordered, duplicate-free points of a common dimension.
class PointSet {
 public:
  PointSet() = default;
  /// Throws DuplicatePoint on repeated points and InvalidInput on mixed
  /// dimensions.
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

  void push_back(const Point& p);
  bool contains(const Point& p) const { return index_.count(p) > 0; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Same points regardless of order.
  bool same_set(const PointSet& other) const;
  bool operator==(const PointSet& other) const { return points_ == other.points_; }

 private:
  std::vector<Point> points_;
  std::unordered_set<Point, PointHash> index_;
};

/// Guard for matrix assembly: Vandermonde sizes beyond this many entries are
/// rejected with InvalidInput.
inline constexpr std::size_t kMaxVandermondeEntries = std::size_t{1} << 26;

/// Number of monomials of degree < d in n variables.
std::size_t monomial_count(std::size_t n, std::size_t d);

/// Rows are the monomials of degree < d in monomial order, columns the points,
/// entry N_m(b_j).
DRMatrix vandermonde(const PointSet& points, std::size_t d, const Frame& frame);
/// The column (N_m(b))_m for monomials of degree < d.
RowVector vandermonde_column(const Point& b, std::size_t d, const Frame& frame);

/// b is P-independent from B (B assumed P-independent). Throws DuplicatePoint
/// if b is in B.
bool is_p_independent_from(const Point& b, const PointSet& basis, const Frame& frame);
/// b lies in the P-closure of the P-independent set B (true for b in B).
bool in_closure(const Point& b, const PointSet& basis, const Frame& frame);

/// Membership in the closure of a fixed P-independent set. A point b is in
/// the closure exactly when every F of degree <= #B vanishing on B vanishes
/// at b, that is when b's column of V(B, #B + 1) lies in the right column
/// span of the columns of B. The span is reduced once.
class ClosureTester {
 public:
  ClosureTester(const PointSet& basis, const Frame& frame);
  bool contains(const Point& b) const;
  std::size_t degree_bound() const { return rows_; }

 private:
  const Frame& frame_;
  std::size_t rows_;
  ColumnSpace span_;
};

struct PBasisResult {
  PointSet basis;
  std::size_t rank = 0;
  DRMatrix vandermonde;  // V(basis, #basis), the certificate
  PointSet discarded;
};

/// Greedy scan of G in input order keeping points P-independent from the kept
/// ones.
PBasisResult find_p_basis(const PointSet& g, const Frame& frame);

/// Z(I(G)) by enumerating F^n; finite fields only.
PointSet closure_members(const PointSet& g, const Frame& frame);

/// rank(V(G, #G)).
std::size_t rank_of(const PointSet& g, const Frame& frame);

/// Every conjugate a^c (a in G, c != 0) lies in the closure of G.
bool is_two_sided(const PointSet& g, const Frame& frame);

struct MatroidReport {
  std::size_t subsets_checked = 0;
  std::size_t independent_sets = 0;
  std::size_t rank = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline constexpr std::size_t kMatroidMaxPoints = 10;

/// Hereditary, exchange and equicardinal-bases axioms over all subsets of G
/// (#G <= 10).
MatroidReport matroid_check(const PointSet& g, const Frame& frame);
/// Set-level P-independence: every point independent from the others.
bool is_p_independent_set(const PointSet& s, const Frame& frame);

struct ComplementResult {
  PointSet complement;   // C
  std::size_t rank_ambient = 0;
  std::size_t rank_base = 0;        // #B
  std::size_t rank_complement = 0;  // #C
};

/// C in the ambient set with B and C disjoint and B u C a P-basis of the
/// ambient closure. Throws InvalidInput when B is dependent or escapes the
/// ambient closure.
ComplementResult complementary_p_basis(const PointSet& b, const PointSet& ambient, const Frame& frame);

}  // namespace skewpoly
