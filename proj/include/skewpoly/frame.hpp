#pragma once

// Matrix morphisms sigma: F -> F^{n x n} and sigma-vector derivations
// delta: F -> F^n. Together they fix the commutation rule
//
//     x_i a = sum_j sigma_ij(a) x_j + delta_i(a)
//
// of the free skew polynomial ring F[x; sigma, delta].

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewpoly/algebra.hpp"
#include "skewpoly/point.hpp"

namespace skewpoly {

/// An additive self-map of F.
///
/// Over GF(p^k) every additive map is GF(p)-linear, so it is stored as a k x k
/// matrix over GF(p) acting on power-basis coefficient columns, together with
/// its full lookup table. Over the quaternions maps are expression trees over
/// a fixed catalog: left/right multiplication by a constant, conjugation, sums
/// and compositions.
class AdditiveMap {
 public:
  enum class Op { Matrix, LeftMul, RightMul, Conjugation, Sum, Compose };

  static AdditiveMap zero(const Ring& ring);
  static AdditiveMap identity(const Ring& ring);
  static AdditiveMap left_mul(const Element& c);
  static AdditiveMap right_mul(const Element& c);
  /// Quaternion conjugation w + xi + yj + zk -> w - xi - yj - zk.
  static AdditiveMap conjugation(const Ring& ring);
  /// a -> a^(p^power); finite fields only.
  static AdditiveMap frobenius(const Ring& ring, unsigned power = 1);
  static AdditiveMap sum(std::vector<AdditiveMap> terms);
  /// compose({f, g, h})(a) = f(g(h(a))).
  static AdditiveMap compose(std::vector<AdditiveMap> maps);
  /// Finite fields: rows[r][c] is the coefficient of t^r in the image of t^c.
  static AdditiveMap from_matrix(const Ring& ring, const std::vector<std::vector<std::uint32_t>>& rows);
  /// Finite fields: tabulates `fn` and checks it is additive; throws
  /// InvalidFrame naming a pair (a, b) with fn(a + b) != fn(a) + fn(b).
  static AdditiveMap from_function(const Ring& ring, const std::function<Element(const Element&)>& fn);

  Element operator()(const Element& a) const;

  const Ring& ring() const;
  Op op() const;
  bool is_zero() const;

  /// Matrix over GF(p) (finite fields only).
  const std::vector<std::vector<std::uint32_t>>& matrix() const;
  /// Catalog constant (LeftMul / RightMul).
  const Element& constant() const;
  /// Catalog operands (Sum / Compose).
  const std::vector<AdditiveMap>& operands() const;

 private:
  struct Impl;
  explicit AdditiveMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static AdditiveMap from_table(const Ring& ring, std::vector<std::uint32_t> table);
  std::shared_ptr<const Impl> impl_;
};

class Frame {
 public:
  /// sigma = Id (a -> aI), delta = 0.
  static Frame conventional(const Ring& ring, std::size_t n);
  /// Assembles a frame without checking the morphism/derivation laws.
  static Frame unchecked(const Ring& ring, std::size_t n, std::vector<AdditiveMap> sigma,
                         std::vector<AdditiveMap> delta);
  /// Checked construction; throws InvalidFrame with the first violation.
  static Frame make(const Ring& ring, std::size_t n, std::vector<AdditiveMap> sigma, std::vector<AdditiveMap> delta);

  const Ring& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  const AdditiveMap& sigma(std::size_t i, std::size_t j) const { return sigma_[i * n_ + j]; }
  const AdditiveMap& delta(std::size_t i) const { return delta_[i]; }
  bool sigma_is_zero(std::size_t i, std::size_t j) const { return sigma_zero_[i * n_ + j]; }
  bool delta_is_zero(std::size_t i) const { return delta_zero_[i]; }
  bool is_conventional() const;

  /// sigma(a) as a row-major n x n array.
  std::vector<Element> apply_sigma(const Element& a) const;
  Point apply_delta(const Element& a) const;

 private:
  Frame(Ring ring, std::size_t n, std::vector<AdditiveMap> sigma, std::vector<AdditiveMap> delta);

  Ring ring_;
  std::size_t n_;
  std::vector<AdditiveMap> sigma_;
  std::vector<AdditiveMap> delta_;
  std::vector<bool> sigma_zero_;
  std::vector<bool> delta_zero_;
};

struct Violation {
  std::string identity;  // e.g. "sigma(ab) = sigma(a)sigma(b) at (1,2)"
  std::string reason;    // e.g. "unit not preserved"
  std::optional<Element> a;
  std::optional<Element> b;
  std::size_t occurrences = 1;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t pairs_checked = 0;
  bool exhaustive = false;

  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240531;

/// Checks sigma(1) = I, sigma(ab) = sigma(a)sigma(b) and
/// delta(ab) = sigma(a)delta(b) + delta(a)b. Finite fields: all pairs of
/// power-basis elements (which suffices by GF(p)-bilinearity) and, for
/// |F| <= 256, every pair. Quaternions: the generators {1, i, j, k, 1/2, 1+i}
/// pairwise plus 256 seeded random rational pairs.
ValidationReport validate_frame(const Frame& frame, std::uint64_t seed = kDefaultSeed);

/// sigma = diag(endos), delta = ders; validated.
Frame make_diagonal_frame(const Ring& ring, const std::vector<AdditiveMap>& endos,
                          const std::vector<AdditiveMap>& ders);
Frame make_diagonal_frame_from_functions(const Ring& ring,
                                         const std::vector<std::function<Element(const Element&)>>& endos,
                                         const std::vector<std::function<Element(const Element&)>>& ders);

/// delta(a) = sigma(a) beta - beta a for the given (validated) sigma. The
/// result is a sigma-vector derivation by construction and is not re-checked.
Frame make_inner_frame(const Ring& ring, std::size_t n, const std::vector<AdditiveMap>& sigma, const Point& beta);

/// sigma = diag(tau, nu), delta = (delta_tau, delta_nu).
Frame block_diagonal(const Frame& upper, const Frame& lower);

}  // namespace skewpoly
