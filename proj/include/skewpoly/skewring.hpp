#pragma once

// Monomials, sparse skew polynomials and the multiplication of the free ring
// F[x; sigma, delta].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skewpoly/algebra.hpp"
#include "skewpoly/frame.hpp"

namespace skewpoly {

/// Degree of a skew polynomial. The zero polynomial has the sentinel degree
/// BOTTOM, which absorbs under addition and refuses numeric access.
class Degree {
 public:
  static Degree bottom() { return Degree(); }
  Degree(std::size_t value) : value_(static_cast<long long>(value)) {}

  bool is_bottom() const { return value_ < 0; }
  std::size_t value() const;

  friend Degree operator+(Degree a, Degree b) {
    if (a.is_bottom() || b.is_bottom()) return bottom();
    return Degree(a.value() + b.value());
  }
  bool operator==(const Degree&) const = default;
  std::string to_text() const { return is_bottom() ? "BOTTOM" : std::to_string(value_); }

 private:
  Degree() = default;
  long long value_ = -1;
};

/// A word in x_1..x_n; letters are stored 0-based.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> word) : word_(std::move(word)) {}
  /// From 1-based variable indices, as written in x1.x2.x1.
  static Monomial from_indices(const std::vector<std::size_t>& one_based);
  static Monomial variable(std::size_t i) { return Monomial({static_cast<std::uint16_t>(i)}); }

  std::size_t degree() const { return word_.size(); }
  bool is_one() const { return word_.empty(); }
  const std::vector<std::uint16_t>& word() const { return word_; }
  std::uint16_t operator[](std::size_t pos) const { return word_[pos]; }

  /// Concatenation mn.
  friend Monomial operator*(const Monomial& m, const Monomial& n);
  /// The word without its first / last letter.
  Monomial drop_first() const { return Monomial({word_.begin() + 1, word_.end()}); }
  Monomial drop_last() const { return Monomial({word_.begin(), word_.end() - 1}); }

  /// Graded order; ties broken lexicographically from the rightmost letter,
  /// x_1 < x_2 < ... < x_n.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.word_ == b.word_; }

  /// "1" or "x1.x2.x1".
  std::string to_text() const;
  static Monomial parse(std::string_view text);

 private:
  std::vector<std::uint16_t> word_;
};

/// All monomials in n variables of degree < d, in increasing monomial order.
std::vector<Monomial> monomials_below(std::size_t n, std::size_t d);

/// A finite left combination sum F_m m with nonzero coefficients.
class SkewPolynomial {
 public:
  using Terms = std::map<Monomial, Element>;

  explicit SkewPolynomial(Ring ring) : ring_(ring) {}
  SkewPolynomial(Ring ring, Terms terms);
  static SkewPolynomial constant(const Element& c);
  static SkewPolynomial monomial(const Ring& ring, const Monomial& m, const Element& c);
  static SkewPolynomial monomial(const Ring& ring, const Monomial& m) { return monomial(ring, m, ring.one()); }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Element coefficient(const Monomial& m) const;

  Degree degree() const;
  /// Highest monomial under the monomial order; throws ZeroPolynomial for 0.
  const Monomial& leading_monomial() const;
  const Element& leading_coefficient() const;
  /// Largest variable index (plus one) occurring in any term.
  std::size_t variables_used() const;

  /// Adds c*m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Element& c);

  SkewPolynomial operator-() const;
  friend SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b);
  friend SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b);
  SkewPolynomial& operator+=(const SkewPolynomial& b);
  SkewPolynomial& operator-=(const SkewPolynomial& b);
  friend bool operator==(const SkewPolynomial& a, const SkewPolynomial& b);

  /// c * F.
  SkewPolynomial scale_left(const Element& c) const;
  /// F * m, appending m to every monomial (coefficients unchanged).
  SkewPolynomial append(const Monomial& m) const;

  /// Terms joined by " + ", each "coeff*x1.x2"; unit coefficients are
  /// omitted and composite coefficients parenthesised. Zero is "0".
  std::string to_text() const;
  static SkewPolynomial parse(const Ring& ring, std::string_view text);

 private:
  Ring ring_;
  Terms terms_;
};

SkewPolynomial scale_left(const Element& c, const SkewPolynomial& f);

/// x_i * P, by x_i c = sum_j sigma_ij(c) x_j + delta_i(c).
SkewPolynomial left_mul_variable(std::size_t i, const SkewPolynomial& p, const Frame& frame);
/// m * a expanded as a polynomial of degree <= deg(m).
SkewPolynomial mul_monomial_constant(const Monomial& m, const Element& a, const Frame& frame);
/// The product of the free ring F[x; sigma, delta].
SkewPolynomial mul(const SkewPolynomial& f, const SkewPolynomial& g, const Frame& frame);

}  // namespace skewpoly
