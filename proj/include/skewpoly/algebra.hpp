#pragma once

// Exact arithmetic over the supported division rings: prime fields GF(p),
// extension fields GF(p^k) with p^k <= 2^16, and the rational quaternions.
//
// A Ring is a cheap handle to an interned, immutable context. Two handles
// compare equal exactly when they describe the same ring, so elements can be
// checked for compatibility with a pointer comparison.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewpoly/error.hpp"

namespace skewpoly {

enum class RingKind { PrimeField, ExtensionField, RationalQuaternion };

std::string_view ring_kind_name(RingKind kind);
RingKind parse_ring_kind(std::string_view name);

struct RingSpec {
  RingKind kind = RingKind::PrimeField;
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  // Monic modulus, ascending coefficients c_0..c_k. Empty means "use the
  // library default" for extension fields and is ignored otherwise.
  std::vector<std::uint32_t> modulus;

  bool operator==(const RingSpec&) const = default;
};

/// Largest field order the finite-field tables support.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {
struct RingData;
}

class Element;

class Ring {
 public:
  /// Builds (or fetches the interned copy of) the ring described by `spec`.
  /// Extension fields without a modulus get the default one, which is the
  /// least primitive monic polynomial of degree k (coefficients compared from
  /// c_0 upwards with c_0 least significant).
  static Ring make(const RingSpec& spec);
  static Ring prime_field(std::uint32_t p);
  static Ring extension_field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus = {});
  static Ring quaternions();

  const RingSpec& spec() const;
  RingKind kind() const;
  bool is_finite() const { return kind() != RingKind::RationalQuaternion; }
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;  // k
  std::uint64_t order() const;   // p^k; throws NotFinite for quaternions

  Element zero() const;
  Element one() const;
  /// Integer image n * 1.
  Element from_int(long long n) const;
  /// Finite fields only: element with the given power-basis coefficients.
  Element from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  /// Finite fields only: element whose packed code is sum c_i p^i.
  Element from_code(std::uint32_t code) const;
  /// Quaternions only.
  Element quaternion(mpq_class w, mpq_class x, mpq_class y, mpq_class z) const;

  /// All p^k elements, lexicographic on coefficient vectors with the highest
  /// power most significant. Throws NotFinite for the quaternions.
  std::vector<Element> enumerate() const;

  /// Parses the text rendering produced by Element::to_text.
  Element parse_element(std::string_view text) const;

  std::string description() const;

  bool operator==(const Ring& other) const { return data_ == other.data_; }

  const detail::RingData* data() const { return data_; }

 private:
  explicit Ring(const detail::RingData* data) : data_(data) {}
  const detail::RingData* data_ = nullptr;
  friend class Element;
};

struct Quaternion {
  mpq_class w, x, y, z;

  bool operator==(const Quaternion& o) const { return w == o.w && x == o.x && y == o.y && z == o.z; }
};

class Element {
 public:
  /// Default-constructed elements are the zero of GF(2); prefer Ring::zero().
  Element();

  Ring ring() const { return Ring(ring_); }
  bool is_zero() const;
  bool is_one() const;

  /// Packed power-basis code (finite fields).
  std::uint32_t code() const;
  /// Power-basis coefficients, length k (finite fields).
  std::vector<std::uint32_t> coefficients() const;
  /// Components (quaternions).
  const Quaternion& quaternion() const;

  Element inverse() const;
  Element operator-() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  /// Structural equality; elements of different rings are never equal.
  friend bool operator==(const Element& a, const Element& b);

  /// Text form: residues for GF(p), polynomials in t for GF(p^k),
  /// "w+xi+yj+zk" with reduced fractions for quaternions.
  std::string to_text() const;

  std::size_t hash() const;

 private:
  Element(const detail::RingData* ring, std::uint32_t code) : ring_(ring), value_(code) {}
  Element(const detail::RingData* ring, Quaternion q) : ring_(ring), value_(std::move(q)) {}

  const detail::RingData* ring_;
  std::variant<std::uint32_t, Quaternion> value_;

  friend class Ring;
};

Element inv(const Element& a);

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

/// Irreducibility test over GF(p) by trial division with every monic
/// polynomial of degree <= deg/2. `poly` is ascending and monic.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);
bool is_prime(std::uint32_t n);

}  // namespace skewpoly
