#include "skewpoly/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace skewpoly {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::NotPIndependent: return "NotPIndependent";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotARing: return "NotARing";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

std::string_view ring_kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::PrimeField: return "prime-field";
    case RingKind::ExtensionField: return "extension-field";
    case RingKind::RationalQuaternion: return "rational-quaternion";
  }
  return "unknown";
}

RingKind parse_ring_kind(std::string_view name) {
  if (name == "prime-field") return RingKind::PrimeField;
  if (name == "extension-field") return RingKind::ExtensionField;
  if (name == "rational-quaternion") return RingKind::RationalQuaternion;
  throw Error(ErrorCode::MalformedInput, "unknown ring kind '" + std::string(name) + "'");
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t deg = poly.size() - 1;
  if (deg == 1) return true;
  // Every monic divisor candidate of degree d, coefficients enumerated as a
  // base-p counter.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_mod(poly, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

namespace detail {

struct RingData {
  RingSpec spec;
  Poly modulus;  // reduction polynomial; x for prime fields
  std::uint32_t q = 0;
  std::vector<std::uint32_t> pow_p;
  std::vector<std::uint32_t> exp_table;  // length 2(q-1)
  std::vector<std::uint32_t> log_table;  // length q; log_table[0] unused

  bool finite() const { return spec.kind != RingKind::RationalQuaternion; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec.p;
    if (spec.k == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      out += ((a % p + b % p) % p) * pow_p[i];
      a /= p;
      b /= p;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    const std::uint32_t p = spec.p;
    if (p == 2) return a;
    if (spec.k == 1) return (p - a) % p;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      out += ((p - a % p) % p) * pow_p[i];
      a /= p;
    }
    return out;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table[log_table[a] + log_table[b]];
  }

  std::uint32_t inv(std::uint32_t a) const { return exp_table[(q - 1 - log_table[a]) % (q - 1)]; }

  Poly digits(std::uint32_t code) const {
    Poly out(spec.k, 0);
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      out[i] = code % spec.p;
      code /= spec.p;
    }
    return out;
  }

  std::uint32_t pack(const Poly& d) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < d.size() && i < spec.k; ++i) out += d[i] * pow_p[i];
    return out;
  }

  // Schoolbook multiply-and-reduce; only used while building the tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const Poly da = digits(a), db = digits(b);
    Poly prod(2 * spec.k, 0);
    for (std::size_t i = 0; i < da.size(); ++i) {
      for (std::size_t j = 0; j < db.size(); ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % spec.p);
      }
    }
    return pack(poly_mod(prod, modulus, spec.p));
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = pack(Poly{1});
    while (e > 0) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  }

  bool is_generator(std::uint32_t g, const std::vector<std::uint32_t>& factors) const {
    if (g == 0) return false;
    const std::uint32_t one = pack(Poly{1});
    return std::none_of(factors.begin(), factors.end(),
                        [&](std::uint32_t r) { return slow_pow(g, (q - 1) / r) == one; });
  }
};

}  // namespace detail

namespace {

using detail::RingData;

std::unique_ptr<RingData> build_finite(RingSpec spec) {
  if (!is_prime(spec.p)) throw Error(ErrorCode::InvalidInput, "p = " + std::to_string(spec.p) + " is not prime");
  if (spec.k < 1) throw Error(ErrorCode::InvalidInput, "extension degree must be >= 1");
  if (spec.kind == RingKind::PrimeField && spec.k != 1) {
    throw Error(ErrorCode::InvalidInput, "prime fields have k = 1");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    q *= spec.p;
    if (q > kMaxFieldOrder) throw Error(ErrorCode::InvalidInput, "field order exceeds 2^16");
  }

  auto data = std::make_unique<RingData>();
  data->q = static_cast<std::uint32_t>(q);
  data->pow_p.resize(spec.k + 1);
  data->pow_p[0] = 1;
  for (std::uint32_t i = 1; i <= spec.k; ++i) data->pow_p[i] = data->pow_p[i - 1] * spec.p;
  const auto factors = prime_factors(data->q - 1);

  if (spec.kind == RingKind::PrimeField) {
    spec.modulus.clear();
    data->spec = spec;
    data->modulus = {0, 1};
  } else if (!spec.modulus.empty()) {
    if (spec.modulus.size() != spec.k + 1) throw Error(ErrorCode::InvalidInput, "modulus must have k + 1 coefficients");
    for (auto c : spec.modulus) {
      if (c >= spec.p) throw Error(ErrorCode::InvalidInput, "modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible_mod_p(spec.modulus, spec.p)) {
      throw Error(ErrorCode::InvalidInput, "modulus is not monic irreducible over GF(" + std::to_string(spec.p) + ")");
    }
    data->spec = spec;
    data->modulus = spec.modulus;
  } else {
    // Least primitive monic polynomial of degree k.
    data->spec = spec;
    bool found = false;
    for (std::uint32_t code = 0; code < data->q && !found; ++code) {
      Poly m(spec.k + 1, 0);
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < spec.k; ++i) {
        m[i] = c % spec.p;
        c /= spec.p;
      }
      m[spec.k] = 1;
      if (!is_irreducible_mod_p(m, spec.p)) continue;
      data->spec.modulus = m;
      data->modulus = m;
      const std::uint32_t t = spec.k == 1 ? data->pack(poly_mod(Poly{0, 1}, m, spec.p)) : spec.p;
      if (data->is_generator(t, factors)) found = true;
    }
    if (!found) throw Error(ErrorCode::InvalidInput, "no primitive modulus found");
  }

  std::uint32_t generator = 0;
  for (std::uint32_t g = 1; g < data->q; ++g) {
    if (data->is_generator(g, factors)) {
      generator = g;
      break;
    }
  }
  if (data->q == 2) generator = 1;
  data->exp_table.resize(2 * static_cast<std::size_t>(data->q - 1));
  data->log_table.assign(data->q, 0);
  std::uint32_t power = data->pack(Poly{1});
  for (std::uint32_t e = 0; e < data->q - 1; ++e) {
    data->exp_table[e] = power;
    data->exp_table[e + data->q - 1] = power;
    data->log_table[power] = e;
    power = data->slow_mul(power, generator);
  }
  return data;
}

struct Registry {
  std::mutex mutex;
  std::vector<std::unique_ptr<RingData>> rings;
  std::map<std::pair<std::uint32_t, std::uint32_t>, const RingData*> defaults;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Ring Ring::make(const RingSpec& spec) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  RingSpec key = spec;
  if (key.kind == RingKind::RationalQuaternion) key = RingSpec{RingKind::RationalQuaternion, 0, 4, {}};
  if (key.kind == RingKind::PrimeField) key.modulus.clear();
  const bool wants_default = key.kind == RingKind::ExtensionField && key.modulus.empty();
  for (const auto& r : reg.rings) {
    if (r->spec == key) return Ring(r.get());
  }
  if (wants_default) {
    auto it = reg.defaults.find({key.p, key.k});
    if (it != reg.defaults.end()) return Ring(it->second);
  }
  std::unique_ptr<RingData> data;
  if (key.kind == RingKind::RationalQuaternion) {
    data = std::make_unique<RingData>();
    data->spec = key;
  } else {
    data = build_finite(key);
  }
  const RingData* result = nullptr;
  for (const auto& r : reg.rings) {
    if (r->spec == data->spec) result = r.get();
  }
  if (result == nullptr) {
    reg.rings.push_back(std::move(data));
    result = reg.rings.back().get();
  }
  if (wants_default) reg.defaults[{key.p, key.k}] = result;
  return Ring(result);
}

Ring Ring::prime_field(std::uint32_t p) { return make(RingSpec{RingKind::PrimeField, p, 1, {}}); }

Ring Ring::extension_field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  return make(RingSpec{RingKind::ExtensionField, p, k, std::move(modulus)});
}

Ring Ring::quaternions() { return make(RingSpec{RingKind::RationalQuaternion, 0, 4, {}}); }

const RingSpec& Ring::spec() const { return data_->spec; }
RingKind Ring::kind() const { return data_->spec.kind; }
std::uint32_t Ring::characteristic() const { return data_->finite() ? data_->spec.p : 0; }
std::uint32_t Ring::degree() const { return data_->spec.k; }

std::uint64_t Ring::order() const {
  if (!data_->finite()) throw Error(ErrorCode::NotFinite, "the rational quaternions are infinite");
  return data_->q;
}

Element Ring::zero() const {
  if (data_->finite()) return Element(data_, 0u);
  return Element(data_, Quaternion{});
}

Element Ring::one() const {
  if (data_->finite()) return Element(data_, 1u);
  return Element(data_, Quaternion{1, 0, 0, 0});
}

Element Ring::from_int(long long n) const {
  if (data_->finite()) {
    const long long p = data_->spec.p;
    return Element(data_, static_cast<std::uint32_t>(((n % p) + p) % p));
  }
  return Element(data_, Quaternion{mpq_class(mpz_class(std::to_string(n))), 0, 0, 0});
}

Element Ring::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (!data_->finite()) throw Error(ErrorCode::NotFinite, "coefficient vectors describe finite-field elements");
  if (coeffs.size() != data_->spec.k) {
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(data_->spec.k) + " coefficients");
  }
  Poly d(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % data_->spec.p;
  return Element(data_, data_->pack(d));
}

Element Ring::from_code(std::uint32_t code) const {
  if (!data_->finite()) throw Error(ErrorCode::NotFinite, "codes describe finite-field elements");
  if (code >= data_->q) throw Error(ErrorCode::InvalidInput, "element code out of range");
  return Element(data_, code);
}

Element Ring::quaternion(mpq_class w, mpq_class x, mpq_class y, mpq_class z) const {
  if (data_->finite()) throw Error(ErrorCode::RingMismatch, "quaternion components given for a finite field");
  for (auto* c : {&w, &x, &y, &z}) c->canonicalize();
  return Element(data_, Quaternion{std::move(w), std::move(x), std::move(y), std::move(z)});
}

std::vector<Element> Ring::enumerate() const {
  if (!data_->finite()) throw Error(ErrorCode::NotFinite, "cannot enumerate the rational quaternions");
  std::vector<Element> out;
  out.reserve(data_->q);
  for (std::uint32_t c = 0; c < data_->q; ++c) out.push_back(Element(data_, c));
  return out;
}

std::string Ring::description() const {
  const auto& s = data_->spec;
  switch (s.kind) {
    case RingKind::PrimeField: return "GF(" + std::to_string(s.p) + ")";
    case RingKind::ExtensionField: return "GF(" + std::to_string(s.p) + "^" + std::to_string(s.k) + ")";
    case RingKind::RationalQuaternion: return "H(Q)";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Element

Element::Element() : ring_(nullptr), value_(0u) {
  static const Ring gf2 = Ring::prime_field(2);
  ring_ = gf2.data_;
}

namespace {

const RingData* common_ring(const Element& a, const Element& b, const RingData* ra, const RingData* rb) {
  if (ra != rb) {
    throw Error(ErrorCode::RingMismatch,
                "operands from " + a.ring().description() + " and " + b.ring().description());
  }
  return ra;
}

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return Quaternion{a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                    a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

}  // namespace

bool Element::is_zero() const {
  if (ring_->finite()) return std::get<std::uint32_t>(value_) == 0;
  const auto& q = std::get<Quaternion>(value_);
  return sgn(q.w) == 0 && sgn(q.x) == 0 && sgn(q.y) == 0 && sgn(q.z) == 0;
}

bool Element::is_one() const {
  if (ring_->finite()) return std::get<std::uint32_t>(value_) == 1;
  const auto& q = std::get<Quaternion>(value_);
  return q.w == 1 && sgn(q.x) == 0 && sgn(q.y) == 0 && sgn(q.z) == 0;
}

std::uint32_t Element::code() const {
  if (!ring_->finite()) throw Error(ErrorCode::NotFinite, "quaternions have no packed code");
  return std::get<std::uint32_t>(value_);
}

std::vector<std::uint32_t> Element::coefficients() const { return ring_->digits(code()); }

const Quaternion& Element::quaternion() const {
  if (ring_->finite()) throw Error(ErrorCode::RingMismatch, "not a quaternion");
  return std::get<Quaternion>(value_);
}

Element Element::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (ring_->finite()) return Element(ring_, ring_->inv(std::get<std::uint32_t>(value_)));
  const auto& q = std::get<Quaternion>(value_);
  const mpq_class norm = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  return Element(ring_, Quaternion{q.w / norm, -q.x / norm, -q.y / norm, -q.z / norm});
}

Element inv(const Element& a) { return a.inverse(); }

Element Element::operator-() const {
  if (ring_->finite()) return Element(ring_, ring_->neg(std::get<std::uint32_t>(value_)));
  const auto& q = std::get<Quaternion>(value_);
  return Element(ring_, Quaternion{-q.w, -q.x, -q.y, -q.z});
}

Element operator+(const Element& a, const Element& b) {
  const RingData* r = common_ring(a, b, a.ring_, b.ring_);
  if (r->finite()) return Element(r, r->add(std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_)));
  const auto& x = std::get<Quaternion>(a.value_);
  const auto& y = std::get<Quaternion>(b.value_);
  return Element(r, Quaternion{x.w + y.w, x.x + y.x, x.y + y.y, x.z + y.z});
}

Element operator-(const Element& a, const Element& b) {
  const RingData* r = common_ring(a, b, a.ring_, b.ring_);
  if (r->finite()) {
    return Element(r, r->add(std::get<std::uint32_t>(a.value_), r->neg(std::get<std::uint32_t>(b.value_))));
  }
  const auto& x = std::get<Quaternion>(a.value_);
  const auto& y = std::get<Quaternion>(b.value_);
  return Element(r, Quaternion{x.w - y.w, x.x - y.x, x.y - y.y, x.z - y.z});
}

Element operator*(const Element& a, const Element& b) {
  const RingData* r = common_ring(a, b, a.ring_, b.ring_);
  if (r->finite()) return Element(r, r->mul(std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_)));
  return Element(r, qmul(std::get<Quaternion>(a.value_), std::get<Quaternion>(b.value_)));
}

bool operator==(const Element& a, const Element& b) { return a.ring_ == b.ring_ && a.value_ == b.value_; }

namespace {

std::string rational_text(const mpq_class& v) { return v.get_str(); }

// Appends a signed term; `unit` is "" for the real part.
void append_term(std::string& out, const mpq_class& coeff, std::string_view unit) {
  if (sgn(coeff) == 0) return;
  const bool negative = sgn(coeff) < 0;
  const mpq_class mag = abs(coeff);
  if (negative) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  if (unit.empty() || mag != 1) out += rational_text(mag);
  out += unit;
}

}  // namespace

std::string Element::to_text() const {
  if (!ring_->finite()) {
    const auto& q = std::get<Quaternion>(value_);
    std::string out;
    append_term(out, q.w, "");
    append_term(out, q.x, "i");
    append_term(out, q.y, "j");
    append_term(out, q.z, "k");
    return out.empty() ? "0" : out;
  }
  const std::uint32_t c = std::get<std::uint32_t>(value_);
  if (ring_->spec.k == 1) return std::to_string(c);
  const Poly d = ring_->digits(c);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i >= 1) out += 't';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::size_t Element::hash() const {
  std::size_t h = std::hash<const void*>{}(ring_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (ring_->finite()) {
    mix(std::get<std::uint32_t>(value_));
  } else {
    const auto& q = std::get<Quaternion>(value_);
    for (const mpq_class* c : {&q.w, &q.x, &q.y, &q.z}) {
      mix(mpz_get_ui(c->get_num_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(c->get_num_mpz_t())) << 1));
      mix(mpz_get_ui(c->get_den_mpz_t()));
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Parsing of element text

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  if (out.size() >= 2 && out.front() == '(' && out.back() == ')') out = out.substr(1, out.size() - 2);
  return out;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorCode::MalformedInput, "bad rational '" + s + "'");
  if (v.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  v.canonicalize();
  return v;
}

// Splits "a+b-c" into signed terms, keeping each sign with its term.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^') {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  terms.push_back(cur);
  std::erase_if(terms, [](const std::string& t) { return t.empty() || t == "+"; });
  return terms;
}

}  // namespace

Element Ring::parse_element(std::string_view text) const {
  const std::string s = strip(text);
  if (s.empty()) throw Error(ErrorCode::MalformedInput, "empty element text");
  if (kind() == RingKind::RationalQuaternion) {
    mpq_class comp[4];
    for (std::string term : split_terms(s)) {
      int slot = 0;
      const char last = term.back();
      if (last == 'i' || last == 'j' || last == 'k') {
        slot = last == 'i' ? 1 : last == 'j' ? 2 : 3;
        term.pop_back();
      }
      bool neg = false;
      if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
        neg = term[0] == '-';
        term.erase(0, 1);
      }
      mpq_class v = term.empty() ? mpq_class(1) : parse_rational(term);
      if (slot == 0 && term.empty()) throw Error(ErrorCode::MalformedInput, "bad quaternion '" + s + "'");
      comp[slot] += neg ? mpq_class(-v) : v;
    }
    return quaternion(comp[0], comp[1], comp[2], comp[3]);
  }
  const std::uint32_t p = data_->spec.p;
  if (data_->spec.k == 1) {
    try {
      return from_int(std::stoll(s));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::MalformedInput, "bad field element '" + s + "'");
    }
  }
  std::vector<long long> acc(data_->spec.k, 0);
  for (std::string term : split_terms(s)) {
    bool neg = false;
    if (term[0] == '+' || term[0] == '-') {
      neg = term[0] == '-';
      term.erase(0, 1);
    }
    std::size_t power = 0;
    long long coeff = 1;
    const auto tpos = term.find('t');
    try {
      if (tpos == std::string::npos) {
        coeff = std::stoll(term);
      } else {
        if (tpos > 0) coeff = std::stoll(term.substr(0, tpos));
        power = 1;
        if (tpos + 1 < term.size()) {
          if (term[tpos + 1] != '^') throw Error(ErrorCode::MalformedInput, "bad term '" + term + "'");
          power = std::stoul(term.substr(tpos + 2));
        }
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::MalformedInput, "bad term '" + term + "'");
    }
    if (power >= data_->spec.k) throw Error(ErrorCode::MalformedInput, "power of t too large in '" + s + "'");
    acc[power] += neg ? -coeff : coeff;
  }
  std::vector<std::uint32_t> coeffs(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) coeffs[i] = static_cast<std::uint32_t>(((acc[i] % p) + p) % p);
  return from_coefficients(coeffs);
}

}  // namespace skewpoly
