#include "skewpoly/skewring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace skewpoly {

std::size_t Degree::value() const {
  if (is_bottom()) throw std::logic_error("degree of the zero polynomial has no numeric value");
  return static_cast<std::size_t>(value_);
}

Monomial Monomial::from_indices(const std::vector<std::size_t>& one_based) {
  std::vector<std::uint16_t> word;
  word.reserve(one_based.size());
  for (std::size_t v : one_based) {
    if (v == 0 || v > 0xFFFF) throw Error(ErrorCode::MalformedInput, "variable index " + std::to_string(v));
    word.push_back(static_cast<std::uint16_t>(v - 1));
  }
  return Monomial(std::move(word));
}

Monomial operator*(const Monomial& m, const Monomial& n) {
  std::vector<std::uint16_t> word = m.word_;
  word.insert(word.end(), n.word_.begin(), n.word_.end());
  return Monomial(std::move(word));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  for (std::size_t pos = a.word_.size(); pos-- > 0;) {
    if (auto c = a.word_[pos] <=> b.word_[pos]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_text() const {
  if (word_.empty()) return "1";
  std::string out;
  for (std::size_t pos = 0; pos < word_.size(); ++pos) {
    if (pos > 0) out += '.';
    out += 'x' + std::to_string(word_[pos] + 1);
  }
  return out;
}

Monomial Monomial::parse(std::string_view text) {
  if (text == "1") return Monomial();
  std::vector<std::size_t> indices;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'x') throw Error(ErrorCode::MalformedInput, "bad monomial '" + std::string(text) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 5) {
      throw Error(ErrorCode::MalformedInput, "bad monomial '" + std::string(text) + "'");
    }
    indices.push_back(std::stoul(std::string(text.substr(start, pos - start))));
    if (pos < text.size()) {
      if (text[pos] != '.') throw Error(ErrorCode::MalformedInput, "bad monomial '" + std::string(text) + "'");
      ++pos;
      if (pos == text.size()) throw Error(ErrorCode::MalformedInput, "bad monomial '" + std::string(text) + "'");
    }
  }
  if (indices.empty()) throw Error(ErrorCode::MalformedInput, "empty monomial");
  return from_indices(indices);
}

std::vector<Monomial> monomials_below(std::size_t n, std::size_t d) {
  std::vector<Monomial> out;
  std::vector<Monomial> layer{Monomial()};
  for (std::size_t deg = 0; deg < d; ++deg) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (deg + 1 == d) break;
    // Within one degree the order compares the rightmost letter first, so
    // extending each word on the left with every letter keeps it sorted when
    // the new letter varies fastest.
    std::vector<Monomial> next;
    next.reserve(layer.size() * n);
    for (const auto& m : layer) {
      for (std::size_t i = 0; i < n; ++i) next.push_back(Monomial::variable(i) * m);
    }
    layer = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

SkewPolynomial::SkewPolynomial(Ring ring, Terms terms) : ring_(ring) {
  for (auto& [m, c] : terms) add_term(m, c);
}

SkewPolynomial SkewPolynomial::constant(const Element& c) { return monomial(c.ring(), Monomial(), c); }

SkewPolynomial SkewPolynomial::monomial(const Ring& ring, const Monomial& m, const Element& c) {
  SkewPolynomial out(ring);
  out.add_term(m, c);
  return out;
}

Element SkewPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ring_.zero() : it->second;
}

Degree SkewPolynomial::degree() const {
  if (terms_.empty()) return Degree::bottom();
  return Degree(terms_.rbegin()->first.degree());
}

const Monomial& SkewPolynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no leading monomial");
  return terms_.rbegin()->first;
}

const Element& SkewPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

std::size_t SkewPolynomial::variables_used() const {
  std::size_t top = 0;
  for (const auto& [m, c] : terms_) {
    for (auto v : m.word()) top = std::max<std::size_t>(top, v + 1u);
  }
  return top;
}

void SkewPolynomial::add_term(const Monomial& m, const Element& c) {
  if (!(c.ring() == ring_)) {
    throw Error(ErrorCode::RingMismatch, "coefficient from " + c.ring().description() + " in a polynomial over " +
                                             ring_.description());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SkewPolynomial SkewPolynomial::operator-() const {
  SkewPolynomial out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

SkewPolynomial& SkewPolynomial::operator+=(const SkewPolynomial& b) {
  if (!(b.ring_ == ring_)) throw Error(ErrorCode::RingMismatch, "polynomials over different rings");
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

SkewPolynomial& SkewPolynomial::operator-=(const SkewPolynomial& b) {
  if (!(b.ring_ == ring_)) throw Error(ErrorCode::RingMismatch, "polynomials over different rings");
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b) {
  SkewPolynomial out = a;
  out += b;
  return out;
}

SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b) {
  SkewPolynomial out = a;
  out -= b;
  return out;
}

bool operator==(const SkewPolynomial& a, const SkewPolynomial& b) {
  return a.ring_ == b.ring_ && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

SkewPolynomial SkewPolynomial::scale_left(const Element& c) const {
  SkewPolynomial out(ring_);
  if (!(c.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "scalar from another ring");
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.add_term(m, c * coeff);
  return out;
}

SkewPolynomial SkewPolynomial::append(const Monomial& suffix) const {
  SkewPolynomial out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m * suffix, c);
  return out;
}

SkewPolynomial scale_left(const Element& c, const SkewPolynomial& f) { return f.scale_left(c); }

namespace {

std::string coefficient_text(const Element& c) {
  std::string s = c.to_text();
  if (s.find_first_of("+-", 1) != std::string::npos) return "(" + s + ")";
  return s;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string SkewPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto& [m, c] = *it;
    if (m.is_one()) {
      out += coefficient_text(c);
    } else if (c.is_one()) {
      out += m.to_text();
    } else {
      out += coefficient_text(c) + "*" + m.to_text();
    }
  }
  return out;
}

SkewPolynomial SkewPolynomial::parse(const Ring& ring, std::string_view text) {
  SkewPolynomial out(ring);
  const std::string body = trim(text);
  if (body.empty()) throw Error(ErrorCode::MalformedInput, "empty polynomial text");
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos < body.size(); ++pos) {
    if (body[pos] == '(') ++depth;
    if (body[pos] == ')') --depth;
    if (depth < 0) throw Error(ErrorCode::MalformedInput, "unbalanced parentheses in '" + body + "'");
    if (depth == 0 && body.compare(pos, 3, " + ") == 0) {
      terms.push_back(body.substr(start, pos - start));
      start = pos + 3;
      pos += 2;
    }
  }
  if (depth != 0) throw Error(ErrorCode::MalformedInput, "unbalanced parentheses in '" + body + "'");
  terms.push_back(body.substr(start));
  for (const auto& raw : terms) {
    const std::string term = trim(raw);
    if (term.empty()) throw Error(ErrorCode::MalformedInput, "empty term in '" + body + "'");
    // The monomial part follows the last '*' outside parentheses.
    std::size_t star = std::string::npos;
    depth = 0;
    for (std::size_t pos = 0; pos < term.size(); ++pos) {
      if (term[pos] == '(') ++depth;
      if (term[pos] == ')') --depth;
      if (depth == 0 && term[pos] == '*') star = pos;
    }
    if (star != std::string::npos) {
      out.add_term(Monomial::parse(trim(term.substr(star + 1))), ring.parse_element(trim(term.substr(0, star))));
    } else if (term[0] == 'x') {
      out.add_term(Monomial::parse(term), ring.one());
    } else {
      out.add_term(Monomial(), ring.parse_element(term));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multiplication

SkewPolynomial left_mul_variable(std::size_t i, const SkewPolynomial& p, const Frame& frame) {
  if (i >= frame.n()) throw Error(ErrorCode::InvalidInput, "variable x" + std::to_string(i + 1) + " outside the frame");
  const std::size_t n = frame.n();
  SkewPolynomial out(p.ring());
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (frame.sigma_is_zero(i, j)) continue;
      out.add_term(Monomial::variable(j) * w, frame.sigma(i, j)(c));
    }
    if (!frame.delta_is_zero(i)) out.add_term(w, frame.delta(i)(c));
  }
  return out;
}

namespace {

// m * G for every suffix of m, sharing work across the words of one product.
class SuffixProducts {
 public:
  SuffixProducts(const SkewPolynomial& g, const Frame& frame) : g_(g), frame_(frame) {}

  const SkewPolynomial& of(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    if (m.is_one()) return cache_.emplace(m, g_).first->second;
    SkewPolynomial value = left_mul_variable(m[0], of(m.drop_first()), frame_);
    return cache_.emplace(m, std::move(value)).first->second;
  }

 private:
  const SkewPolynomial& g_;
  const Frame& frame_;
  std::map<Monomial, SkewPolynomial> cache_;
};

}  // namespace

SkewPolynomial mul_monomial_constant(const Monomial& m, const Element& a, const Frame& frame) {
  SkewPolynomial acc = SkewPolynomial::constant(a);
  for (std::size_t pos = m.degree(); pos-- > 0;) acc = left_mul_variable(m[pos], acc, frame);
  return acc;
}

SkewPolynomial mul(const SkewPolynomial& f, const SkewPolynomial& g, const Frame& frame) {
  if (!(f.ring() == g.ring()) || !(f.ring() == frame.ring())) {
    throw Error(ErrorCode::RingMismatch, "product of polynomials over different rings");
  }
  SkewPolynomial out(f.ring());
  if (f.is_zero() || g.is_zero()) return out;
  SuffixProducts products(g, frame);
  for (const auto& [m, c] : f.terms()) out += products.of(m).scale_left(c);
  return out;
}

}  // namespace skewpoly
