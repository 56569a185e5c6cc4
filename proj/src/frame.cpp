#include "skewpoly/frame.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace skewpoly {

struct AdditiveMap::Impl {
  Ring ring;
  Op op = Op::Matrix;
  // finite fields
  std::vector<std::vector<std::uint32_t>> matrix;
  std::vector<std::uint32_t> table;
  // quaternion catalog
  std::optional<Element> constant;
  std::vector<AdditiveMap> operands;
  bool zero = false;

  explicit Impl(Ring r) : ring(r) {}
};

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw Error(ErrorCode::RingMismatch, "additive maps over " + a.description() + " and " + b.description());
}

Element quaternion_conjugate(const Element& a) {
  const auto& q = a.quaternion();
  return a.ring().quaternion(q.w, -q.x, -q.y, -q.z);
}

}  // namespace

AdditiveMap AdditiveMap::from_table(const Ring& ring, std::vector<std::uint32_t> table) {
  auto impl = std::make_shared<Impl>(ring);
  const std::uint32_t p = ring.characteristic();
  const std::uint32_t k = ring.degree();
  impl->matrix.assign(k, std::vector<std::uint32_t>(k, 0));
  std::uint32_t basis = 1;
  for (std::uint32_t c = 0; c < k; ++c, basis *= p) {
    const auto image = ring.from_code(table[basis]).coefficients();
    for (std::uint32_t r = 0; r < k; ++r) impl->matrix[r][c] = image[r];
  }
  impl->zero = std::all_of(table.begin(), table.end(), [](std::uint32_t v) { return v == 0; });
  impl->table = std::move(table);
  return AdditiveMap(std::move(impl));
}

AdditiveMap AdditiveMap::from_matrix(const Ring& ring, const std::vector<std::vector<std::uint32_t>>& rows) {
  if (!ring.is_finite()) throw Error(ErrorCode::NotFinite, "matrix maps are defined over finite fields");
  const std::uint32_t k = ring.degree();
  const std::uint32_t p = ring.characteristic();
  if (rows.size() != k || std::any_of(rows.begin(), rows.end(), [k](const auto& r) { return r.size() != k; })) {
    throw Error(ErrorCode::InvalidInput, "additive map matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  }
  std::vector<Element> columns;
  for (std::uint32_t c = 0; c < k; ++c) {
    std::vector<std::uint32_t> col(k);
    for (std::uint32_t r = 0; r < k; ++r) col[r] = rows[r][c] % p;
    columns.push_back(ring.from_coefficients(col));
  }
  // Linear extension: table[code] = table[code - p^i] + image(t^i), where i
  // is the lowest nonzero digit of code.
  const auto q = static_cast<std::uint32_t>(ring.order());
  std::vector<std::uint32_t> table(q, 0);
  for (std::uint32_t code = 1; code < q; ++code) {
    std::uint32_t i = 0, step = 1, rest = code;
    while (rest % p == 0) {
      rest /= p;
      step *= p;
      ++i;
    }
    table[code] = (ring.from_code(table[code - step]) + columns[i]).code();
  }
  return from_table(ring, std::move(table));
}

AdditiveMap AdditiveMap::from_function(const Ring& ring, const std::function<Element(const Element&)>& fn) {
  if (!ring.is_finite()) throw Error(ErrorCode::NotFinite, "arbitrary functions can only be tabulated over finite fields");
  const auto elements = ring.enumerate();
  const std::uint32_t p = ring.characteristic();
  const std::uint32_t k = ring.degree();
  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(k, 0));
  std::uint32_t basis = 1;
  for (std::uint32_t c = 0; c < k; ++c, basis *= p) {
    const auto image = fn(elements[basis]).coefficients();
    for (std::uint32_t r = 0; r < k; ++r) rows[r][c] = image[r];
  }
  AdditiveMap linear = from_matrix(ring, rows);
  const Element image_of_zero = fn(ring.zero());
  if (!image_of_zero.is_zero()) {
    throw Error(ErrorCode::InvalidFrame, "map is not additive: f(0 + 0) != f(0) + f(0) (witness a = 0, b = 0)");
  }
  for (std::uint32_t code = 1; code < elements.size(); ++code) {
    if (fn(elements[code]) == linear(elements[code])) continue;
    // Walk from 0 to code adding one basis vector at a time; the first step
    // where fn leaves the linear extension is an additivity witness.
    Element acc = ring.zero();
    std::uint32_t rest = code, power = 1;
    while (rest > 0) {
      const Element e = elements[power];
      for (std::uint32_t d = 0; d < rest % p; ++d) {
        const Element next = acc + e;
        if (!(fn(next) == fn(acc) + fn(e))) {
          throw Error(ErrorCode::InvalidFrame, "map is not additive: f(a + b) != f(a) + f(b) (witness a = " +
                                                   acc.to_text() + ", b = " + e.to_text() + ")");
        }
        acc = next;
      }
      rest /= p;
      power *= p;
    }
  }
  return linear;
}

AdditiveMap AdditiveMap::zero(const Ring& ring) {
  if (ring.is_finite()) return from_table(ring, std::vector<std::uint32_t>(ring.order(), 0));
  return left_mul(ring.zero());
}

AdditiveMap AdditiveMap::identity(const Ring& ring) {
  if (ring.is_finite()) {
    std::vector<std::uint32_t> table(ring.order());
    for (std::uint32_t c = 0; c < table.size(); ++c) table[c] = c;
    return from_table(ring, std::move(table));
  }
  return left_mul(ring.one());
}

AdditiveMap AdditiveMap::left_mul(const Element& c) {
  const Ring ring = c.ring();
  if (ring.is_finite()) {
    std::vector<std::uint32_t> table;
    for (const auto& a : ring.enumerate()) table.push_back((c * a).code());
    return from_table(ring, std::move(table));
  }
  auto impl = std::make_shared<Impl>(ring);
  impl->op = Op::LeftMul;
  impl->constant = c;
  impl->zero = c.is_zero();
  return AdditiveMap(std::move(impl));
}

AdditiveMap AdditiveMap::right_mul(const Element& c) {
  const Ring ring = c.ring();
  if (ring.is_finite()) return left_mul(c);
  auto impl = std::make_shared<Impl>(ring);
  impl->op = Op::RightMul;
  impl->constant = c;
  impl->zero = c.is_zero();
  return AdditiveMap(std::move(impl));
}

AdditiveMap AdditiveMap::conjugation(const Ring& ring) {
  if (ring.is_finite()) throw Error(ErrorCode::InvalidInput, "conjugation is only defined for the quaternions");
  auto impl = std::make_shared<Impl>(ring);
  impl->op = Op::Conjugation;
  return AdditiveMap(std::move(impl));
}

AdditiveMap AdditiveMap::frobenius(const Ring& ring, unsigned power) {
  if (!ring.is_finite()) throw Error(ErrorCode::NotFinite, "Frobenius is defined over finite fields");
  std::vector<std::uint32_t> table;
  const auto elements = ring.enumerate();
  for (const auto& a : elements) {
    Element v = a;
    for (unsigned e = 0; e < power; ++e) {
      Element acc = ring.one();
      for (std::uint32_t r = 0; r < ring.characteristic(); ++r) acc *= v;
      v = acc;
    }
    table.push_back(v.code());
  }
  return from_table(ring, std::move(table));
}

AdditiveMap AdditiveMap::sum(std::vector<AdditiveMap> terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidInput, "sum of no maps");
  const Ring ring = terms.front().ring();
  for (const auto& t : terms) require_same_ring(ring, t.ring());
  if (ring.is_finite()) {
    std::vector<std::uint32_t> table(ring.order(), 0);
    for (std::uint32_t c = 0; c < table.size(); ++c) {
      Element acc = ring.zero();
      for (const auto& t : terms) acc += ring.from_code(t.impl_->table[c]);
      table[c] = acc.code();
    }
    return from_table(ring, std::move(table));
  }
  auto impl = std::make_shared<Impl>(ring);
  impl->op = Op::Sum;
  impl->zero = std::all_of(terms.begin(), terms.end(), [](const AdditiveMap& m) { return m.is_zero(); });
  impl->operands = std::move(terms);
  return AdditiveMap(std::move(impl));
}

AdditiveMap AdditiveMap::compose(std::vector<AdditiveMap> maps) {
  if (maps.empty()) throw Error(ErrorCode::InvalidInput, "composition of no maps");
  const Ring ring = maps.front().ring();
  for (const auto& m : maps) require_same_ring(ring, m.ring());
  if (ring.is_finite()) {
    std::vector<std::uint32_t> table(ring.order());
    for (std::uint32_t c = 0; c < table.size(); ++c) {
      std::uint32_t v = c;
      for (auto it = maps.rbegin(); it != maps.rend(); ++it) v = it->impl_->table[v];
      table[c] = v;
    }
    return from_table(ring, std::move(table));
  }
  auto impl = std::make_shared<Impl>(ring);
  impl->op = Op::Compose;
  impl->zero = std::any_of(maps.begin(), maps.end(), [](const AdditiveMap& m) { return m.is_zero(); });
  impl->operands = std::move(maps);
  return AdditiveMap(std::move(impl));
}

Element AdditiveMap::operator()(const Element& a) const {
  if (!(a.ring() == impl_->ring)) {
    throw Error(ErrorCode::RingMismatch, "map over " + impl_->ring.description() + " applied to " + a.ring().description());
  }
  switch (impl_->op) {
    case Op::Matrix: return impl_->ring.from_code(impl_->table[a.code()]);
    case Op::LeftMul: return *impl_->constant * a;
    case Op::RightMul: return a * *impl_->constant;
    case Op::Conjugation: return quaternion_conjugate(a);
    case Op::Sum: {
      Element acc = impl_->ring.zero();
      for (const auto& t : impl_->operands) acc += t(a);
      return acc;
    }
    case Op::Compose: {
      Element v = a;
      for (auto it = impl_->operands.rbegin(); it != impl_->operands.rend(); ++it) v = (*it)(v);
      return v;
    }
  }
  return a;
}

const Ring& AdditiveMap::ring() const { return impl_->ring; }
AdditiveMap::Op AdditiveMap::op() const { return impl_->op; }
bool AdditiveMap::is_zero() const { return impl_->zero; }

const std::vector<std::vector<std::uint32_t>>& AdditiveMap::matrix() const {
  if (impl_->op != Op::Matrix) throw Error(ErrorCode::InvalidInput, "catalog map has no matrix");
  return impl_->matrix;
}

const Element& AdditiveMap::constant() const {
  if (!impl_->constant) throw Error(ErrorCode::InvalidInput, "map has no constant");
  return *impl_->constant;
}

const std::vector<AdditiveMap>& AdditiveMap::operands() const { return impl_->operands; }

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(Ring ring, std::size_t n, std::vector<AdditiveMap> sigma, std::vector<AdditiveMap> delta)
    : ring_(ring), n_(n), sigma_(std::move(sigma)), delta_(std::move(delta)) {
  for (const auto& m : sigma_) sigma_zero_.push_back(m.is_zero());
  for (const auto& m : delta_) delta_zero_.push_back(m.is_zero());
}

Frame Frame::conventional(const Ring& ring, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "a frame needs at least one variable");
  const AdditiveMap id = AdditiveMap::identity(ring);
  const AdditiveMap zero = AdditiveMap::zero(ring);
  std::vector<AdditiveMap> sigma;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sigma.push_back(i == j ? id : zero);
  }
  return Frame(ring, n, std::move(sigma), std::vector<AdditiveMap>(n, zero));
}

Frame Frame::unchecked(const Ring& ring, std::size_t n, std::vector<AdditiveMap> sigma,
                       std::vector<AdditiveMap> delta) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "a frame needs at least one variable");
  if (sigma.size() != n * n) throw Error(ErrorCode::InvalidInput, "sigma must have n*n entries");
  if (delta.size() != n) throw Error(ErrorCode::InvalidInput, "delta must have n entries");
  for (const auto& m : sigma) require_same_ring(ring, m.ring());
  for (const auto& m : delta) require_same_ring(ring, m.ring());
  return Frame(ring, n, std::move(sigma), std::move(delta));
}

Frame Frame::make(const Ring& ring, std::size_t n, std::vector<AdditiveMap> sigma, std::vector<AdditiveMap> delta) {
  Frame frame = unchecked(ring, n, std::move(sigma), std::move(delta));
  const auto report = validate_frame(frame);
  if (!report.valid()) throw Error(ErrorCode::InvalidFrame, report.summary());
  return frame;
}

bool Frame::is_conventional() const {
  const Element probe = ring_.is_finite() ? (ring_.order() > 2 ? ring_.from_code(2) : ring_.one())
                                          : ring_.quaternion(1, 2, 3, 5);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!delta_zero_[i]) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !sigma_zero_[i * n_ + j]) return false;
      if (i == j) {
        const auto& m = sigma_[i * n_ + j];
        if (ring_.is_finite()) {
          for (const auto& a : ring_.enumerate()) {
            if (!(m(a) == a)) return false;
          }
        } else if (!(m(probe) == probe) || !(m(ring_.quaternion(0, 1, 0, 0)) == ring_.quaternion(0, 1, 0, 0)) ||
                   !(m(ring_.quaternion(0, 0, 1, 0)) == ring_.quaternion(0, 0, 1, 0))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Element> Frame::apply_sigma(const Element& a) const {
  std::vector<Element> out;
  out.reserve(n_ * n_);
  for (std::size_t idx = 0; idx < n_ * n_; ++idx) out.push_back(sigma_zero_[idx] ? ring_.zero() : sigma_[idx](a));
  return out;
}

Point Frame::apply_delta(const Element& a) const {
  std::vector<Element> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back(delta_zero_[i] ? ring_.zero() : delta_[i](a));
  return Point(std::move(out));
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::summary() const {
  if (valid()) return "frame is valid";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i > 0) out << "; ";
    out << v.reason << " [" << v.identity << "]";
    if (v.a) out << " a = " << v.a->to_text();
    if (v.b) out << ", b = " << v.b->to_text();
  }
  return out.str();
}

namespace {

class ViolationLog {
 public:
  void record(const std::string& identity, const std::string& reason, std::optional<Element> a,
              std::optional<Element> b) {
    auto it = index_.find(identity);
    if (it != index_.end()) {
      ++violations_[it->second].occurrences;
      return;
    }
    index_.emplace(identity, violations_.size());
    violations_.push_back(Violation{identity, reason, std::move(a), std::move(b), 1});
  }
  std::vector<Violation> take() { return std::move(violations_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<Violation> violations_;
};

std::string at(std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }
std::string at(std::size_t i) { return "(" + std::to_string(i + 1) + ")"; }

void check_pair(const Frame& f, const Element& a, const Element& b, ViolationLog& log) {
  const std::size_t n = f.n();
  const auto sa = f.apply_sigma(a);
  const auto sb = f.apply_sigma(b);
  const auto sab = f.apply_sigma(a * b);
  const Point db = f.apply_delta(b);
  const Point da = f.apply_delta(a);
  const Point dab = f.apply_delta(a * b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element rhs = f.ring().zero();
      for (std::size_t l = 0; l < n; ++l) rhs += sa[i * n + l] * sb[l * n + j];
      if (!(sab[i * n + j] == rhs)) {
        log.record("sigma(ab) = sigma(a)sigma(b) at " + at(i, j), "not multiplicative", a, b);
      }
    }
    Element rhs = da[i] * b;
    for (std::size_t l = 0; l < n; ++l) rhs += sa[i * n + l] * db[l];
    if (!(dab[i] == rhs)) {
      log.record("delta(ab) = sigma(a)delta(b) + delta(a)b at " + at(i), "twisted Leibniz rule fails", a, b);
    }
  }
}

Element random_quaternion(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  auto r = [&] { return mpq_class(num(rng), den(rng)); };
  return ring.quaternion(r(), r(), r(), r());
}

}  // namespace

ValidationReport validate_frame(const Frame& frame, std::uint64_t seed) {
  const Ring& ring = frame.ring();
  const std::size_t n = frame.n();
  ViolationLog log;
  ValidationReport report;

  const auto s1 = frame.apply_sigma(ring.one());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element expected = i == j ? ring.one() : ring.zero();
      if (!(s1[i * n + j] == expected)) {
        log.record("sigma(1) = I at " + at(i, j), "unit not preserved", ring.one(), std::nullopt);
      }
    }
  }

  std::vector<Element> sample;
  if (ring.is_finite()) {
    const std::uint64_t q = ring.order();
    if (q <= 256) {
      sample = ring.enumerate();
      report.exhaustive = true;
    } else {
      std::uint32_t basis = 1;
      for (std::uint32_t i = 0; i < ring.degree(); ++i, basis *= ring.characteristic()) {
        sample.push_back(ring.from_code(basis));
      }
      // Power-basis pairs determine both sides by GF(p)-bilinearity.
      report.exhaustive = true;
    }
    for (const auto& a : sample) {
      for (const auto& b : sample) {
        check_pair(frame, a, b, log);
        ++report.pairs_checked;
      }
    }
  } else {
    sample = {ring.one(),
              ring.quaternion(0, 1, 0, 0),
              ring.quaternion(0, 0, 1, 0),
              ring.quaternion(0, 0, 0, 1),
              ring.quaternion(mpq_class(1, 2), 0, 0, 0),
              ring.quaternion(1, 1, 0, 0)};
    for (const auto& a : sample) {
      for (const auto& b : sample) {
        check_pair(frame, a, b, log);
        ++report.pairs_checked;
      }
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 256; ++t) {
      const Element a = random_quaternion(ring, rng);
      const Element b = random_quaternion(ring, rng);
      check_pair(frame, a, b, log);
      ++report.pairs_checked;
    }
  }
  report.violations = log.take();
  return report;
}

Frame make_diagonal_frame(const Ring& ring, const std::vector<AdditiveMap>& endos, const std::vector<AdditiveMap>& ders) {
  const std::size_t n = endos.size();
  if (n == 0 || ders.size() != n) {
    throw Error(ErrorCode::InvalidInput, "need one endomorphism and one derivation per variable");
  }
  const AdditiveMap zero = AdditiveMap::zero(ring);
  std::vector<AdditiveMap> sigma;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sigma.push_back(i == j ? endos[i] : zero);
  }
  return Frame::make(ring, n, std::move(sigma), ders);
}

Frame make_diagonal_frame_from_functions(const Ring& ring,
                                         const std::vector<std::function<Element(const Element&)>>& endos,
                                         const std::vector<std::function<Element(const Element&)>>& ders) {
  std::vector<AdditiveMap> e, d;
  for (const auto& fn : endos) e.push_back(AdditiveMap::from_function(ring, fn));
  for (const auto& fn : ders) d.push_back(AdditiveMap::from_function(ring, fn));
  return make_diagonal_frame(ring, e, d);
}

Frame make_inner_frame(const Ring& ring, std::size_t n, const std::vector<AdditiveMap>& sigma, const Point& beta) {
  if (beta.dimension() != n) throw Error(ErrorCode::InvalidInput, "beta must have n coordinates");
  // Validate sigma on its own (delta = 0).
  Frame::make(ring, n, sigma, std::vector<AdditiveMap>(n, AdditiveMap::zero(ring)));
  std::vector<AdditiveMap> delta;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<AdditiveMap> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (beta[j].is_zero() || sigma[i * n + j].is_zero()) continue;
      terms.push_back(AdditiveMap::compose({AdditiveMap::right_mul(beta[j]), sigma[i * n + j]}));
    }
    terms.push_back(AdditiveMap::left_mul(-beta[i]));
    delta.push_back(AdditiveMap::sum(std::move(terms)));
  }
  return Frame::unchecked(ring, n, sigma, std::move(delta));
}

Frame block_diagonal(const Frame& upper, const Frame& lower) {
  require_same_ring(upper.ring(), lower.ring());
  const Ring& ring = upper.ring();
  const std::size_t r = upper.n();
  const std::size_t n = r + lower.n();
  const AdditiveMap zero = AdditiveMap::zero(ring);
  std::vector<AdditiveMap> sigma(n * n, zero);
  std::vector<AdditiveMap> delta;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) sigma[i * n + j] = upper.sigma(i, j);
    delta.push_back(upper.delta(i));
  }
  for (std::size_t i = 0; i < lower.n(); ++i) {
    for (std::size_t j = 0; j < lower.n(); ++j) sigma[(r + i) * n + r + j] = lower.sigma(i, j);
    delta.push_back(lower.delta(i));
  }
  return Frame::unchecked(ring, n, std::move(sigma), std::move(delta));
}

}  // namespace skewpoly
