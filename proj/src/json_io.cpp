#include "skewpoly/json_io.hpp"

namespace skewpoly::json {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::uint32_t small_unsigned(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 0xFFFFFFFFLL) {
    malformed(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint32_t>();
}

mpq_class rational_from(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) malformed("quaternion components must be \"num/den\" strings or integers");
  mpq_class v;
  const auto s = j.get<std::string>();
  if (s.empty() || v.set_str(s, 10) != 0) malformed("bad rational \"" + s + "\"");
  if (v.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in \"" + s + "\"");
  v.canonicalize();
  return v;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

json encode(const RingSpec& spec) {
  json out = {{"kind", std::string(ring_kind_name(spec.kind))}};
  if (spec.kind == RingKind::RationalQuaternion) return out;
  out["p"] = spec.p;
  out["k"] = spec.k;
  if (spec.kind == RingKind::ExtensionField) out["modulus"] = spec.modulus;
  return out;
}

RingSpec decode_ring_spec(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) malformed("ring kind must be a string");
  RingSpec spec;
  spec.kind = parse_ring_kind(kind.get<std::string>());
  if (spec.kind == RingKind::RationalQuaternion) return spec;
  spec.p = small_unsigned(field(j, "p"), "p");
  spec.k = j.contains("k") ? small_unsigned(j.at("k"), "k") : 1;
  if (j.contains("modulus") && !j.at("modulus").is_null()) {
    if (!j.at("modulus").is_array()) malformed("modulus must be an array of coefficients");
    for (const auto& c : j.at("modulus")) spec.modulus.push_back(small_unsigned(c, "modulus coefficient"));
  }
  return spec;
}

json encode(const Element& e) {
  const Ring ring = e.ring();
  switch (ring.kind()) {
    case RingKind::PrimeField: return e.code();
    case RingKind::ExtensionField: return e.coefficients();
    case RingKind::RationalQuaternion: {
      const auto& q = e.quaternion();
      return json::array({rational_text(q.w), rational_text(q.x), rational_text(q.y), rational_text(q.z)});
    }
  }
  return nullptr;
}

Element decode_element(const Ring& ring, const json& j) {
  if (j.is_string()) return ring.parse_element(j.get<std::string>());
  switch (ring.kind()) {
    case RingKind::PrimeField:
      if (!j.is_number_integer()) malformed("prime-field elements are integers");
      return ring.from_int(j.get<long long>());
    case RingKind::ExtensionField: {
      if (!j.is_array() || j.size() != ring.degree()) {
        malformed("extension-field elements are arrays of " + std::to_string(ring.degree()) + " coefficients");
      }
      std::vector<std::uint32_t> coeffs;
      for (const auto& c : j) {
        if (!c.is_number_integer()) malformed("extension-field coefficients are integers");
        const long long p = ring.characteristic();
        coeffs.push_back(static_cast<std::uint32_t>(((c.get<long long>() % p) + p) % p));
      }
      return ring.from_coefficients(coeffs);
    }
    case RingKind::RationalQuaternion:
      if (!j.is_array() || j.size() != 4) malformed("quaternions are arrays of four rationals");
      return ring.quaternion(rational_from(j[0]), rational_from(j[1]), rational_from(j[2]), rational_from(j[3]));
  }
  malformed("unknown ring kind");
}

json encode(const Point& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(encode(c));
  return out;
}

Point decode_point(const Ring& ring, const json& j) {
  if (!j.is_array()) malformed("points are arrays of elements");
  std::vector<Element> coords;
  for (const auto& c : j) coords.push_back(decode_element(ring, c));
  return Point(std::move(coords));
}

json encode(const PointSet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(encode(p));
  return out;
}

PointSet decode_point_set(const Ring& ring, const json& j) {
  if (!j.is_array()) malformed("point sets are arrays of points");
  PointSet out;
  for (const auto& p : j) out.push_back(decode_point(ring, p));
  return out;
}

json encode(const Monomial& m) {
  json out = json::array();
  for (auto v : m.word()) out.push_back(v + 1);
  return out;
}

Monomial decode_monomial(const json& j) {
  if (j.is_string()) return Monomial::parse(j.get<std::string>());
  if (!j.is_array()) malformed("monomials are arrays of 1-based variable indices");
  std::vector<std::size_t> indices;
  for (const auto& v : j) indices.push_back(small_unsigned(v, "variable index"));
  return Monomial::from_indices(indices);
}

json encode(const SkewPolynomial& f) {
  json out = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    out.push_back({{"monomial", encode(it->first)}, {"coeff", encode(it->second)}});
  }
  return out;
}

SkewPolynomial decode_polynomial(const Ring& ring, const json& j) {
  if (j.is_string()) return SkewPolynomial::parse(ring, j.get<std::string>());
  if (!j.is_array()) malformed("polynomials are term arrays or text strings");
  SkewPolynomial out(ring);
  for (const auto& term : j) out.add_term(decode_monomial(field(term, "monomial")), decode_element(ring, field(term, "coeff")));
  return out;
}

json encode(const AdditiveMap& m) {
  using Op = AdditiveMap::Op;
  switch (m.op()) {
    case Op::Matrix: return {{"matrix", m.matrix()}};
    case Op::LeftMul: return {{"op", "lmul"}, {"c", encode(m.constant())}};
    case Op::RightMul: return {{"op", "rmul"}, {"c", encode(m.constant())}};
    case Op::Conjugation: return {{"op", "conj"}};
    case Op::Sum:
    case Op::Compose: {
      json args = json::array();
      for (const auto& a : m.operands()) args.push_back(encode(a));
      return {{"op", m.op() == Op::Sum ? "sum" : "compose"}, {"args", args}};
    }
  }
  return nullptr;
}

AdditiveMap decode_additive_map(const Ring& ring, const json& j) {
  if (j.is_object() && j.contains("matrix")) {
    const json& rows = j.at("matrix");
    if (!rows.is_array()) malformed("matrix must be an array of rows");
    std::vector<std::vector<std::uint32_t>> m;
    for (const auto& r : rows) {
      if (!r.is_array()) malformed("matrix rows must be arrays");
      std::vector<std::uint32_t> row;
      for (const auto& v : r) row.push_back(small_unsigned(v, "matrix entry"));
      m.push_back(std::move(row));
    }
    return AdditiveMap::from_matrix(ring, m);
  }
  const json& opj = field(j, "op");
  if (!opj.is_string()) malformed("\"op\" must be a string");
  const std::string op = opj.get<std::string>();
  auto operands = [&] {
    const json& args = field(j, "args");
    if (!args.is_array() || args.empty()) malformed("\"args\" must be a nonempty array");
    std::vector<AdditiveMap> out;
    for (const auto& a : args) out.push_back(decode_additive_map(ring, a));
    return out;
  };
  if (op == "lmul") return AdditiveMap::left_mul(decode_element(ring, field(j, "c")));
  if (op == "rmul") return AdditiveMap::right_mul(decode_element(ring, field(j, "c")));
  if (op == "conj") return AdditiveMap::conjugation(ring);
  if (op == "sum") return AdditiveMap::sum(operands());
  if (op == "compose") return AdditiveMap::compose(operands());
  if (op == "zero") return AdditiveMap::zero(ring);
  if (op == "identity") return AdditiveMap::identity(ring);
  if (op == "frobenius") {
    const unsigned power = j.contains("power") ? small_unsigned(j.at("power"), "power") : 1;
    return AdditiveMap::frobenius(ring, power);
  }
  malformed("unknown additive map op \"" + op + "\"");
}

json encode(const Frame& f) {
  json sigma = json::array();
  for (std::size_t i = 0; i < f.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.n(); ++j) row.push_back(encode(f.sigma(i, j)));
    sigma.push_back(row);
  }
  json delta = json::array();
  for (std::size_t i = 0; i < f.n(); ++i) delta.push_back(encode(f.delta(i)));
  return {{"n", f.n()}, {"sigma", sigma}, {"delta", delta}};
}

Frame decode_frame_unchecked(const Ring& ring, const json& j) {
  const std::size_t n = small_unsigned(field(j, "n"), "n");
  if (n == 0) malformed("frames need n >= 1");
  if (!j.contains("sigma") && !j.contains("delta")) return Frame::conventional(ring, n);
  std::vector<AdditiveMap> sigma;
  if (j.contains("sigma")) {
    const json& rows = j.at("sigma");
    if (!rows.is_array() || rows.size() != n) malformed("sigma must have n rows");
    for (const auto& r : rows) {
      if (!r.is_array() || r.size() != n) malformed("sigma rows must have n entries");
      for (const auto& m : r) sigma.push_back(decode_additive_map(ring, m));
    }
  } else {
    const AdditiveMap id = AdditiveMap::identity(ring), zero = AdditiveMap::zero(ring);
    for (std::size_t i = 0; i < n * n; ++i) sigma.push_back(i % (n + 1) == 0 ? id : zero);
  }
  std::vector<AdditiveMap> delta;
  if (j.contains("delta")) {
    const json& ds = j.at("delta");
    if (!ds.is_array() || ds.size() != n) malformed("delta must have n entries");
    for (const auto& m : ds) delta.push_back(decode_additive_map(ring, m));
  } else {
    delta.assign(n, AdditiveMap::zero(ring));
  }
  return Frame::unchecked(ring, n, std::move(sigma), std::move(delta));
}

Frame decode_frame(const Ring& ring, const json& j) {
  Frame f = decode_frame_unchecked(ring, j);
  const auto report = validate_frame(f);
  if (!report.valid()) throw Error(ErrorCode::InvalidFrame, report.summary());
  return f;
}

json encode(const DRMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    entries.push_back(row);
  }
  json out = {{"entries", entries}};
  if (!m.row_labels.empty()) out["row_labels"] = m.row_labels;
  if (!m.col_labels.empty()) out["col_labels"] = m.col_labels;
  return out;
}

DRMatrix decode_matrix(const Ring& ring, const json& j) {
  const json& entries = j.is_array() ? j : field(j, "entries");
  if (!entries.is_array()) malformed("matrix entries must be an array of rows");
  std::vector<RowVector> rows;
  for (const auto& r : entries) {
    if (!r.is_array()) malformed("matrix rows must be arrays");
    RowVector row;
    for (const auto& e : r) row.push_back(decode_element(ring, e));
    rows.push_back(std::move(row));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) malformed("ragged matrix");
  }
  DRMatrix m = DRMatrix::from_rows(ring, rows);
  if (j.is_object()) {
    if (j.contains("row_labels")) m.row_labels = j.at("row_labels").get<std::vector<std::string>>();
    if (j.contains("col_labels")) m.col_labels = j.at("col_labels").get<std::vector<std::string>>();
  }
  return m;
}

}  // namespace skewpoly::json
