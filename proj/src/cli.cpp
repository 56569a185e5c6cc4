#include "skewpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "skewpoly/evaluation.hpp"
#include "skewpoly/geometry.hpp"
#include "skewpoly/interpolation.hpp"
#include "skewpoly/json_io.hpp"

namespace skewpoly::cli {

namespace {

using nlohmann::json;
namespace sj = skewpoly::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

struct Options {
  std::string verb;
  std::string job_path;
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::string method = "newton";
  std::string pivots = "low";
};

// Ring, frame and the named objects a job may refer to with {"ref": name}.
class Workspace {
 public:
  Workspace(const json& job, bool validate_frame) : ring_(Ring::make(sj::decode_ring_spec(field(job, "ring")))) {
    if (job.contains("frame")) {
      frame_.emplace(validate_frame ? sj::decode_frame(ring_, job.at("frame"))
                                    : sj::decode_frame_unchecked(ring_, job.at("frame")));
    }
    if (job.contains("point_sets")) {
      for (const auto& [name, value] : job.at("point_sets").items()) {
        point_sets_.emplace(name, sj::decode_point_set(ring_, value));
      }
    }
    if (job.contains("polynomials")) {
      for (const auto& [name, value] : job.at("polynomials").items()) {
        polynomials_.emplace(name, sj::decode_polynomial(ring_, value));
      }
    }
  }

  static const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) malformed(std::string("job is missing \"") + name + "\"");
    return j.at(name);
  }

  const Ring& ring() const { return ring_; }
  const Frame& frame() const {
    if (!frame_) malformed("job is missing \"frame\"");
    return *frame_;
  }

  PointSet points(const json& j) const {
    if (auto name = reference(j)) {
      auto it = point_sets_.find(*name);
      if (it == point_sets_.end()) malformed("unknown point set \"" + *name + "\"");
      return it->second;
    }
    return sj::decode_point_set(ring_, j);
  }

  SkewPolynomial polynomial(const json& j) const {
    if (auto name = reference(j)) {
      auto it = polynomials_.find(*name);
      if (it == polynomials_.end()) malformed("unknown polynomial \"" + *name + "\"");
      return it->second;
    }
    return sj::decode_polynomial(ring_, j);
  }

  Point point(const json& j) const {
    Point p = sj::decode_point(ring_, j);
    if (frame_ && p.dimension() != frame_->n()) malformed("point dimension does not match the frame");
    return p;
  }

 private:
  static std::optional<std::string> reference(const json& j) {
    if (j.is_object() && j.contains("ref") && j.at("ref").is_string()) return j.at("ref").get<std::string>();
    return std::nullopt;
  }

  Ring ring_;
  std::optional<Frame> frame_;
  std::map<std::string, PointSet> point_sets_;
  std::map<std::string, SkewPolynomial> polynomials_;
};

class Encoder {
 public:
  explicit Encoder(bool text) : text_(text) {}
  json poly(const SkewPolynomial& f) const { return text_ ? json(f.to_text()) : sj::encode(f); }
  json polys(const std::vector<SkewPolynomial>& fs) const {
    json out = json::array();
    for (const auto& f : fs) out.push_back(poly(f));
    return out;
  }

 private:
  bool text_;
};

json degree_json(const Degree& d) { return d.is_bottom() ? json("BOTTOM") : json(d.value()); }

json report_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json item = {{"identity", v.identity}, {"reason", v.reason}, {"occurrences", v.occurrences}};
    if (v.a) item["a"] = sj::encode(*v.a);
    if (v.b) item["b"] = sj::encode(*v.b);
    violations.push_back(item);
  }
  return {{"valid", r.valid()},
          {"pairs_checked", r.pairs_checked},
          {"exhaustive", r.exhaustive},
          {"violations", violations}};
}

std::vector<Element> values_of(const Workspace& ws, const json& j) {
  if (!j.is_array()) malformed("\"values\" must be an array");
  std::vector<Element> out;
  for (const auto& v : j) out.push_back(sj::decode_element(ws.ring(), v));
  return out;
}

struct Outcome {
  int code;
  json body;
};

Outcome dispatch(const Options& opt, const json& job) {
  const Encoder enc(opt.format == "text");
  const std::string& verb = opt.verb;
  const auto& field = Workspace::field;

  if (verb == "validate-frame") {
    const Workspace ws(job, false);
    const ValidationReport report = validate_frame(ws.frame(), opt.seed);
    json body = report_json(report);
    if (report.valid()) return {kOk, body};
    body["error"] = std::string(error_name(ErrorCode::InvalidFrame));
    body["message"] = report.summary();
    return {kDomainError, body};
  }

  const Workspace ws(job, true);
  const Frame& frame = ws.frame();

  if (verb == "mul") {
    const SkewPolynomial f = ws.polynomial(field(job, "f"));
    const SkewPolynomial g = ws.polynomial(field(job, "g"));
    const SkewPolynomial fg = mul(f, g, frame);
    return {kOk, {{"product", enc.poly(fg)}, {"degree", degree_json(fg.degree())}}};
  }
  if (verb == "divide") {
    const Point a = ws.point(field(job, "point"));
    const DivisionResult d = divide(ws.polynomial(field(job, "f")), a, frame);
    return {kOk, {{"quotients", enc.polys(d.quotients)}, {"remainder", sj::encode(d.remainder)}}};
  }
  if (verb == "eval") {
    const SkewPolynomial f = ws.polynomial(field(job, "f"));
    if (job.contains("points")) {
      json values = json::array();
      for (const auto& p : ws.points(job.at("points"))) values.push_back(sj::encode(evaluate(f, p, frame)));
      return {kOk, {{"values", values}}};
    }
    return {kOk, {{"value", sj::encode(evaluate(f, ws.point(field(job, "point")), frame))}}};
  }
  if (verb == "norm") {
    const Monomial m = sj::decode_monomial(field(job, "monomial"));
    if (m.degree() > 0 && *std::max_element(m.word().begin(), m.word().end()) >= frame.n()) {
      throw Error(ErrorCode::InvalidInput, "monomial uses a variable outside the frame");
    }
    return {kOk, {{"value", sj::encode(fundamental(m, ws.point(field(job, "point")), frame))}}};
  }
  if (verb == "conjugate") {
    const Point a = ws.point(field(job, "point"));
    const Element c = sj::decode_element(ws.ring(), field(job, "c"));
    return {kOk, {{"point", sj::encode(conjugate(a, c, frame))}}};
  }
  if (verb == "vandermonde") {
    const PointSet pts = ws.points(field(job, "points"));
    const json& dj = field(job, "d");
    if (!dj.is_number_unsigned()) malformed("\"d\" must be a positive integer");
    const DRMatrix v = vandermonde(pts, dj.get<std::size_t>(), frame);
    return {kOk, {{"matrix", sj::encode(v)}, {"rank", rank(v)}}};
  }
  if (verb == "rank") {
    return {kOk, {{"rank", rank_of(ws.points(field(job, "points")), frame)}}};
  }
  if (verb == "pbasis") {
    const PBasisResult r = find_p_basis(ws.points(field(job, "points")), frame);
    return {kOk,
            {{"basis", sj::encode(r.basis)},
             {"rank", r.rank},
             {"discarded", sj::encode(r.discarded)},
             {"vandermonde", sj::encode(r.vandermonde)}}};
  }
  if (verb == "closure") {
    const PointSet c = closure_members(ws.points(field(job, "points")), frame);
    return {kOk, {{"closure", sj::encode(c)}, {"size", c.size()}}};
  }
  if (verb == "two-sided") {
    return {kOk, {{"two_sided", is_two_sided(ws.points(field(job, "points")), frame)}}};
  }
  if (verb == "matroid-check") {
    const MatroidReport r = matroid_check(ws.points(field(job, "points")), frame);
    return {kOk,
            {{"matroid", r.ok()},
             {"subsets_checked", r.subsets_checked},
             {"independent_sets", r.independent_sets},
             {"rank", r.rank},
             {"violations", r.violations}}};
  }
  if (verb == "interpolate") {
    const PointSet pts = ws.points(field(job, "points"));
    const auto values = values_of(ws, field(job, "values"));
    SkewPolynomial f(ws.ring());
    if (opt.method == "newton") {
      f = lagrange_interpolate(pts, values, frame);
    } else {
      f = lagrange_via_vandermonde(pts, values, frame);
    }
    return {kOk, {{"polynomial", enc.poly(f)}, {"method", opt.method}, {"degree", degree_json(f.degree())}}};
  }
  if (verb == "dual-basis") {
    const auto pref = opt.pivots == "high" ? PivotPreference::HighMonomials : PivotPreference::LowMonomials;
    const DualPBasis d = dual_p_basis(ws.points(field(job, "points")), frame, pref);
    json monomials = json::array();
    for (const auto& m : d.monomials) monomials.push_back(sj::encode(m));
    return {kOk, {{"basis", sj::encode(d.basis)}, {"duals", enc.polys(d.duals)}, {"monomials", monomials}}};
  }
  if (verb == "reduce") {
    const SkewPolynomial f = ws.polynomial(field(job, "f"));
    const PBasisResult basis = find_p_basis(ws.points(field(job, "points")), frame);
    const DualPBasis d = dual_p_basis(basis.basis, frame);
    const QuotientElement q = reduce_mod_ideal(f, d, frame);
    json coords = json::array();
    for (const auto& c : q.coordinates) coords.push_back(sj::encode(c));
    return {kOk,
            {{"basis", sj::encode(d.basis)},
             {"coordinates", coords},
             {"representative", enc.poly(representative(q, d, frame))}}};
  }
  malformed("unknown verb \"" + verb + "\"");
}

json read_job(const Options& opt, std::istream& in) {
  std::stringstream buffer;
  if (!opt.job_path.empty()) {
    std::ifstream file(opt.job_path);
    if (!file) malformed("cannot read job file " + opt.job_path);
    buffer << file.rdbuf();
  } else {
    buffer << in.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    malformed(std::string("job is not valid JSON: ") + e.what());
  }
}

json error_body(std::string_view name, const std::string& message) {
  return {{"error", std::string(name)}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  Options opt;
  CLI::App app{"Exact free skew polynomial rings over division rings", "skewpoly"};
  app.add_option("verb", opt.verb, "one of: validate-frame, mul, divide, eval, norm, conjugate, vandermonde, rank, "
                                   "pbasis, closure, two-sided, matroid-check, interpolate, dual-basis, reduce, "
                                   "selftest")
      ->required();
  app.add_option("--job", opt.job_path, "job file (default: standard input)");
  app.add_option("--format", opt.format, "polynomial rendering")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--method", opt.method, "interpolation path")->check(CLI::IsMember({"newton", "vandermonde"}));
  app.add_option("--pivots", opt.pivots, "dual basis monomial preference")->check(CLI::IsMember({"low", "high"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_body(error_name(ErrorCode::MalformedInput), e.what()).dump(2) << "\n";
    return kMalformed;
  }

  try {
    if (opt.verb == "selftest") {
      const auto cases = selftest();
      json items = json::array();
      std::size_t passed = 0;
      for (const auto& c : cases) {
        passed += c.passed ? 1 : 0;
        json item = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        items.push_back(item);
      }
      out << json{{"passed", passed}, {"failed", cases.size() - passed}, {"cases", items}}.dump(2) << "\n";
      return passed == cases.size() ? kOk : kDomainError;
    }
    const json job = read_job(opt, in);
    const Outcome result = dispatch(opt, job);
    out << result.body.dump(2) << "\n";
    return result.code;
  } catch (const Error& e) {
    const std::string message = e.what();
    const std::string prefix = std::string(e.name()) + ": ";
    out << error_body(e.name(), message.rfind(prefix, 0) == 0 ? message.substr(prefix.size()) : message).dump(2)
        << "\n";
    return e.code() == ErrorCode::MalformedInput ? kMalformed : kDomainError;
  } catch (const nlohmann::json::exception& e) {
    out << error_body(error_name(ErrorCode::MalformedInput), e.what()).dump(2) << "\n";
    return kMalformed;
  }
}

// ---------------------------------------------------------------------------

std::vector<SelftestCase> selftest() {
  std::vector<SelftestCase> cases;
  auto check = [&cases](const std::string& name, const std::function<bool()>& body) {
    try {
      cases.push_back({name, body(), ""});
    } catch (const std::exception& e) {
      cases.push_back({name, false, e.what()});
    }
  };

  const Ring gf2 = Ring::prime_field(2);
  const Ring gf3 = Ring::prime_field(3);
  const Ring gf4 = Ring::extension_field(2, 2);
  const Ring gf5 = Ring::prime_field(5);
  const Ring h = Ring::quaternions();
  const Element w = gf4.from_code(2);  // a root of t^2 + t + 1

  check("evaluation of x1.x2 at (a1, a2) is a2 a1", [&] {
    const Frame f = Frame::conventional(gf5, 2);
    const Point a{gf5.from_int(2), gf5.from_int(3)};
    return evaluate(SkewPolynomial::parse(gf5, "x1.x2"), a, f) == gf5.from_int(1) &&
           divide(SkewPolynomial::parse(gf5, "x1.x2"), a, f).remainder == gf5.from_int(1);
  });
  check("N_1 = 1 and N_x1.x2 = a2 a1 over the quaternions", [&] {
    const Frame f = Frame::conventional(h, 2);
    const Point a{h.quaternion(0, 1, 0, 0), h.quaternion(0, 0, 1, 0)};
    return fundamental(Monomial(), a, f).is_one() &&
           fundamental(Monomial::parse("x1.x2"), a, f) == h.quaternion(0, 0, 0, -1);
  });
  check("N_{x^i}(a) = sigma^{i-1}(a)...sigma(a)a over GF(4) with Frobenius", [&] {
    const Frame f = make_diagonal_frame(gf4, {AdditiveMap::frobenius(gf4)}, {AdditiveMap::zero(gf4)});
    for (const auto& a : gf4.enumerate()) {
      Element expected = gf4.one(), power = a;
      for (std::size_t i = 1; i <= 6; ++i) {
        expected = power * expected;
        power = f.sigma(0, 0)(power);
        if (!(fundamental(Monomial(std::vector<std::uint16_t>(i, 0)), Point{a}, f) == expected)) return false;
      }
    }
    return true;
  });
  check("products of monomials are concatenations", [&] {
    const Frame f = make_diagonal_frame(gf4, {AdditiveMap::frobenius(gf4), AdditiveMap::frobenius(gf4)},
                                        {AdditiveMap::zero(gf4), AdditiveMap::zero(gf4)});
    const auto m = Monomial::parse("x2.x1"), n = Monomial::parse("x1.x2.x2");
    return mul(SkewPolynomial::monomial(gf4, m), SkewPolynomial::monomial(gf4, n), f) ==
           SkewPolynomial::monomial(gf4, m * n);
  });
  check("deg(0) is the BOTTOM sentinel", [&] { return SkewPolynomial(gf2).degree().is_bottom(); });
  check("conjugation by 1 is the identity", [&] {
    const Frame f = make_inner_frame(h, 1, {AdditiveMap::identity(h)}, Point{h.quaternion(0, 1, 0, 0)});
    const Point a{h.quaternion(1, 2, 3, 4)};
    return conjugate(a, h.one(), f) == a;
  });
  check("G(a) = 0 forces (FG)(a) = 0", [&] {
    const Frame f = Frame::conventional(h, 1);
    const Point a{h.quaternion(0, 1, 0, 0)};
    const SkewPolynomial g = SkewPolynomial::parse(h, "x1 + (-i)");
    return check_product_rule(SkewPolynomial::parse(h, "j*x1 + k"), g, a, f).holds &&
           evaluate(mul(SkewPolynomial::parse(h, "j*x1 + k"), g, f), a, f).is_zero();
  });
  check("closure of the empty set is empty", [&] {
    return closure_members(PointSet(), Frame::conventional(gf3, 2)).empty();
  });
  check("Rk(F^n) = q^n for GF(2)^2 and GF(3)^2", [&] {
    for (const Ring& r : {gf2, gf3}) {
      const Frame f = Frame::conventional(r, 2);
      const PointSet all = closure_members(PointSet{Point::zero(r, 2)}, f);
      PointSet everything;
      for (const auto& a : r.enumerate()) {
        for (const auto& b : r.enumerate()) everything.push_back(Point{a, b});
      }
      if (rank_of(everything, f) != everything.size()) return false;
      if (all.size() != 1) return false;
    }
    return true;
  });
  check("x_i^q - x_i vanishes on GF(3)^2", [&] {
    const Frame f = Frame::conventional(gf3, 2);
    const SkewPolynomial p = SkewPolynomial::parse(gf3, "x2.x2.x2 + 2*x2");
    for (const auto& a : gf3.enumerate()) {
      for (const auto& b : gf3.enumerate()) {
        if (!evaluate(p, Point{a, b}, f).is_zero()) return false;
      }
    }
    return true;
  });
  check("I(F^n) is two-sided for a Frobenius frame over GF(4)", [&] {
    const Frame f = make_diagonal_frame(gf4, {AdditiveMap::frobenius(gf4)}, {AdditiveMap::zero(gf4)});
    PointSet all;
    for (const auto& a : gf4.enumerate()) all.push_back(Point{a});
    return is_two_sided(all, f);
  });
  check("x^2 = x in GF(2)[x] / I(GF(2))", [&] {
    const Frame f = Frame::conventional(gf2, 1);
    const DualPBasis d = dual_p_basis(PointSet{Point{gf2.zero()}, Point{gf2.one()}}, f);
    const auto x = reduce_mod_ideal(SkewPolynomial::parse(gf2, "x1"), d, f);
    return quotient_mul(x, x, d, f) == x;
  });
  check("Lagrange interpolation with one point is constant", [&] {
    const Frame f = Frame::conventional(gf5, 2);
    const SkewPolynomial p = lagrange_interpolate(PointSet{Point{gf5.from_int(1), gf5.from_int(4)}},
                                                  {gf5.from_int(3)}, f);
    return p == SkewPolynomial::constant(gf5.from_int(3));
  });
  check("dual P-basis evaluates to the identity", [&] {
    const Frame f = make_diagonal_frame(gf4, {AdditiveMap::frobenius(gf4), AdditiveMap::frobenius(gf4)},
                                        {AdditiveMap::zero(gf4), AdditiveMap::zero(gf4)});
    const PointSet b{Point{w, gf4.one()}, Point{gf4.one(), gf4.zero()}, Point{gf4.zero(), w}};
    const PointSet basis = find_p_basis(b, f).basis;
    const DualPBasis d = dual_p_basis(basis, f);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Element v = evaluate(d.duals[i], basis[j], f);
        if (!(i == j ? v.is_one() : v.is_zero())) return false;
      }
    }
    return true;
  });
  return cases;
}

}  // namespace skewpoly::cli
