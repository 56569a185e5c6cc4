#pragma once

// JSON wire format for rings, elements, points, polynomials, frames and
// matrices. Structural problems in the input raise MalformedInput.

#include <json.hpp>

#include "skewpoly/frame.hpp"
#include "skewpoly/geometry.hpp"
#include "skewpoly/linalg.hpp"
#include "skewpoly/skewring.hpp"

namespace skewpoly::json {

using nlohmann::json;

json encode(const RingSpec& spec);
RingSpec decode_ring_spec(const json& j);

/// GF(p): integer. GF(p^k): array of k coefficients c_0..c_{k-1}.
/// Quaternions: four "num/den" strings (w, x, y, z). The text forms of
/// Element::to_text are accepted on input as well.
json encode(const Element& e);
Element decode_element(const Ring& ring, const json& j);

json encode(const Point& p);
Point decode_point(const Ring& ring, const json& j);

json encode(const PointSet& s);
PointSet decode_point_set(const Ring& ring, const json& j);

/// [{"monomial": [1, 2, 1], "coeff": ...}]; 1-based variable indices.
json encode(const SkewPolynomial& f);
/// Accepts the term array or a text string.
SkewPolynomial decode_polynomial(const Ring& ring, const json& j);

json encode(const Monomial& m);
Monomial decode_monomial(const json& j);

/// Finite fields: {"matrix": rows}. Quaternions: {"op": "lmul" | "rmul" |
/// "conj" | "sum" | "compose", "c": element, "args": [...]}. On input "zero",
/// "identity" and, over finite fields, {"op": "frobenius", "power": e} are
/// accepted too.
json encode(const AdditiveMap& m);
AdditiveMap decode_additive_map(const Ring& ring, const json& j);

/// {"n", "sigma": [[map]], "delta": [map]}; with "sigma" and "delta" absent
/// the conventional frame in n variables.
json encode(const Frame& f);
Frame decode_frame_unchecked(const Ring& ring, const json& j);
Frame decode_frame(const Ring& ring, const json& j);

/// {"entries": [[...]], "row_labels": [...], "col_labels": [...]}.
json encode(const DRMatrix& m);
DRMatrix decode_matrix(const Ring& ring, const json& j);

}  // namespace skewpoly::json
