#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "skewpoly/algebra.hpp"

namespace skewpoly {

/// An affine point (a_1, ..., a_n) of F^n.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Element> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Element> coords) : coords_(coords) {}

  /// The origin of F^n.
  static Point zero(const Ring& ring, std::size_t n) { return Point(std::vector<Element>(n, ring.zero())); }

  std::size_t dimension() const { return coords_.size(); }
  const Element& operator[](std::size_t i) const { return coords_[i]; }
  Element& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Element>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool operator==(const Point&) const = default;

  std::string to_text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i > 0) out += ", ";
      out += coords_[i].to_text();
    }
    return out + ")";
  }

  std::size_t hash() const {
    std::size_t h = coords_.size();
    for (const auto& c : coords_) h = h * 1000003u ^ c.hash();
    return h;
  }

 private:
  std::vector<Element> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const { return p.hash(); }
};

}  // namespace skewpoly
