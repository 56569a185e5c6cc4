#include "skewpoly/geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace skewpoly {

PointSet::PointSet(std::vector<Point> points) {
  for (auto& p : points) push_back(p);
}

void PointSet::push_back(const Point& p) {
  if (!points_.empty() && p.dimension() != points_.front().dimension()) {
    throw Error(ErrorCode::InvalidInput, "point " + p.to_text() + " has the wrong dimension");
  }
  if (!index_.insert(p).second) throw Error(ErrorCode::DuplicatePoint, "point " + p.to_text() + " repeated");
  points_.push_back(p);
}

bool PointSet::same_set(const PointSet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(other.begin(), other.end(), [this](const Point& p) { return contains(p); });
}

std::size_t monomial_count(std::size_t n, std::size_t d) {
  std::size_t total = 0, layer = 1;
  for (std::size_t deg = 0; deg < d; ++deg) {
    total += layer;
    if (total > kMaxVandermondeEntries) return total;
    layer *= n;
  }
  return total;
}

RowVector vandermonde_column(const Point& b, std::size_t d, const Frame& frame) {
  if (b.dimension() != frame.n()) throw Error(ErrorCode::InvalidInput, "point dimension does not match the frame");
  const Ring& ring = frame.ring();
  const std::size_t n = frame.n();
  RowVector out;
  if (d == 0) return out;
  // Layer entries follow monomials_below: the child x_i w of the word at
  // position k sits at position k * n + i of the next layer.
  std::vector<Element> layer{ring.one()};
  out.push_back(ring.one());
  for (std::size_t deg = 1; deg < d; ++deg) {
    std::vector<Element> next;
    next.reserve(layer.size() * n);
    for (const auto& nw : layer) {
      const auto s = frame.apply_sigma(nw);
      const Point dl = frame.apply_delta(nw);
      for (std::size_t i = 0; i < n; ++i) {
        Element v = dl[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (!s[i * n + j].is_zero()) v += s[i * n + j] * b[j];
        }
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

DRMatrix vandermonde(const PointSet& points, std::size_t d, const Frame& frame) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "Vandermonde degree bound must be at least 1");
  const std::size_t rows = monomial_count(frame.n(), d);
  if (rows * std::max<std::size_t>(points.size(), 1) > kMaxVandermondeEntries) {
    throw Error(ErrorCode::InvalidInput, "Vandermonde matrix too large (" + std::to_string(rows) + " rows)");
  }
  DRMatrix v(frame.ring(), rows, points.size());
  for (std::size_t c = 0; c < points.size(); ++c) {
    const RowVector col = vandermonde_column(points[c], d, frame);
    for (std::size_t r = 0; r < rows; ++r) v(r, c) = col[r];
    v.col_labels.push_back(points[c].to_text());
  }
  for (const auto& m : monomials_below(frame.n(), d)) v.row_labels.push_back(m.to_text());
  return v;
}

ClosureTester::ClosureTester(const PointSet& basis, const Frame& frame)
    : frame_(frame), rows_(basis.size() + 1), span_(frame.ring()) {
  // Separators of degree <= #B suffice, so V(B, #B + 1) carries every
  // polynomial needed to decide membership.
  if (monomial_count(frame.n(), rows_) * (basis.size() + 1) > kMaxVandermondeEntries) {
    throw Error(ErrorCode::InvalidInput, "Vandermonde matrix too large for the closure test");
  }
  for (const auto& p : basis) span_.add(vandermonde_column(p, rows_, frame));
}

bool ClosureTester::contains(const Point& b) const { return span_.contains(vandermonde_column(b, rows_, frame_)); }

bool in_closure(const Point& b, const PointSet& basis, const Frame& frame) {
  if (basis.contains(b)) return true;
  return ClosureTester(basis, frame).contains(b);
}

bool is_p_independent_from(const Point& b, const PointSet& basis, const Frame& frame) {
  if (basis.contains(b)) throw Error(ErrorCode::DuplicatePoint, "point " + b.to_text() + " already in the set");
  const std::size_t d = basis.size() + 1;
  PointSet extended = basis;
  extended.push_back(b);
  return rank(vandermonde(extended, d, frame)) == rank(vandermonde(basis, d, frame)) + 1;
}

PBasisResult find_p_basis(const PointSet& g, const Frame& frame) {
  PointSet kept, discarded;
  for (const auto& p : g) {
    if (ClosureTester(kept, frame).contains(p)) {
      discarded.push_back(p);
    } else {
      kept.push_back(p);
    }
  }
  DRMatrix v = vandermonde(kept, std::max<std::size_t>(kept.size(), 1), frame);
  return PBasisResult{kept, kept.size(), std::move(v), discarded};
}

namespace {

inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 22;

std::vector<Point> all_points(const Frame& frame) {
  const Ring& ring = frame.ring();
  if (!ring.is_finite()) throw Error(ErrorCode::NotFinite, "enumeration of F^n needs a finite field");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < frame.n(); ++i) {
    total *= ring.order();
    if (total > kMaxEnumeration) throw Error(ErrorCode::InvalidInput, "F^n too large to enumerate");
  }
  const auto elements = ring.enumerate();
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::size_t> digit(frame.n(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Element> coords;
    for (std::size_t i = 0; i < frame.n(); ++i) coords.push_back(elements[digit[i]]);
    out.emplace_back(std::move(coords));
    for (std::size_t i = frame.n(); i-- > 0;) {
      if (++digit[i] < elements.size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

}  // namespace

PointSet closure_members(const PointSet& g, const Frame& frame) {
  if (!frame.ring().is_finite()) throw Error(ErrorCode::NotFinite, "closure enumeration needs a finite field");
  const auto universe = all_points(frame);
  const ClosureTester tester(find_p_basis(g, frame).basis, frame);
  PointSet out;
  for (const auto& p : universe) {
    if (tester.contains(p)) out.push_back(p);
  }
  return out;
}

std::size_t rank_of(const PointSet& g, const Frame& frame) {
  if (g.empty()) return 0;
  return rank(vandermonde(g, g.size(), frame));
}

bool is_two_sided(const PointSet& g, const Frame& frame) {
  const Ring& ring = frame.ring();
  if (!ring.is_finite()) throw Error(ErrorCode::NotFinite, "two-sidedness is only decidable over finite fields");
  const ClosureTester tester(find_p_basis(g, frame).basis, frame);
  const auto elements = ring.enumerate();
  for (const auto& a : g) {
    for (const auto& c : elements) {
      if (c.is_zero()) continue;
      if (!tester.contains(conjugate(a, c, frame))) return false;
    }
  }
  return true;
}

bool is_p_independent_set(const PointSet& s, const Frame& frame) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    PointSet others;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i) others.push_back(s[j]);
    }
    if (ClosureTester(others, frame).contains(s[i])) return false;
  }
  return true;
}

MatroidReport matroid_check(const PointSet& g, const Frame& frame) {
  if (g.size() > kMatroidMaxPoints) {
    throw Error(ErrorCode::InvalidInput, "matroid check is exhaustive and limited to " +
                                             std::to_string(kMatroidMaxPoints) + " points");
  }
  MatroidReport report;
  const std::size_t m = g.size();
  const std::uint32_t full = (1u << m) - 1u;
  auto subset = [&](std::uint32_t mask) {
    PointSet s;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) s.push_back(g[i]);
    }
    return s;
  };
  auto describe = [&](std::uint32_t mask) {
    std::string out = "{";
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) out += (out.size() > 1 ? ", " : "") + g[i].to_text();
    }
    return out + "}";
  };

  std::vector<bool> independent(full + 1u, false);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const PointSet s = subset(mask);
    independent[mask] = is_p_independent_set(s, frame);
    ++report.subsets_checked;
    if (independent[mask]) ++report.independent_sets;
    if (independent[mask] != (rank_of(s, frame) == s.size())) {
      report.violations.push_back("rank of V(S, #S) disagrees with set independence for " + describe(mask));
    }
  }

  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!independent[mask]) continue;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i & 1u) && !independent[mask & ~(1u << i)]) {
        report.violations.push_back("hereditary property fails: " + describe(mask) + " independent but " +
                                    describe(mask & ~(1u << i)) + " is not");
      }
    }
  }

  for (std::uint32_t small = 0; small <= full; ++small) {
    if (!independent[small]) continue;
    for (std::uint32_t large = 0; large <= full; ++large) {
      if (!independent[large] || std::popcount(large) <= std::popcount(small)) continue;
      bool augmentable = false;
      for (std::size_t i = 0; i < m && !augmentable; ++i) {
        if ((large >> i & 1u) && !(small >> i & 1u) && independent[small | 1u << i]) augmentable = true;
      }
      if (!augmentable) {
        report.violations.push_back("exchange property fails for " + describe(small) + " and " + describe(large));
      }
    }
  }

  std::optional<int> basis_size;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!independent[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < m && maximal; ++i) {
      if (!(mask >> i & 1u) && independent[mask | 1u << i]) maximal = false;
    }
    if (!maximal) continue;
    const int size = std::popcount(mask);
    if (!basis_size) {
      basis_size = size;
    } else if (*basis_size != size) {
      report.violations.push_back("bases of different sizes: " + describe(mask) + " has " + std::to_string(size) +
                                  " elements, another has " + std::to_string(*basis_size));
    }
  }
  report.rank = basis_size.value_or(0);
  return report;
}

ComplementResult complementary_p_basis(const PointSet& b, const PointSet& ambient, const Frame& frame) {
  if (!is_p_independent_set(b, frame)) throw Error(ErrorCode::InvalidInput, "base set is not P-independent");
  const PBasisResult amb = find_p_basis(ambient, frame);
  const ClosureTester ambient_closure(amb.basis, frame);
  for (const auto& p : b) {
    if (!ambient_closure.contains(p)) {
      throw Error(ErrorCode::InvalidInput, "point " + p.to_text() + " is outside the closure of the ambient set");
    }
  }
  ComplementResult out;
  PointSet kept = b;
  for (const auto& p : ambient) {
    if (kept.contains(p)) continue;
    if (ClosureTester(kept, frame).contains(p)) continue;
    kept.push_back(p);
    out.complement.push_back(p);
  }
  out.rank_ambient = amb.rank;
  out.rank_base = b.size();
  out.rank_complement = out.complement.size();
  return out;
}

}  // namespace skewpoly
