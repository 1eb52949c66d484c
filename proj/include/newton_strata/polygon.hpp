#pragma once

/**
 * @file polygon.hpp
 * @brief Slope tuples as concave polygons, with the two partial orders
 *        everything else is built on.
 *
 * A Polygon is a nonempty tuple of exact rationals, read as the piecewise
 * linear function on [0, len] through (0, 0) whose slope on [i−1, i] is the
 * i-th entry. A polygon is *dominant* when its slopes are non-increasing
 * (i.e. the function is concave); non-dominant tuples are legal values (they
 * arise from entrywise arithmetic) but carry an explicit flag and are
 * rejected by the operations that require dominance.
 */

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "newton_strata/errors.hpp"
#include "newton_strata/rational.hpp"

namespace newton_strata {

/// Interior lattice x-coordinate where the slope changes, with the polygon
/// height there. Endpoints are never breakpoints.
struct Breakpoint {
  std::size_t x;  // 1-based, in {1, …, len−1}
  Rat y;          // polygon height at x

  friend bool operator==(const Breakpoint& a, const Breakpoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

class Polygon {
 public:
  /// Throws EmptyPolygon: a polygon needs at least one slope.
  explicit Polygon(std::vector<Rat> slopes) : slopes_(std::move(slopes)) {
    if (slopes_.empty()) {
      throw DomainError(ErrorCode::EmptyPolygon,
                        "a polygon needs at least one slope");
    }
    dominant_ = true;
    for (std::size_t i = 1; i < slopes_.size(); ++i) {
      if (slopes_[i - 1] < slopes_[i]) {
        dominant_ = false;
        break;
      }
    }
  }

  static Polygon constant(std::size_t len, const Rat& value) {
    return Polygon(std::vector<Rat>(len, value));
  }

  static Polygon zero(std::size_t len) { return constant(len, Rat(0)); }

  std::size_t len() const { return slopes_.size(); }
  const std::vector<Rat>& slopes() const { return slopes_; }
  /// 0-based slope access; position p (1-based) is (*this)[p-1].
  const Rat& operator[](std::size_t i) const { return slopes_[i]; }
  bool is_dominant() const { return dominant_; }

  /// Entry j (0-based) is the height at x = j+1, i.e. Σ_{i ≤ j+1} slopes.
  std::vector<Rat> partial_sums() const {
    std::vector<Rat> sums;
    sums.reserve(len());
    Rat acc = 0;
    for (const Rat& s : slopes_) {
      acc += s;
      sums.push_back(acc);
    }
    return sums;
  }

  Rat total() const {
    Rat acc = 0;
    for (const Rat& s : slopes_) acc += s;
    return acc;
  }

  /// Height of the polygon at integer x ∈ [0, len] (0 at x = 0).
  Rat height_at(std::size_t x) const {
    if (x > len()) {
      throw DomainError(ErrorCode::DimensionMismatch,
                        "x out of range [0, len]");
    }
    Rat acc = 0;
    for (std::size_t i = 0; i < x; ++i) acc += slopes_[i];
    return acc;
  }

  /// True iff the polygon passes through a lattice point at x.
  bool has_integer_point_at(std::size_t x) const {
    return is_integer(height_at(x));
  }

  /// All interior x where the slope changes, with heights. Requires a
  /// dominant polygon: slope changes of non-concave tuples are not
  /// breakpoints in any meaningful sense here.
  std::vector<Breakpoint> breakpoints() const {
    require_dominant("breakpoints");
    std::vector<Breakpoint> out;
    Rat height = 0;
    for (std::size_t x = 1; x + 1 <= len(); ++x) {
      height += slopes_[x - 1];
      if (slopes_[x - 1] != slopes_[x]) {
        out.push_back(Breakpoint{x, height});
      }
    }
    return out;
  }

  /// x-coordinates of breakpoints only.
  std::vector<std::size_t> breakpoint_xs() const {
    std::vector<std::size_t> out;
    for (const Breakpoint& bp : breakpoints()) out.push_back(bp.x);
    return out;
  }

  /// Stable descending sort: the dominant representative of the tuple.
  Polygon sorted_dominant() const {
    std::vector<Rat> sorted = slopes_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Rat& a, const Rat& b) { return b < a; });
    return Polygon(std::move(sorted));
  }

  /// Reversed negation; for dominant input this is the dominant
  /// representative of the entrywise negation, and it is an involution.
  Polygon dual() const {
    require_dominant("dual");
    std::vector<Rat> out(len());
    for (std::size_t i = 0; i < len(); ++i) {
      out[i] = -slopes_[len() - 1 - i];
    }
    return Polygon(std::move(out));
  }

  /// Entrywise shift by a constant.
  Polygon shifted(const Rat& c) const {
    std::vector<Rat> out = slopes_;
    for (Rat& s : out) s += c;
    return Polygon(std::move(out));
  }

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.slopes_ == b.slopes_;
  }
  friend bool operator!=(const Polygon& a, const Polygon& b) {
    return !(a == b);
  }

  void require_dominant(const char* op) const {
    if (!dominant_) {
      throw DomainError(ErrorCode::NotDominant,
                        std::string(op) + " requires a dominant polygon");
    }
  }

 private:
  std::vector<Rat> slopes_;
  bool dominant_;
};

namespace detail {
inline void require_same_length(const Polygon& a, const Polygon& b,
                                const char* op) {
  if (a.len() != b.len()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      std::string(op) + ": polygon lengths differ (" +
                          std::to_string(a.len()) + " vs " +
                          std::to_string(b.len()) + ")");
  }
}
}  // namespace detail

/// Entrywise sum; the result may be non-dominant (flagged, not rejected).
inline Polygon add(const Polygon& a, const Polygon& b) {
  detail::require_same_length(a, b, "add");
  std::vector<Rat> out(a.len());
  for (std::size_t i = 0; i < a.len(); ++i) out[i] = a[i] + b[i];
  return Polygon(std::move(out));
}

inline Polygon negate(const Polygon& a) {
  std::vector<Rat> out(a.len());
  for (std::size_t i = 0; i < a.len(); ++i) out[i] = -a[i];
  return Polygon(std::move(out));
}

inline Polygon scale(const Polygon& a, const Rat& c) {
  std::vector<Rat> out(a.len());
  for (std::size_t i = 0; i < a.len(); ++i) out[i] = a[i] * c;
  return Polygon(std::move(out));
}

/// Policy for bruhat_leq when the right operand is non-dominant: the default
/// rejects; the documented opt-in replaces the right operand (only) by its
/// sorted dominant representative.
enum class RightOperandPolicy { Reject, SortIfNeeded };

/// Bruhat order: a ≤ b iff every partial sum of a is ≤ that of b, with
/// equality at the right endpoint ("lies below with the same endpoints").
/// Both operands must be dominant; see RightOperandPolicy for the only
/// relaxation.
inline bool bruhat_leq(const Polygon& a, const Polygon& b,
                       RightOperandPolicy policy = RightOperandPolicy::Reject) {
  detail::require_same_length(a, b, "bruhat_leq");
  a.require_dominant("bruhat_leq (left operand)");
  if (!b.is_dominant()) {
    if (policy == RightOperandPolicy::Reject) {
      b.require_dominant("bruhat_leq (right operand)");
    }
    return bruhat_leq(a, b.sorted_dominant(), RightOperandPolicy::Reject);
  }
  Rat sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.len(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return sa == sb;
}

/// Slopewise dominance: entrywise ≤. Defined for arbitrary tuples.
inline bool slopewise_leq(const Polygon& a, const Polygon& b) {
  detail::require_same_length(a, b, "slopewise_leq");
  for (std::size_t i = 0; i < a.len(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// The identity cocharacter of GSp_{2n}: (1, …, 1) of length 2n.
inline Polygon identity_cochar(std::size_t n) {
  if (n == 0) {
    throw DomainError(ErrorCode::InvalidRank, "rank n must be >= 1");
  }
  return Polygon::constant(2 * n, Rat(1));
}

/// The ordinary cocharacter of GSp_{2n}: (1^{(n)}, 0^{(n)}).
inline Polygon ordinary_cochar(std::size_t n) {
  if (n == 0) {
    throw DomainError(ErrorCode::InvalidRank, "rank n must be >= 1");
  }
  std::vector<Rat> slopes(2 * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) slopes[i] = 1;
  return Polygon(std::move(slopes));
}

}  // namespace newton_strata
