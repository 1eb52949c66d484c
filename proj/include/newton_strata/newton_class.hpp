#pragma once

/**
 * @file newton_class.hpp
 * @brief Validated Newton classes for GL_n and GSp_{2n}, Kottwitz points,
 *        basicness, and bounded enumeration of symplectic classes.
 *
 * A class is represented by its Newton polygon alone (the Newton map is
 * injective for both families); the Kottwitz point is derived on demand, so
 * the two can never desynchronize.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "newton_strata/errors.hpp"
#include "newton_strata/polygon.hpp"
#include "newton_strata/rational.hpp"

namespace newton_strata {

enum class GroupFamily { GL, GSp };

inline const char* group_family_name(GroupFamily family) {
  return family == GroupFamily::GL ? "GL" : "GSp";
}

/// GL_n or GSp_{2n}; `n` is the rank parameter, so the attached polygon
/// length is n for GL and 2n for GSp.
struct GroupTag {
  GroupFamily family;
  std::size_t n;

  std::size_t polygon_length() const {
    return family == GroupFamily::GL ? n : 2 * n;
  }

  friend bool operator==(const GroupTag& a, const GroupTag& b) {
    return a.family == b.family && a.n == b.n;
  }
};

/// First violated validity condition, with its 1-based position payload where
/// one applies (x-coordinate for NonIntegerBreakpoint, pair index for
/// SymmetryViolation).
struct ValidationIssue {
  ErrorCode code;
  std::optional<std::size_t> position;
  std::string message;
};

class NewtonClass {
 public:
  /// Checks the membership conditions and returns the first violation, or
  /// nullopt when (group, nu) is a valid class:
  ///   - both families: dominant, integer heights at every breakpoint;
  ///   - GL: integer total (the Kottwitz point is an integer);
  ///   - GSp: λ_i + λ_{2n+1−i} equal to one constant c for all pairs, c ∈ ℤ.
  static std::optional<ValidationIssue> check(const GroupTag& group,
                                              const Polygon& nu) {
    if (group.n == 0) {
      return ValidationIssue{ErrorCode::InvalidRank, std::nullopt,
                             "rank n must be >= 1"};
    }
    if (nu.len() != group.polygon_length()) {
      return ValidationIssue{
          ErrorCode::DimensionMismatch, std::nullopt,
          std::string("polygon length ") + std::to_string(nu.len()) +
              " does not match " + group_family_name(group.family) +
              " rank parameter " + std::to_string(group.n)};
    }
    if (!nu.is_dominant()) {
      return ValidationIssue{ErrorCode::NotDominant, std::nullopt,
                             "slopes must be non-increasing"};
    }
    for (const Breakpoint& bp : nu.breakpoints()) {
      if (!is_integer(bp.y)) {
        return ValidationIssue{
            ErrorCode::NonIntegerBreakpoint, bp.x,
            "non-integer height " + format_rational(bp.y) +
                " at breakpoint x=" + std::to_string(bp.x)};
      }
    }
    if (group.family == GroupFamily::GSp) {
      const std::size_t two_n = nu.len();
      const Rat c = nu[0] + nu[two_n - 1];
      for (std::size_t i = 2; i <= group.n; ++i) {
        if (nu[i - 1] + nu[two_n - i] != c) {
          return ValidationIssue{
              ErrorCode::SymmetryViolation, i,
              "pair sum at i=" + std::to_string(i) + " is " +
                  format_rational(nu[i - 1] + nu[two_n - i]) +
                  ", expected the constant " + format_rational(c)};
        }
      }
      if (!is_integer(c)) {
        return ValidationIssue{
            ErrorCode::NonIntegralSymmetryConstant, std::nullopt,
            "symmetry constant " + format_rational(c) + " is not an integer"};
      }
    } else {
      if (!is_integer(nu.total())) {
        return ValidationIssue{
            ErrorCode::NonIntegerTotal, std::nullopt,
            "total slope " + format_rational(nu.total()) +
                " is not an integer"};
      }
    }
    return std::nullopt;
  }

  /// Throws DomainError carrying the first violated condition.
  NewtonClass(GroupTag group, Polygon nu)
      : group_(group), nu_(std::move(nu)) {
    if (auto issue = check(group_, nu_)) {
      throw DomainError(issue->code, issue->message, issue->position);
    }
  }

  const GroupTag& group() const { return group_; }
  const Polygon& nu() const { return nu_; }
  std::size_t n() const { return group_.n; }
  std::size_t length() const { return nu_.len(); }

  friend bool operator==(const NewtonClass& a, const NewtonClass& b) {
    return a.group_ == b.group_ && a.nu_ == b.nu_;
  }
  friend bool operator!=(const NewtonClass& a, const NewtonClass& b) {
    return !(a == b);
  }

 private:
  GroupTag group_;
  Polygon nu_;
};

/// Symmetry constant c = λ_i + λ_{2n+1−i} of a valid GSp class.
inline Rat symmetry_constant(const NewtonClass& b) {
  if (b.group().family != GroupFamily::GSp) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "symmetry constant is defined for GSp classes only");
  }
  return b.nu()[0] + b.nu()[b.length() - 1];
}

/// Kottwitz point: for GL the slope total; for GSp the similitude constant
/// (1/n)·Σ slopes, which for a valid class equals the symmetry constant.
inline Rat kottwitz(const NewtonClass& b) {
  Rat total = b.nu().total();
  if (b.group().family == GroupFamily::GL) return total;
  return total / Rat(b.n());
}

/// A class is basic iff its polygon is a line segment (all slopes equal).
inline bool is_basic(const NewtonClass& b) {
  const std::vector<Rat>& s = b.nu().slopes();
  return std::all_of(s.begin(), s.end(),
                     [&](const Rat& v) { return v == s.front(); });
}

/// Re-tags a GSp_{2n} class as a GL_{2n} class (same polygon). GSp validity
/// is strictly stronger, so this never fails for valid input.
inline NewtonClass embed_gsp_to_gl(const NewtonClass& b) {
  if (b.group().family != GroupFamily::GSp) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "embed_gsp_to_gl takes a GSp class");
  }
  return NewtonClass(GroupTag{GroupFamily::GL, b.length()}, b.nu());
}

/// Options for bounded enumeration. `max_candidates` caps the number of
/// classes produced; exceeding it aborts with CandidateLimitError carrying
/// the partial (sorted) results.
struct EnumerateOptions {
  std::optional<std::size_t> max_candidates;
};

class CandidateLimitError : public DomainError {
 public:
  CandidateLimitError(std::size_t limit, std::vector<NewtonClass> partial)
      : DomainError(ErrorCode::CandidateLimitExceeded,
                    "enumeration exceeded the candidate cap of " +
                        std::to_string(limit)),
        limit_(limit),
        partial_(std::move(partial)) {}

  std::size_t limit() const { return limit_; }
  const std::vector<NewtonClass>& partial() const { return partial_; }

 private:
  std::size_t limit_;
  std::vector<NewtonClass> partial_;
};

namespace detail {

/// Smallest integer y with y ≥ bound (strict=false) or y > bound (strict).
inline Int int_at_least(const Rat& bound, bool strict) {
  if (strict) return rat_floor(bound) + 1;
  return rat_ceil(bound);
}

/// Largest integer y with y ≤ bound (strict=false) or y < bound (strict).
inline Int int_at_most(const Rat& bound, bool strict) {
  if (strict) return rat_ceil(bound) - 1;
  return rat_floor(bound);
}

inline bool partial_sum_lex_less(const Polygon& a, const Polygon& b) {
  Rat sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.len(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa != sb) return sa < sb;
  }
  return false;
}

}  // namespace detail

/// All valid GSp_{2n} classes ν with lower ⪯ ν ⪯ upper (slopewise) and slope
/// total equal to `total`, sorted ascending lexicographically by partial-sum
/// vector. Infeasible bounds yield an empty list, never an error.
///
/// The search walks integer-height vertex chains on [0, n] with strictly
/// decreasing segment slopes (> c/2), closed either at x = n or by a central
/// run at slope exactly c/2; the right half is the mirror λ ↦ c − λ. Each
/// valid polygon has exactly one such description, so no deduplication is
/// needed, and slopes on a segment of length ℓ automatically have
/// denominator dividing ℓ.
inline std::vector<NewtonClass> enumerate_gsp(
    std::size_t n, const Polygon& lower, const Polygon& upper,
    const Rat& total, const EnumerateOptions& options = {}) {
  if (n == 0) {
    throw DomainError(ErrorCode::InvalidRank, "rank n must be >= 1");
  }
  if (lower.len() != 2 * n || upper.len() != 2 * n) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "enumeration bounds must have length 2n");
  }
  std::vector<NewtonClass> results;
  const Rat c_rat = total / Rat(n);
  if (!is_integer(c_rat)) return results;  // total not attainable
  const Rat c = c_rat;
  const Rat c_half = c / 2;

  // Fold the mirror constraint into per-position windows on the left half:
  // lower_i ≤ λ_i ≤ upper_i and lower_{2n+1−i} ≤ c − λ_i ≤ upper_{2n+1−i}.
  std::vector<Rat> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = std::max(lower[i], Rat(c - upper[2 * n - 1 - i]));
    hi[i] = std::min(upper[i], Rat(c - lower[2 * n - 1 - i]));
    if (lo[i] > hi[i]) return results;
  }

  const GroupTag tag{GroupFamily::GSp, n};
  // Left-half slopes of the chain built so far.
  std::vector<Rat> left(n, Rat(0));

  auto emit = [&](std::size_t filled_up_to, const Rat& tail_slope) {
    for (std::size_t i = filled_up_to; i < n; ++i) left[i] = tail_slope;
    std::vector<Rat> slopes(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      slopes[i] = left[i];
      slopes[2 * n - 1 - i] = c - left[i];
    }
    results.emplace_back(tag, Polygon(std::move(slopes)));
    if (options.max_candidates && results.size() > *options.max_candidates) {
      std::sort(results.begin(), results.end(),
                [](const NewtonClass& a, const NewtonClass& b) {
                  return detail::partial_sum_lex_less(a.nu(), b.nu());
                });
      results.pop_back();
      throw CandidateLimitError(*options.max_candidates, std::move(results));
    }
  };

  // Window intersection for positions x+1 … x2 (1-based), as 0-based indices
  // [x, x2).
  auto window = [&](std::size_t from, std::size_t to, Rat* w_lo, Rat* w_hi) {
    *w_lo = lo[from];
    *w_hi = hi[from];
    for (std::size_t i = from + 1; i < to; ++i) {
      if (lo[i] > *w_lo) *w_lo = lo[i];
      if (hi[i] < *w_hi) *w_hi = hi[i];
    }
  };

  // DFS from the integer vertex (x, y); prev is the slope of the segment
  // arriving at x (absent at the origin).
  auto dfs = [&](auto&& self, std::size_t x, const Int& y,
                 const std::optional<Rat>& prev) -> void {
    // Close with a central run at slope exactly c/2 over (x, n] and its
    // mirror; legal when concavity is strict at x and the windows allow c/2.
    if (x < n && (!prev || *prev > c_half)) {
      Rat w_lo, w_hi;
      window(x, n, &w_lo, &w_hi);
      if (w_lo <= c_half && c_half <= w_hi) emit(x, c_half);
    }
    // Or continue with a steeper segment to the next integer vertex.
    for (std::size_t x2 = x + 1; x2 <= n; ++x2) {
      Rat w_lo, w_hi;
      window(x, x2, &w_lo, &w_hi);
      const Rat seg(x2 - x);
      // slope s = (y2 − y)/seg must satisfy: w_lo ≤ s ≤ w_hi, s > c/2
      // (strictly steeper than any central run), s < prev (x is a genuine
      // breakpoint when it is not the origin).
      Rat lower_bound = std::max(w_lo, c_half);
      bool lower_strict = !(w_lo > c_half);  // c/2 bound is the strict one
      Int y2_min = detail::int_at_least(Rat(y) + lower_bound * seg,
                                        lower_strict);
      Int y2_max = detail::int_at_most(Rat(y) + w_hi * seg, false);
      if (prev) {
        Int cap = detail::int_at_most(Rat(y) + *prev * seg, true);
        if (cap < y2_max) y2_max = cap;
      }
      for (Int y2 = y2_min; y2 <= y2_max; ++y2) {
        const Rat s = Rat(y2 - y) / seg;
        for (std::size_t i = x; i < x2; ++i) left[i] = s;
        if (x2 == n) {
          emit(n, s);  // tail_slope unused when everything is filled
        } else {
          self(self, x2, y2, s);
        }
      }
    }
  };

  dfs(dfs, 0, Int(0), std::nullopt);

  std::sort(results.begin(), results.end(),
            [](const NewtonClass& a, const NewtonClass& b) {
              return detail::partial_sum_lex_less(a.nu(), b.nu());
            });
  return results;
}

}  // namespace newton_strata
