#pragma once

/**
 * @file oracles.hpp
 * @brief Independent reference implementations and corpus generators for the
 *        test suite.
 *
 * Everything in the `oracle` namespace is deliberately written from scratch
 * against the definitions (raw slope vectors, no calls into the library's
 * decision logic) so that library results are checked against a second,
 * structurally different computation:
 *
 *   - dense_band:        brute-force valid-class enumeration on a 1/L grid
 *                        (every slope of a valid class has denominator
 *                        dividing its segment length, hence dividing
 *                        L = lcm(1..2n));
 *   - direct_conditions: the three decision conditions evaluated on raw
 *                        vectors;
 *   - coroot_cone_leq:   the Levi Bruhat order via explicit nonnegative
 *                        coroot combinations;
 *   - blockwise_dual:    the Levi dual via per-block descending sort of the
 *                        negation.
 *
 * The `corpus` namespace holds seeded random input generators (these may use
 * the library, they only produce test inputs, never expected values).
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "newton_strata/newton_strata.hpp"

namespace oracle {

using newton_strata::Int;
using newton_strata::Rat;
using Slopes = std::vector<Rat>;

inline Int lcm_upto(std::size_t k) {
  Int l = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    l = boost::multiprecision::lcm(l, Int(i));
  }
  return l;
}

/// Validity of a GSp_{2n} slope tuple, checked directly on the raw vector:
/// non-increasing, symplectic pairing with integer constant, and an integer
/// partial sum wherever the slope changes.
inline bool valid_gsp_direct(const Slopes& s, std::size_t n) {
  if (n == 0 || s.size() != 2 * n) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] < s[i]) return false;
  }
  const Rat c = s[0] + s[2 * n - 1];
  if (newton_strata::rat_den(c) != 1) return false;
  for (std::size_t i = 1; i <= n; ++i) {
    if (s[i - 1] + s[2 * n - i] != c) return false;
  }
  Rat height = 0;
  for (std::size_t x = 1; x < 2 * n; ++x) {
    height += s[x - 1];
    if (s[x - 1] != s[x] && newton_strata::rat_den(height) != 1) return false;
  }
  return true;
}

/// Every valid tuple with lower ⪯ s ⪯ upper (entrywise) and the given total,
/// found by scanning the full 1/L grid position by position with the
/// symplectic mirror folded in. Output sorted ascending lexicographically by
/// partial-sum vectors (ties impossible: equal partial sums mean equal
/// tuples).
inline std::vector<Slopes> dense_band(std::size_t n, const Slopes& lower,
                                      const Slopes& upper, const Rat& total) {
  std::vector<Slopes> out;
  const Rat c_rat = total / Rat(Int(n));
  if (newton_strata::rat_den(c_rat) != 1) return out;
  const Rat c = c_rat;
  const Int L = lcm_upto(2 * n);

  Slopes left(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      Slopes full(2 * n);
      for (std::size_t j = 0; j < n; ++j) {
        full[j] = left[j];
        full[2 * n - 1 - j] = c - left[j];
      }
      if (valid_gsp_direct(full, n)) out.push_back(std::move(full));
      return;
    }
    // Window from the direct bound, the mirror bound, and monotonicity.
    Rat lo = std::max(lower[i], Rat(c - upper[2 * n - 1 - i]));
    Rat hi = std::min(upper[i], Rat(c - lower[2 * n - 1 - i]));
    if (i > 0) hi = std::min(hi, left[i - 1]);
    if (lo > hi) return;
    for (Int k = newton_strata::rat_ceil(lo * Rat(L));
         k <= newton_strata::rat_floor(hi * Rat(L)); ++k) {
      left[i] = Rat(k, L);
      self(self, i + 1);
    }
  };
  rec(rec, 0);

  auto psum_less = [](const Slopes& a, const Slopes& b) {
    Rat sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      sa += a[i];
      sb += b[i];
      if (sa != sb) return sa < sb;
    }
    return false;
  };
  std::sort(out.begin(), out.end(), psum_less);
  return out;
}

/// The three decision conditions on raw vectors, for the shape d·𝟙 (+ μ_ord
/// when ordinary). The candidate is normalized by the d-shift here, so pass
/// the unshifted nu_bt.
struct DirectConditions {
  bool bruhat;
  bool slopewise_lower;
  bool slopewise_upper;
  bool breakpoints;
  bool all() const {
    return bruhat && slopewise_lower && slopewise_upper && breakpoints;
  }
};

inline DirectConditions direct_conditions(const Slopes& nu_b,
                                          const Slopes& nu_bt, const Int& d,
                                          bool ordinary) {
  const std::size_t two_n = nu_b.size();
  const std::size_t n = two_n / 2;
  Slopes nu_p(two_n);
  for (std::size_t i = 0; i < two_n; ++i) nu_p[i] = nu_bt[i] + Rat(d);

  DirectConditions r{true, true, true, true};

  // (i) partial sums of nu_p below those of nu_b + mu0*, equal at the end.
  Rat sp = 0, sb = 0;
  for (std::size_t i = 0; i < two_n; ++i) {
    sp += nu_p[i];
    sb += nu_b[i] + ((ordinary && i >= n) ? Rat(-1) : Rat(0));
    if (sp > sb) r.bruhat = false;
  }
  if (sp != sb) r.bruhat = false;

  // (ii) the two slopewise bounds.
  for (std::size_t i = 0; i < two_n; ++i) {
    if (nu_p[i] > nu_b[i]) r.slopewise_lower = false;
    if (nu_b[i] > nu_p[i] + 1) r.slopewise_upper = false;
  }

  // (iii) slope-change positions of nu_b all occur in nu_p.
  for (std::size_t x = 1; x < two_n; ++x) {
    if (nu_b[x - 1] != nu_b[x] && nu_p[x - 1] == nu_p[x]) {
      r.breakpoints = false;
    }
  }
  return r;
}

/// The simple coroots of GSp_{2n} as raw vectors, indexed by p = 1..n:
/// p < n gives +1, −1 at positions p, p+1 and mirrored +1, −1 at
/// 2n−p, 2n−p+1 (1-based); p = n gives +1, −1 at n, n+1.
inline Slopes coroot_vector(std::size_t n, std::size_t p) {
  Slopes v(2 * n, Rat(0));
  if (p < n) {
    v[p - 1] = 1;
    v[p] = -1;
    v[2 * n - p - 1] += 1;
    v[2 * n - p] += -1;
  } else {
    v[n - 1] = 1;
    v[n] = -1;
  }
  return v;
}

/// Coroot indices available inside the Levi of the partition: every p ≤ n
/// that is not an anchor n_1, …, n_l (p = n counts as an anchor exactly when
/// m = n, which removes the long coroot).
inline std::vector<std::size_t> levi_coroot_indices(
    std::size_t n, const std::vector<std::size_t>& parts) {
  std::vector<bool> is_anchor(n + 1, false);
  std::size_t acc = 0;
  for (std::size_t p : parts) {
    acc += p;
    is_anchor[acc] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= n; ++p) {
    if (!is_anchor[p]) out.push_back(p);
  }
  return out;
}

/// Reference for the Levi Bruhat order: a ≤ b iff δ = b − a is a nonnegative
/// rational combination of the Levi's simple coroots. The candidate
/// coefficient of the coroot at p is forced to be the p-th partial sum of δ
/// (each coroot contributes +1 to exactly the partial sums at p and 2n−p, or
/// just at n for the long one), so it suffices to check those coefficients
/// are ≥ 0 and that the reconstruction reproduces δ exactly.
inline bool coroot_cone_leq(std::size_t n,
                            const std::vector<std::size_t>& parts,
                            const Slopes& a, const Slopes& b) {
  const std::size_t two_n = 2 * n;
  Slopes delta(two_n);
  for (std::size_t i = 0; i < two_n; ++i) delta[i] = b[i] - a[i];
  std::vector<Rat> psum(two_n + 1, Rat(0));
  for (std::size_t i = 0; i < two_n; ++i) psum[i + 1] = psum[i] + delta[i];

  Slopes rebuilt(two_n, Rat(0));
  for (std::size_t p : levi_coroot_indices(n, parts)) {
    const Rat coeff = psum[p];
    if (coeff < 0) return false;
    Slopes beta = coroot_vector(n, p);
    for (std::size_t i = 0; i < two_n; ++i) rebuilt[i] += coeff * beta[i];
  }
  return rebuilt == delta;
}

/// Reference for the Levi dual: negate, then sort each structural block
/// descending (blocks computed here from the parts alone).
inline Slopes blockwise_dual(std::size_t n,
                             const std::vector<std::size_t>& parts,
                             const Slopes& mu) {
  Slopes out(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) out[i] = -mu[i];
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t acc = 0;
  for (std::size_t p : parts) {
    blocks.emplace_back(acc, acc + p);
    acc += p;
  }
  const std::size_t m = acc;
  if (m < n) blocks.emplace_back(m, 2 * n - m);
  acc = 0;
  for (std::size_t p : parts) {
    acc += p;
    blocks.emplace_back(2 * n - acc, 2 * n - acc + p);
  }
  for (auto [from, to] : blocks) {
    std::sort(out.begin() + from, out.begin() + to,
              [](const Rat& x, const Rat& y) { return y < x; });
  }
  return out;
}

}  // namespace oracle

namespace corpus {

using newton_strata::Int;
using newton_strata::Rat;
using Slopes = std::vector<Rat>;

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(rng);
}

/// A random rational with numerator in [−num_bound, num_bound] and
/// denominator in [1, den_bound].
inline Rat random_rat(Rng& rng, std::int64_t num_bound,
                      std::int64_t den_bound) {
  return Rat(Int(rand_int(rng, -num_bound, num_bound)),
             Int(rand_int(rng, 1, den_bound)));
}

/// A random dominant tuple of the given length.
inline Slopes random_dominant(Rng& rng, std::size_t len,
                              std::int64_t num_bound = 8,
                              std::int64_t den_bound = 4) {
  Slopes s(len);
  for (auto& v : s) v = random_rat(rng, num_bound, den_bound);
  std::sort(s.begin(), s.end(), [](const Rat& a, const Rat& b) { return b < a; });
  return s;
}

/// One in-place dominance-preserving move that strictly lowers the Bruhat
/// order: subtract ε at position i, add ε at position j > i (total and
/// dominance kept). Returns false when the chosen positions have no slack.
inline bool bruhat_move_down(Rng& rng, Slopes& s) {
  if (s.size() < 2) return false;
  const std::size_t i =
      static_cast<std::size_t>(rand_int(rng, 0, static_cast<std::int64_t>(s.size()) - 2));
  const std::size_t j = static_cast<std::size_t>(
      rand_int(rng, static_cast<std::int64_t>(i) + 1,
               static_cast<std::int64_t>(s.size()) - 1));
  Rat cap;
  if (j == i + 1) {
    cap = (s[i] - s[j]) / 2;
  } else {
    cap = std::min(s[i] - s[i + 1], s[j - 1] - s[j]);
  }
  if (cap <= 0) return false;
  // ε = cap · p/q with 1 ≤ p ≤ q keeps every constraint satisfied.
  const Int q = Int(rand_int(rng, 1, 4));
  const Int p = Int(rand_int(rng, 1, static_cast<std::int64_t>(q)));
  const Rat eps = cap * Rat(p, q);
  s[i] -= eps;
  s[j] += eps;
  return true;
}

/// All valid GSp classes for the given (n, c) with every slope in
/// [−bound, bound]; memoizing wrapper over the library enumerator (input
/// generation only).
inline const std::vector<newton_strata::NewtonClass>& valid_pool(
    std::size_t n, std::int64_t c, std::int64_t bound = 3) {
  static std::map<std::tuple<std::size_t, std::int64_t, std::int64_t>,
                  std::vector<newton_strata::NewtonClass>>
      cache;
  auto key = std::make_tuple(n, c, bound);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto classes = newton_strata::enumerate_gsp(
        n, newton_strata::Polygon::constant(2 * n, Rat(-bound)),
        newton_strata::Polygon::constant(2 * n, Rat(bound)),
        Rat(Int(n) * Int(c)));
    it = cache.emplace(key, std::move(classes)).first;
  }
  return it->second;
}

/// A random valid class drawn from the pools, optionally filtered to satisfy
/// the gap hypothesis.
inline newton_strata::NewtonClass random_class(Rng& rng, std::size_t n,
                                               bool need_gap,
                                               std::int64_t c_lo = -4,
                                               std::int64_t c_hi = 4) {
  for (;;) {
    const std::int64_t c = rand_int(rng, c_lo, c_hi);
    const auto& pool = valid_pool(n, c);
    if (pool.empty()) continue;
    const auto& cls = pool[static_cast<std::size_t>(
        rand_int(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
    if (!need_gap || newton_strata::check_gap_hypothesis(cls)) return cls;
  }
}

}  // namespace corpus
