#pragma once

/**
 * @file levi.hpp
 * @brief Ordered partitions, block Levi subgroups of GSp_{2n}, their Newton
 *        sets (blockwise-dominant symmetric tuples), reductions, duals,
 *        degrees, and the reduction cocharacter construction.
 *
 * An ordered partition α = (α₁, …, α_l) of m ≤ n carves the index range
 * [1, 2n] into GL blocks (n_{i−1}, n_i], a middle symplectic block
 * (m, 2n−m], and mirrored dual blocks (2n−n_i, 2n−n_{i−1}]. The Levi M_α is
 * the corresponding block subgroup; its Newton set consists of tuples that
 * are non-increasing on every structural block and satisfy the symplectic
 * pairing λ_j + λ_{2n+1−j} = d for one constant d.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "newton_strata/errors.hpp"
#include "newton_strata/newton_class.hpp"
#include "newton_strata/polygon.hpp"
#include "newton_strata/rational.hpp"

namespace newton_strata {

class OrderedPartition {
 public:
  /// parts must be positive with sum ≤ n; n ≥ 1. An empty parts list is the
  /// trivial partition (M_α = GSp_{2n} itself).
  OrderedPartition(std::size_t n, std::vector<std::size_t> parts)
      : n_(n), parts_(std::move(parts)) {
    if (n_ == 0) {
      throw DomainError(ErrorCode::InvalidRank, "rank n must be >= 1");
    }
    std::size_t sum = 0;
    for (std::size_t p : parts_) {
      if (p == 0) {
        throw DomainError(ErrorCode::InvalidPartition,
                          "partition parts must be positive");
      }
      sum += p;
    }
    if (sum > n_) {
      throw DomainError(ErrorCode::InvalidPartition,
                        "partition parts sum to " + std::to_string(sum) +
                            " > n = " + std::to_string(n_));
    }
    m_ = sum;
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t l() const { return parts_.size(); }
  const std::vector<std::size_t>& parts() const { return parts_; }

  /// Anchors n₀ = 0 < n₁ < … < n_l = m, plus n_{l+1} = n (length l + 2).
  std::vector<std::size_t> anchors() const {
    std::vector<std::size_t> out;
    out.reserve(parts_.size() + 2);
    out.push_back(0);
    std::size_t acc = 0;
    for (std::size_t p : parts_) {
      acc += p;
      out.push_back(acc);
    }
    out.push_back(n_);
    return out;
  }

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.n_ == b.n_ && a.parts_ == b.parts_;
  }
  friend bool operator!=(const OrderedPartition& a, const OrderedPartition& b) {
    return !(a == b);
  }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> parts_;
};

/// A dominant cocharacter (or Newton point) of M_α: the full 2n-tuple with
/// the block structure as metadata. Validation enforces non-increase on
/// every structural block — GL blocks, the full middle block (m, 2n−m]
/// including its center junction, and the mirrored dual blocks (the latter
/// follow from symmetry and are checked as a consistency assertion) — plus
/// the symplectic pairing with one constant d.
class LeviCocharacter {
 public:
  LeviCocharacter(OrderedPartition alpha, std::vector<Rat> slopes)
      : alpha_(std::move(alpha)), slopes_(std::move(slopes)) {
    const std::size_t n = alpha_.n();
    const std::size_t two_n = 2 * n;
    if (slopes_.size() != two_n) {
      throw DomainError(ErrorCode::DimensionMismatch,
                        "a Levi cocharacter for rank n = " + std::to_string(n) +
                            " needs 2n = " + std::to_string(two_n) +
                            " slopes, got " + std::to_string(slopes_.size()));
    }
    d_ = slopes_[0] + slopes_[two_n - 1];
    for (std::size_t i = 2; i <= n; ++i) {
      if (slopes_[i - 1] + slopes_[two_n - i] != d_) {
        throw DomainError(ErrorCode::SymmetryViolation,
                          "pair sum at i=" + std::to_string(i) +
                              " differs from the constant " +
                              format_rational(d_),
                          i);
      }
    }
    for (auto [from, to] : structural_blocks(alpha_)) {
      for (std::size_t j = from + 1; j < to; ++j) {
        if (slopes_[j - 1] < slopes_[j]) {
          throw DomainError(ErrorCode::NotDominant,
                            "slopes must be non-increasing within the block "
                            "covering positions " +
                                std::to_string(from + 1) + ".." +
                                std::to_string(to));
        }
      }
    }
  }

  /// Structural blocks as 0-based half-open ranges [from, to): GL blocks,
  /// then the middle block (absent when m = n), then dual blocks in mirrored
  /// order.
  static std::vector<std::pair<std::size_t, std::size_t>> structural_blocks(
      const OrderedPartition& alpha) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = alpha.n();
    const std::size_t m = alpha.m();
    std::size_t acc = 0;
    for (std::size_t p : alpha.parts()) {
      out.emplace_back(acc, acc + p);
      acc += p;
    }
    if (m < n) out.emplace_back(m, 2 * n - m);
    for (std::size_t i = alpha.l(); i >= 1; --i) {
      std::size_t hi = 0;
      for (std::size_t k = 0; k < i; ++k) hi += alpha.parts()[k];
      out.emplace_back(2 * n - hi, 2 * n - hi + alpha.parts()[i - 1]);
    }
    return out;
  }

  const OrderedPartition& alpha() const { return alpha_; }
  const std::vector<Rat>& slopes() const { return slopes_; }
  const Rat& operator[](std::size_t i) const { return slopes_[i]; }
  std::size_t len() const { return slopes_.size(); }
  /// The symplectic pairing constant d (the similitude coordinate).
  const Rat& symmetry_constant() const { return d_; }

  friend bool operator==(const LeviCocharacter& a, const LeviCocharacter& b) {
    return a.alpha_ == b.alpha_ && a.slopes_ == b.slopes_;
  }
  friend bool operator!=(const LeviCocharacter& a, const LeviCocharacter& b) {
    return !(a == b);
  }

 private:
  OrderedPartition alpha_;
  std::vector<Rat> slopes_;
  Rat d_;
};

/// The pieces of a polygon cut at the partition anchors: GL blocks ν^{(i)},
/// the middle block ω (length 2(n−m); absent when m = n), and the dual
/// blocks ν̌^{(i)} (stored in index order i = 1..l; the source concatenation
/// order is ν^{(1)}|…|ν^{(l)}|ω|ν̌^{(l)}|…|ν̌^{(1)}).
struct LeviBlocks {
  OrderedPartition alpha;
  std::vector<Polygon> gl_blocks;
  std::optional<Polygon> gsp_block;
  std::vector<Polygon> dual_blocks;
};

/// The partition carved by the breakpoints of a dominant polygon in (0, n]:
/// parts α_i = n_i − n_{i−1} for the ascending breakpoint x-coordinates
/// n₁ < … < n_l ≤ n. Mechanical on dominant polygons of length 2n; the
/// centralizer of the polygon inside GSp_{2n} is M_α.
inline OrderedPartition centralizer_partition(const Polygon& nu,
                                              std::size_t n) {
  if (nu.len() != 2 * n) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "centralizer_partition needs a polygon of length 2n");
  }
  nu.require_dominant("centralizer_partition");
  std::vector<std::size_t> parts;
  std::size_t prev = 0;
  for (std::size_t x : nu.breakpoint_xs()) {
    if (x > n) break;
    parts.push_back(x - prev);
    prev = x;
  }
  return OrderedPartition(n, std::move(parts));
}

inline OrderedPartition centralizer_partition(const NewtonClass& b) {
  if (b.group().family != GroupFamily::GSp) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "centralizer_partition takes a GSp class");
  }
  return centralizer_partition(b.nu(), b.n());
}

/// True iff the polygon has lattice points at every anchor n₁, …, n_l — the
/// exact condition for a reduction to M_α to exist.
inline bool has_reduction(const Polygon& nu, const OrderedPartition& alpha) {
  if (nu.len() != 2 * alpha.n()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "has_reduction needs a polygon of length 2n");
  }
  std::size_t acc = 0;
  for (std::size_t p : alpha.parts()) {
    acc += p;
    if (!nu.has_integer_point_at(acc)) return false;
  }
  return true;
}

inline bool has_reduction(const NewtonClass& b, const OrderedPartition& alpha) {
  return has_reduction(b.nu(), alpha);
}

/// Cuts the polygon at the anchors. Mechanical slicing of a dominant tuple;
/// requires has_reduction, and checks the middle block's symplectic pairing
/// when the middle is nonempty.
inline LeviBlocks split_blocks(const Polygon& nu,
                               const OrderedPartition& alpha) {
  if (!has_reduction(nu, alpha)) {
    throw DomainError(ErrorCode::ReductionUnavailable,
                      "polygon lacks a lattice point at a partition anchor");
  }
  const std::size_t n = alpha.n();
  const std::size_t m = alpha.m();
  auto slice = [&](std::size_t from, std::size_t to) {  // 0-based, half-open
    return Polygon(std::vector<Rat>(nu.slopes().begin() + from,
                                    nu.slopes().begin() + to));
  };
  LeviBlocks out{alpha, {}, std::nullopt, {}};
  std::size_t acc = 0;
  for (std::size_t p : alpha.parts()) {
    out.gl_blocks.push_back(slice(acc, acc + p));
    acc += p;
  }
  if (m < n) {
    Polygon omega = slice(m, 2 * n - m);
    const std::size_t w = omega.len();
    const Rat d = omega[0] + omega[w - 1];
    for (std::size_t i = 2; 2 * i <= w; ++i) {
      if (omega[i - 1] + omega[w - i] != d) {
        throw DomainError(ErrorCode::SymmetryViolation,
                          "middle block violates the symplectic pairing", i);
      }
    }
    out.gsp_block = std::move(omega);
  }
  acc = 0;
  for (std::size_t i = 0; i < alpha.l(); ++i) {
    acc += alpha.parts()[i];
    out.dual_blocks.push_back(slice(2 * n - acc, 2 * n - acc + alpha.parts()[i]));
  }
  return out;
}

/// Reassembles ν^{(1)}|…|ν^{(l)}|ω|ν̌^{(l)}|…|ν̌^{(1)}.
inline Polygon join_blocks(const LeviBlocks& blocks) {
  std::vector<Rat> slopes;
  slopes.reserve(2 * blocks.alpha.n());
  for (const Polygon& p : blocks.gl_blocks) {
    slopes.insert(slopes.end(), p.slopes().begin(), p.slopes().end());
  }
  if (blocks.gsp_block) {
    slopes.insert(slopes.end(), blocks.gsp_block->slopes().begin(),
                  blocks.gsp_block->slopes().end());
  }
  for (std::size_t i = blocks.dual_blocks.size(); i >= 1; --i) {
    const Polygon& p = blocks.dual_blocks[i - 1];
    slopes.insert(slopes.end(), p.slopes().begin(), p.slopes().end());
  }
  return Polygon(std::move(slopes));
}

/// The Bruhat order on the Newton set of M_α: a ≤ b iff b − a is a
/// nonnegative combination of positive coroots of M_α. On partial sums of
/// δ = b − a this is: S_j(δ) ≥ 0 for every j, with equality at the anchors
/// n₁, …, n_l and at 2n. (Equality at 2n encodes equal similitude degree;
/// equality at j = n would wrongly exclude the middle block's long coroot,
/// whose partial sum at n is positive.) The mirrored anchor equalities at
/// 2n − n_i follow and are asserted as internal consistency.
inline bool levi_bruhat_leq(const LeviCocharacter& a,
                            const LeviCocharacter& b) {
  if (a.alpha() != b.alpha()) {
    throw DomainError(ErrorCode::PartitionMismatch,
                      "levi_bruhat_leq needs matching partitions");
  }
  const std::size_t two_n = a.len();
  const OrderedPartition& alpha = a.alpha();
  std::vector<Rat> sums(two_n);
  Rat acc = 0;
  for (std::size_t j = 0; j < two_n; ++j) {
    acc += b[j] - a[j];
    if (acc < 0) return false;
    sums[j] = acc;
  }
  if (sums[two_n - 1] != 0) return false;
  std::size_t anchor = 0;
  for (std::size_t p : alpha.parts()) {
    anchor += p;
    if (sums[anchor - 1] != 0) return false;
  }
  // Internal consistency: with S vanishing at 2n, symmetry forces
  // S_{2n−j} = S_j, so the mirrored anchors must vanish too.
  anchor = 0;
  for (std::size_t p : alpha.parts()) {
    anchor += p;
    if (sums[two_n - anchor - 1] != 0) {
      throw internal_error(
          "mirrored anchor equality failed in levi_bruhat_leq");
    }
  }
  return true;
}

/// The dual of a Levi cocharacter: the blockwise-dominant representative of
/// its negation, computed by three mechanical identities — reversal-negation
/// inside each GL block, the mirrored middle rule
/// dual_{m+i} = −μ_{2n+1−m−i}, and the pairing dual_j + dual_{2n+1−j} = −d
/// for the second half. An involution.
inline LeviCocharacter levi_dual(const LeviCocharacter& mu) {
  const OrderedPartition& alpha = mu.alpha();
  const std::size_t n = alpha.n();
  const std::size_t m = alpha.m();
  const std::size_t two_n = 2 * n;
  std::vector<Rat> dual(two_n);
  std::size_t block_lo = 0;  // n_{i−1}, 0-based block start
  for (std::size_t p : alpha.parts()) {
    for (std::size_t j = 1; j <= p; ++j) {
      // dual at position n_{i−1}+j is −μ at position n_i+1−j (1-based).
      dual[block_lo + j - 1] = -mu[block_lo + p - j];
    }
    block_lo += p;
  }
  for (std::size_t i = 1; i + m <= n; ++i) {
    dual[m + i - 1] = -mu[two_n - m - i];  // 1-based: dual_{m+i} = −μ_{2n+1−m−i}
  }
  const Rat neg_d = -mu.symmetry_constant();
  for (std::size_t j = n + 1; j <= two_n; ++j) {
    dual[j - 1] = neg_d - dual[two_n - j];
  }
  return LeviCocharacter(alpha, std::move(dual));
}

/// Entrywise sum of Levi cocharacters over the same partition (blockwise
/// dominance and symmetry are preserved and re-checked by the constructor).
inline LeviCocharacter levi_add(const LeviCocharacter& a,
                                const LeviCocharacter& b) {
  if (a.alpha() != b.alpha()) {
    throw DomainError(ErrorCode::PartitionMismatch,
                      "levi_add needs matching partitions");
  }
  std::vector<Rat> slopes(a.len());
  for (std::size_t i = 0; i < a.len(); ++i) slopes[i] = a[i] + b[i];
  return LeviCocharacter(a.alpha(), std::move(slopes));
}

/// Degree (Kottwitz) vector in ℚ^{l+1}: block sums for the GL blocks, and
/// the symmetry constant d for the last component. For m < n the last
/// component equals the middle-block average (the pairing makes the middle
/// sum equal (n−m)·d); for m = n the average degenerates and d is the value
/// the κ-equality check needs, so the same definition serves both cases.
inline std::vector<Rat> levi_degree(const LeviCocharacter& mu) {
  std::vector<Rat> out;
  out.reserve(mu.alpha().l() + 1);
  std::size_t acc = 0;
  for (std::size_t p : mu.alpha().parts()) {
    Rat sum = 0;
    for (std::size_t j = 0; j < p; ++j) sum += mu[acc + j];
    out.push_back(sum);
    acc += p;
  }
  out.push_back(mu.symmetry_constant());
  return out;
}

/// Blockwise Kottwitz vector of a valid GSp polygon viewed in M_α: block
/// sums of the GL blocks plus the ambient symmetry constant.
inline std::vector<Rat> levi_kottwitz(const Polygon& nu,
                                      const OrderedPartition& alpha) {
  if (nu.len() != 2 * alpha.n()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "levi_kottwitz needs a polygon of length 2n");
  }
  std::vector<Rat> out;
  out.reserve(alpha.l() + 1);
  std::size_t acc = 0;
  for (std::size_t p : alpha.parts()) {
    Rat sum = 0;
    for (std::size_t j = 0; j < p; ++j) sum += nu[acc + j];
    out.push_back(sum);
    acc += p;
  }
  out.push_back(nu[0] + nu[nu.len() - 1]);
  return out;
}

/// Result of build_mu_bar: the reduction cocharacter μ̄ together with the
/// block multiplicities (d₁, …, d_{l+1}).
struct MuBarResult {
  LeviCocharacter mu_bar;
  std::vector<Int> d_vector;
};

/// Builds the reduction cocharacter for the ordinary shape: d_i is the
/// block-sum difference of the two polygons over GL block i (must be an
/// integer in [0, α_i]); block i of μ̄ is (1^{(d_i)}, 0^{(α_i−d_i)}); the
/// middle block gets d_{l+1} = n − m ones followed by zeros, and the second
/// half is forced by μ̄_j + μ̄_{2n+1−j} = 1. Both inputs are validated as
/// GSp classes first.
inline MuBarResult build_mu_bar(const Polygon& nu_b, const Polygon& nu_bt,
                                const OrderedPartition& alpha) {
  const std::size_t n = alpha.n();
  const std::size_t m = alpha.m();
  const GroupTag tag{GroupFamily::GSp, n};
  for (const Polygon* p : {&nu_b, &nu_bt}) {
    if (auto issue = NewtonClass::check(tag, *p)) {
      throw DomainError(issue->code, issue->message, issue->position);
    }
  }
  std::vector<Int> d_vector;
  d_vector.reserve(alpha.l() + 1);
  std::vector<Rat> mu(2 * n, Rat(0));
  std::size_t acc = 0;
  for (std::size_t i = 1; i <= alpha.l(); ++i) {
    const std::size_t p = alpha.parts()[i - 1];
    Rat diff = 0;
    for (std::size_t j = 0; j < p; ++j) diff += nu_b[acc + j] - nu_bt[acc + j];
    if (!is_integer(diff)) {
      throw DomainError(ErrorCode::NonIntegerDi,
                        "block " + std::to_string(i) +
                            " slope-sum difference " + format_rational(diff) +
                            " is not an integer",
                        i);
    }
    const Int d_i = rat_num(diff);
    if (d_i < 0 || d_i > Int(p)) {
      throw DomainError(ErrorCode::DiOutOfRange,
                        "block " + std::to_string(i) + " multiplicity " +
                            d_i.str() + " outside [0, " + std::to_string(p) +
                            "]",
                        i);
    }
    for (std::size_t j = 0; Int(j) < d_i; ++j) mu[acc + j] = 1;
    d_vector.push_back(d_i);
    acc += p;
  }
  // Middle block: d_{l+1} = n − m ones (the whole first half of the middle).
  d_vector.push_back(Int(n - m));
  for (std::size_t j = m; j < n; ++j) mu[j] = 1;
  for (std::size_t j = n + 1; j <= 2 * n; ++j) {
    mu[j - 1] = Rat(1) - mu[2 * n - j];
  }
  LeviCocharacter mu_bar(alpha, std::move(mu));
  if (mu_bar.symmetry_constant() != 1) {
    throw internal_error("build_mu_bar produced a wrong symmetry constant");
  }
  return MuBarResult{std::move(mu_bar), std::move(d_vector)};
}

}  // namespace newton_strata
