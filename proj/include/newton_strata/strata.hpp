#pragma once

/**
 * @file strata.hpp
 * @brief The classification engine: decides nonemptiness of Newton strata in
 *        minuscule Schubert cells for GSp_{2n}, produces independently
 *        re-verifiable certificates, and enumerates all nonempty strata.
 *
 * The decision applies under the gap hypothesis (any two distinct slopes of
 * ν_b differ by strictly more than 1) and refuses otherwise — verdicts are
 * only reported where they are proved. Every positive decision carries a
 * certificate built through the Levi route: the centralizer partition α, the
 * reduction multiplicities d_i, the reduction cocharacter μ̄, and the basic
 * criterion (Kottwitz equality plus the Levi Bruhat bound) checked inside
 * M_α.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "newton_strata/errors.hpp"
#include "newton_strata/levi.hpp"
#include "newton_strata/newton_class.hpp"
#include "newton_strata/polygon.hpp"
#include "newton_strata/rational.hpp"

namespace newton_strata {

/// The minuscule dominant cocharacters of GSp_{2n}: μ = d·𝟙 (central) or
/// μ = d·𝟙 + μ_ord (ordinary). Nothing else is minuscule.
struct MinusculeShape {
  std::size_t n;
  Int d;
  bool ordinary;

  Polygon to_polygon() const {
    Polygon base = ordinary ? ordinary_cochar(n) : Polygon::zero(2 * n);
    return base.shifted(Rat(d));
  }

  friend bool operator==(const MinusculeShape& a, const MinusculeShape& b) {
    return a.n == b.n && a.d == b.d && a.ordinary == b.ordinary;
  }
};

/// Recognizes an explicit tuple as a minuscule shape. Anything that is not
/// dominant, integral, symplectically symmetric, and of one of the two
/// shapes is rejected as NotMinuscule.
inline MinusculeShape minuscule_normalize(const Polygon& mu, std::size_t n) {
  if (n == 0) {
    throw DomainError(ErrorCode::InvalidRank, "rank n must be >= 1");
  }
  if (mu.len() != 2 * n) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "minuscule_normalize needs a polygon of length 2n");
  }
  auto reject = [](const std::string& why) -> DomainError {
    return DomainError(ErrorCode::NotMinuscule, why);
  };
  if (!mu.is_dominant()) throw reject("tuple is not dominant");
  for (const Rat& v : mu.slopes()) {
    if (!is_integer(v)) throw reject("tuple has a non-integer entry");
  }
  const Rat d_front = mu[0];
  const Rat d_back = mu[2 * n - 1];
  if (d_front == d_back) {
    for (const Rat& v : mu.slopes()) {
      if (v != d_front) throw reject("entries take more than two values");
    }
    return MinusculeShape{n, rat_num(d_front), false};
  }
  if (d_front != d_back + 1) {
    throw reject("entries must all be equal or take values {d, d+1}");
  }
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (mu[i] != (i < n ? d_front : d_back)) {
      throw reject("the two values must fill the two halves");
    }
  }
  return MinusculeShape{n, rat_num(d_back), true};
}

/// The gap hypothesis: all pairs of distinct slopes differ by strictly more
/// than 1. Checking consecutive distinct values of the dominant tuple
/// suffices.
inline bool check_gap_hypothesis(const NewtonClass& b) {
  const std::vector<Rat>& s = b.nu().slopes();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] != s[i] && s[i - 1] - s[i] <= 1) return false;
  }
  return true;
}

/// Central shapes in one line: the stratum for μ = d·𝟙 is nonempty iff
/// ν_b̃ = ν_b − d·𝟙.
inline bool decide_central(const NewtonClass& b, const NewtonClass& bt,
                           const Int& d) {
  if (b.group().family != GroupFamily::GSp ||
      bt.group().family != GroupFamily::GSp || b.n() != bt.n()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "decide_central needs two GSp classes of the same rank");
  }
  return bt.nu() == b.nu().shifted(Rat(-d));
}

/// Which of the decision conditions failed (the first one, in the order they
/// are stated): the Bruhat bound (i), the two slopewise bounds (ii), or the
/// breakpoint inclusion (iii). Under the enforced gap hypothesis a
/// (ii)-pass/(iii)-fail divergence is impossible and is reported as an
/// internal error, so Breakpoint is kept for schema completeness only.
enum class FailedCondition { Bruhat, SlopewiseLower, SlopewiseUpper, Breakpoint };

inline const char* failed_condition_name(FailedCondition c) {
  switch (c) {
    case FailedCondition::Bruhat: return "Bruhat";
    case FailedCondition::SlopewiseLower: return "SlopewiseLower";
    case FailedCondition::SlopewiseUpper: return "SlopewiseUpper";
    case FailedCondition::Breakpoint: return "Breakpoint";
  }
  return "Unknown";
}

/// The Levi-route witness for a positive decision. Independently
/// re-verifiable from (b, b̃, μ) alone; emitted iff all three checks pass.
struct StratumCertificate {
  OrderedPartition alpha;
  std::vector<Int> d_vector;
  LeviCocharacter mu_bar;
  std::vector<Rat> kappa_b;        // blockwise Kottwitz vector of the reduction of b
  std::vector<Rat> kappa_bt;       // … of the (d-normalized) reduction of b̃
  std::vector<Rat> mu_bar_degree;  // degree vector of μ̄
  bool kappa_check;
  bool bruhat_check;
  bool basic_check;
  std::vector<std::string> notes;
};

struct Decision {
  bool nonempty;
  std::optional<FailedCondition> failed_condition;
  std::optional<StratumCertificate> certificate;
};

/// Outcome of the certificate construction: either a passing certificate or
/// a human-readable reason why none exists.
struct CertifyResult {
  std::optional<StratumCertificate> certificate;
  std::string failure;
};

namespace detail {

inline void require_decidable_pair(const NewtonClass& b, const NewtonClass& bt,
                                   const MinusculeShape& mu) {
  if (b.group().family != GroupFamily::GSp ||
      bt.group().family != GroupFamily::GSp) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "the decision needs GSp classes");
  }
  if (b.n() != bt.n() || mu.n != b.n()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "classes and shape must share the same rank n");
  }
}

inline void require_gap(const NewtonClass& b) {
  if (!check_gap_hypothesis(b)) {
    throw DomainError(
        ErrorCode::HypothesisViolated,
        "two distinct slopes of nu_b differ by at most 1; the "
        "classification is only proved under the strict gap hypothesis");
  }
}

/// Shift b̃ by d so the shape is normalized to d = 0 (the d-shift is applied
/// to b̃, matching the equivalence it comes from). Always a valid class.
inline NewtonClass normalized_bt(const NewtonClass& bt,
                                 const MinusculeShape& mu) {
  return NewtonClass(bt.group(), bt.nu().shifted(Rat(mu.d)));
}

inline const char* kSignNote =
    "sign convention: the Levi Bruhat bound is checked in the form "
    "nu(bt-reduction) <= nu(b-reduction) + dual(mu_bar) (Galois averaging "
    "is the identity for these split groups); the subtracted form of the "
    "same bound fails on worked instances and is not used";

inline const char* kCentralNote =
    "central shape: the reduction cocharacter is zero (the d-shift "
    "normalizes mu to the trivial cocharacter), so the Kottwitz vectors "
    "must match exactly";

}  // namespace detail

/// Builds and checks the Levi-route certificate for (b, b̃, μ). Refuses
/// outside the gap hypothesis, like decide. On failure the result carries
/// the reason instead of a certificate. This is the independent sufficiency
/// route: it never looks at the direct conditions (i)–(iii).
inline CertifyResult certify(const NewtonClass& b, const NewtonClass& bt,
                             const MinusculeShape& mu) {
  detail::require_decidable_pair(b, bt, mu);
  detail::require_gap(b);
  const NewtonClass ntp = detail::normalized_bt(bt, mu);
  const OrderedPartition alpha = centralizer_partition(b);
  const std::size_t l = alpha.l();

  if (!has_reduction(ntp.nu(), alpha)) {
    return CertifyResult{std::nullopt,
                         "no reduction: the candidate polygon lacks a lattice "
                         "point at a partition anchor"};
  }

  // Reduction cocharacter and multiplicities.
  std::optional<MuBarResult> built;
  std::vector<std::string> notes{detail::kSignNote};
  if (mu.ordinary) {
    try {
      built = build_mu_bar(b.nu(), ntp.nu(), alpha);
    } catch (const DomainError& e) {
      if (e.code() == ErrorCode::NonIntegerDi ||
          e.code() == ErrorCode::DiOutOfRange) {
        return CertifyResult{std::nullopt, e.what()};
      }
      throw;
    }
  } else {
    // Central shape: the normalized cocharacter is trivial.
    built = MuBarResult{
        LeviCocharacter(alpha, std::vector<Rat>(2 * alpha.n(), Rat(0))),
        std::vector<Int>(l + 1, Int(0))};
    notes.push_back(detail::kCentralNote);
  }

  // Kottwitz check: kappa(bt-reduction) = kappa(b-reduction) − deg(mu_bar),
  // componentwise in ZZ^{l+1}.
  std::vector<Rat> kappa_b = levi_kottwitz(b.nu(), alpha);
  std::vector<Rat> kappa_bt = levi_kottwitz(ntp.nu(), alpha);
  std::vector<Rat> degree = levi_degree(built->mu_bar);
  bool kappa_ok = true;
  for (std::size_t i = 0; i <= l; ++i) {
    if (kappa_bt[i] != kappa_b[i] - degree[i]) {
      kappa_ok = false;
      break;
    }
  }

  // Basic criterion inside M_alpha: the b-reduction is basic (each
  // structural block of nu_b is constant, by the choice of alpha) and the
  // Bruhat bound nu(bt-reduction) <= nu(b-reduction) + dual(mu_bar) holds.
  bool basic_ok = true;
  for (auto [from, to] : LeviCocharacter::structural_blocks(alpha)) {
    for (std::size_t j = from + 1; j < to; ++j) {
      if (b.nu()[j] != b.nu()[from]) {
        basic_ok = false;
        break;
      }
    }
    if (!basic_ok) break;
  }

  LeviCocharacter levi_b(alpha, b.nu().slopes());
  LeviCocharacter levi_bt(alpha, ntp.nu().slopes());
  LeviCocharacter bound = levi_add(levi_b, levi_dual(built->mu_bar));
  bool bruhat_ok = levi_bruhat_leq(levi_bt, bound);

  StratumCertificate cert{alpha,
                          built->d_vector,
                          built->mu_bar,
                          std::move(kappa_b),
                          std::move(kappa_bt),
                          std::move(degree),
                          kappa_ok,
                          bruhat_ok,
                          basic_ok,
                          std::move(notes)};
  if (kappa_ok && bruhat_ok && basic_ok) {
    return CertifyResult{std::move(cert), ""};
  }
  std::string why = "certificate checks failed:";
  if (!kappa_ok) why += " kappa-equality";
  if (!bruhat_ok) why += " levi-bruhat-bound";
  if (!basic_ok) why += " basic-reduction";
  return CertifyResult{std::nullopt, why};
}

/// Decides nonemptiness of the stratum for (b, b̃, μ). Requires the gap
/// hypothesis (else HypothesisViolated). Normalizes to d = 0 by shifting b̃,
/// evaluates the conditions in order —
///   (i)  bruhat_leq(ν′, ν_b + μ₀⋆), where μ₀ is the normalized shape and
///        μ₀⋆ = (0^{(n)}, −1^{(n)}) for ordinary shapes, 0 for central;
///   (ii) ν′ ⪯ ν_b and ν_b ⪯ ν′ + 𝟙 (slopewise);
///   (iii) every breakpoint x-coordinate of ν_b is one of ν′ —
/// and reports the first failure. On success the certificate is constructed
/// via the Levi route; its failure, or a (ii)-pass/(iii)-fail divergence,
/// would contradict the classification and raises an internal error.
inline Decision decide(const NewtonClass& b, const NewtonClass& bt,
                       const MinusculeShape& mu) {
  detail::require_decidable_pair(b, bt, mu);
  detail::require_gap(b);
  const NewtonClass ntp = detail::normalized_bt(bt, mu);
  const Polygon& nu_b = b.nu();
  const Polygon& nu_p = ntp.nu();
  const std::size_t n = b.n();

  const Polygon mu0_star =
      mu.ordinary ? ordinary_cochar(n).dual() : Polygon::zero(2 * n);
  const Polygon bound = add(nu_b, mu0_star);
  if (!bound.is_dominant()) {
    throw internal_error("nu_b + mu0* must be dominant for minuscule mu0");
  }
  if (!bruhat_leq(nu_p, bound)) {
    return Decision{false, FailedCondition::Bruhat, std::nullopt};
  }
  if (!slopewise_leq(nu_p, nu_b)) {
    return Decision{false, FailedCondition::SlopewiseLower, std::nullopt};
  }
  if (!slopewise_leq(nu_b, add(nu_p, identity_cochar(n)))) {
    return Decision{false, FailedCondition::SlopewiseUpper, std::nullopt};
  }
  const std::vector<std::size_t> xs_b = nu_b.breakpoint_xs();
  const std::vector<std::size_t> xs_p = nu_p.breakpoint_xs();
  const bool breakpoints_ok =
      std::includes(xs_p.begin(), xs_p.end(), xs_b.begin(), xs_b.end());
  if (!breakpoints_ok) {
    // Provably impossible once (ii) holds under the gap hypothesis.
    throw internal_error(
        "breakpoint condition failed although the slopewise conditions "
        "hold under the gap hypothesis");
  }

  if (!mu.ordinary && !decide_central(b, bt, mu.d)) {
    // The slopewise bounds with matching totals force equality for central
    // shapes, so reaching this line is a bug.
    throw internal_error("central decision diverged from decide_central");
  }

  CertifyResult cert = certify(b, bt, mu);
  if (!cert.certificate) {
    throw internal_error(
        "conditions (i)-(iii) hold but the certificate construction "
        "failed: " +
        cert.failure);
  }
  return Decision{true, std::nullopt, std::move(cert.certificate)};
}

/// The two necessary conditions for GL_n strata (they are not sufficient;
/// callers must treat a true result as "not ruled out"). μ must be a
/// minuscule GL cocharacter, i.e. dominant with 0/1 entries.
inline bool gl_necessary(const NewtonClass& b, const NewtonClass& bt,
                         const Polygon& mu) {
  if (b.group().family != GroupFamily::GL ||
      bt.group().family != GroupFamily::GL || b.length() != bt.length()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "gl_necessary needs two GL classes of the same rank");
  }
  if (mu.len() != b.length()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "mu must have the same length as the classes");
  }
  if (!mu.is_dominant()) {
    throw DomainError(ErrorCode::NotMinuscule,
                      "mu must be dominant with 0/1 entries");
  }
  for (const Rat& v : mu.slopes()) {
    if (v != 0 && v != 1) {
      throw DomainError(ErrorCode::NotMinuscule,
                        "mu must be dominant with 0/1 entries");
    }
  }
  const Polygon bound = add(b.nu(), mu.dual());
  if (!bound.is_dominant()) {
    throw internal_error("nu_b + mu* must be dominant for 0/1 mu");
  }
  return bruhat_leq(bt.nu(), bound) && slopewise_leq(bt.nu(), b.nu()) &&
         slopewise_leq(b.nu(), add(bt.nu(), Polygon::constant(b.length(), 1)));
}

/// The basic criterion: for basic b the stratum is nonempty iff
/// κ(b̃) = κ(b) − deg(μ) and ν_b̃ ≤ ν_b + μ⋆ (Galois averaging is the
/// identity here). μ must be an integral cocharacter of the group (integer
/// entries; symplectically symmetric for GSp).
inline bool basic_nonempty(const NewtonClass& b, const NewtonClass& bt,
                           const Polygon& mu) {
  if (b.group() != bt.group()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "basic_nonempty needs classes in the same group");
  }
  if (!is_basic(b)) {
    throw DomainError(ErrorCode::NotBasic, "basic_nonempty requires basic b");
  }
  if (mu.len() != b.length()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "mu must match the group's polygon length");
  }
  mu.require_dominant("basic_nonempty (mu)");
  for (const Rat& v : mu.slopes()) {
    if (!is_integer(v)) {
      throw DomainError(ErrorCode::NotACocharacter,
                        "mu must have integer entries");
    }
  }
  Rat deg;
  if (b.group().family == GroupFamily::GL) {
    deg = mu.total();
  } else {
    const std::size_t two_n = mu.len();
    const Rat c = mu[0] + mu[two_n - 1];
    for (std::size_t i = 2; 2 * i <= two_n; ++i) {
      if (mu[i - 1] + mu[two_n - i] != c) {
        throw DomainError(ErrorCode::NotACocharacter,
                          "mu must satisfy the symplectic pairing", i);
      }
    }
    deg = c;
  }
  if (kottwitz(bt) != kottwitz(b) - deg) return false;
  return bruhat_leq(bt.nu(), add(b.nu(), mu.dual()));
}

/// The instance (b̃, b, μ′) whose stratum is nonempty iff the stratum of
/// (b, b̃, μ) is: μ′ is the dual shape, d′ = −(d+1) for ordinary shapes
/// (since μ⋆ = −(d+1)·𝟙 + μ_ord) and d′ = −d for central ones. Applying it
/// twice returns the original instance.
struct DualInstance {
  NewtonClass b;
  NewtonClass bt;
  MinusculeShape mu;
};

inline DualInstance dual_equivalence(const NewtonClass& b,
                                     const NewtonClass& bt,
                                     const MinusculeShape& mu) {
  detail::require_decidable_pair(b, bt, mu);
  MinusculeShape dual_shape{mu.n, mu.ordinary ? Int(-(mu.d + 1)) : Int(-mu.d),
                            mu.ordinary};
  return DualInstance{bt, b, dual_shape};
}

/// All b̃ whose stratum for (b, μ) is nonempty: the slopewise band
/// [ν_b − (d+1)·𝟙, ν_b − d·𝟙] with total Σν_b − n(2d+1) filtered by decide
/// for ordinary shapes; the single exact shift for central ones. Order is
/// the enumeration order (ascending partial-sum vectors).
inline std::vector<NewtonClass> enumerate_nonempty(
    const NewtonClass& b, const MinusculeShape& mu,
    const EnumerateOptions& options = {}) {
  if (b.group().family != GroupFamily::GSp || mu.n != b.n()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "enumerate_nonempty needs a GSp class matching the "
                      "shape's rank");
  }
  detail::require_gap(b);
  const std::size_t n = b.n();
  if (!mu.ordinary) {
    NewtonClass shifted(b.group(), b.nu().shifted(Rat(-mu.d)));
    if (!decide(b, shifted, mu).nonempty) {
      throw internal_error("the central shift must decide nonempty");
    }
    return {std::move(shifted)};
  }
  const Polygon lower = b.nu().shifted(Rat(-(mu.d + 1)));
  const Polygon upper = b.nu().shifted(Rat(-mu.d));
  const Rat total = b.nu().total() - Rat(n) * Rat(2 * mu.d + 1);
  std::vector<NewtonClass> band = enumerate_gsp(n, lower, upper, total, options);
  std::vector<NewtonClass> out;
  for (const NewtonClass& candidate : band) {
    if (decide(b, candidate, mu).nonempty) out.push_back(candidate);
  }
  return out;
}

}  // namespace newton_strata
