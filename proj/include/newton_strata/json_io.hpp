#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encoding/decoding for every public type.
 *
 * Conventions: rationals are strings "p/q" (or "p" when the value is an
 * integer); integer JSON numbers are also accepted on input. Objects use
 * insertion-ordered keys (nlohmann::ordered_json) so emitted output is
 * byte-deterministic. Malformed input raises DomainError(MalformedInput);
 * the CLI maps that to exit code 2.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "newton_strata/errors.hpp"
#include "newton_strata/levi.hpp"
#include "newton_strata/newton_class.hpp"
#include "newton_strata/polygon.hpp"
#include "newton_strata/rational.hpp"
#include "newton_strata/strata.hpp"

namespace newton_strata {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

inline Json rational_to_json(const Rat& r) { return format_rational(r); }

inline Json rational_list_to_json(const std::vector<Rat>& values) {
  Json out = Json::array();
  for (const Rat& v : values) out.push_back(rational_to_json(v));
  return out;
}

inline Json polygon_to_json(const Polygon& p) {
  return rational_list_to_json(p.slopes());
}

inline Json newton_class_to_json(const NewtonClass& b) {
  Json out = Json::object();
  out["group"] = group_family_name(b.group().family);
  out["n"] = b.n();
  out["nu"] = polygon_to_json(b.nu());
  return out;
}

inline Json partition_to_json(const OrderedPartition& alpha) {
  Json out = Json::object();
  out["n"] = alpha.n();
  out["parts"] = alpha.parts();
  return out;
}

inline Json levi_cocharacter_to_json(const LeviCocharacter& mu) {
  Json out = Json::object();
  out["alpha"] = partition_to_json(mu.alpha());
  out["slopes"] = rational_list_to_json(mu.slopes());
  return out;
}

inline Json levi_blocks_to_json(const LeviBlocks& blocks) {
  Json out = Json::object();
  out["alpha"] = partition_to_json(blocks.alpha);
  Json gl = Json::array();
  for (const Polygon& p : blocks.gl_blocks) gl.push_back(polygon_to_json(p));
  out["gl_blocks"] = gl;
  out["gsp_block"] =
      blocks.gsp_block ? polygon_to_json(*blocks.gsp_block) : Json::array();
  Json dual = Json::array();
  for (const Polygon& p : blocks.dual_blocks) dual.push_back(polygon_to_json(p));
  out["dual_blocks"] = dual;
  return out;
}

inline Json minuscule_shape_to_json(const MinusculeShape& mu) {
  Json out = Json::object();
  out["n"] = mu.n;
  out["d"] = format_int(mu.d);
  out["ordinary"] = mu.ordinary;
  return out;
}

inline Json certificate_to_json(const StratumCertificate& cert) {
  Json out = Json::object();
  out["alpha"] = partition_to_json(cert.alpha);
  Json dv = Json::array();
  for (const Int& d : cert.d_vector) dv.push_back(format_int(d));
  out["d_vector"] = dv;
  out["mu_bar"] = levi_cocharacter_to_json(cert.mu_bar);
  out["kappa_b"] = rational_list_to_json(cert.kappa_b);
  out["kappa_bt"] = rational_list_to_json(cert.kappa_bt);
  out["mu_bar_degree"] = rational_list_to_json(cert.mu_bar_degree);
  out["kappa_check"] = cert.kappa_check;
  out["bruhat_check"] = cert.bruhat_check;
  out["basic_check"] = cert.basic_check;
  out["notes"] = cert.notes;
  return out;
}

inline Json decision_to_json(const Decision& decision) {
  Json out = Json::object();
  out["nonempty"] = decision.nonempty;
  if (decision.failed_condition) {
    out["failed_condition"] = failed_condition_name(*decision.failed_condition);
  }
  if (decision.certificate) {
    out["certificate"] = certificate_to_json(*decision.certificate);
  }
  return out;
}

/// Error JSON: {"error": <code>, "x": <pos>} for breakpoint positions,
/// {"error": <code>, "i": <pos>} for pair/block indices.
inline Json domain_error_to_json(const DomainError& e) {
  Json out = Json::object();
  out["error"] = error_code_name(e.code());
  if (e.position()) {
    const char* key =
        e.code() == ErrorCode::NonIntegerBreakpoint ? "x" : "i";
    out[key] = *e.position();
  }
  out["message"] = e.what();
  return out;
}

inline Json validation_issue_to_json(const ValidationIssue& issue) {
  Json out = Json::object();
  out["error"] = error_code_name(issue.code);
  if (issue.position) {
    const char* key =
        issue.code == ErrorCode::NonIntegerBreakpoint ? "x" : "i";
    out[key] = *issue.position;
  }
  out["message"] = issue.message;
  return out;
}

// ---------------------------------------------------------------------------
// Decoding
// ---------------------------------------------------------------------------

namespace detail {
inline DomainError bad_input(const std::string& why) {
  return DomainError(ErrorCode::MalformedInput, why);
}
}  // namespace detail

inline Rat rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    return Rat(Int(j.get<long long>()));
  }
  throw detail::bad_input("expected a rational as \"p/q\" string or integer");
}

inline Int int_from_json(const Json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw detail::bad_input("expected an integer or integer string");
}

inline std::vector<Rat> rational_list_from_json(const Json& j) {
  if (!j.is_array()) throw detail::bad_input("expected an array of rationals");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(rational_from_json(v));
  return out;
}

inline Polygon polygon_from_json(const Json& j) {
  return Polygon(rational_list_from_json(j));
}

inline GroupFamily group_family_from_string(const std::string& s) {
  if (s == "GL") return GroupFamily::GL;
  if (s == "GSp") return GroupFamily::GSp;
  throw detail::bad_input("unknown group \"" + s + "\" (expected GL or GSp)");
}

inline std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) {
    throw detail::bad_input(std::string("expected a nonnegative integer for ") +
                            what);
  }
  long long v = j.get<long long>();
  if (v < 0) {
    throw detail::bad_input(std::string(what) + " must be nonnegative");
  }
  return static_cast<std::size_t>(v);
}

inline NewtonClass newton_class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("n") ||
      !j.contains("nu")) {
    throw detail::bad_input(
        "expected an object with \"group\", \"n\", and \"nu\"");
  }
  if (!j["group"].is_string()) {
    throw detail::bad_input("\"group\" must be \"GL\" or \"GSp\"");
  }
  GroupFamily family = group_family_from_string(j["group"].get<std::string>());
  std::size_t n = size_from_json(j["n"], "\"n\"");
  return NewtonClass(GroupTag{family, n}, polygon_from_json(j["nu"]));
}

inline OrderedPartition partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("parts") ||
      !j["parts"].is_array()) {
    throw detail::bad_input(
        "expected an object with \"n\" and a \"parts\" array");
  }
  std::vector<std::size_t> parts;
  for (const Json& p : j["parts"]) {
    parts.push_back(size_from_json(p, "partition part"));
  }
  return OrderedPartition(size_from_json(j["n"], "\"n\""), std::move(parts));
}

inline LeviCocharacter levi_cocharacter_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("slopes")) {
    throw detail::bad_input(
        "expected an object with \"alpha\" and \"slopes\"");
  }
  return LeviCocharacter(partition_from_json(j["alpha"]),
                         rational_list_from_json(j["slopes"]));
}

inline MinusculeShape minuscule_shape_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") ||
      !j.contains("ordinary") || !j["ordinary"].is_boolean()) {
    throw detail::bad_input(
        "expected an object with \"n\", \"d\", and boolean \"ordinary\"");
  }
  return MinusculeShape{size_from_json(j["n"], "\"n\""),
                        int_from_json(j["d"]), j["ordinary"].get<bool>()};
}

}  // namespace newton_strata
