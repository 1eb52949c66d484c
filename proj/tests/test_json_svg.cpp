// JSON encoding/decoding for every public type, error payload shapes, and
// the deterministic SVG rendering.

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "oracles.hpp"
#include "testutil.hpp"

using namespace newton_strata;
using testutil::GL;
using testutil::GSp;
using testutil::P;
using testutil::R;
using testutil::V;

TEST_CASE("rationals encode as p/q strings and decode from strings or ints") {
  CHECK(rational_to_json(R("5/2")) == Json("5/2"));
  CHECK(rational_to_json(R("-3")) == Json("-3"));
  CHECK(rational_from_json(Json::parse("\"5/2\"")) == R("5/2"));
  CHECK(rational_from_json(Json::parse("\"-7\"")) == R("-7"));
  CHECK(rational_from_json(Json::parse("7")) == R("7"));
  CHECK(rational_from_json(Json::parse("-2")) == R("-2"));
  CHECK(testutil::throws_code(
      [] { rational_from_json(Json::parse("2.5")); },
      ErrorCode::MalformedInput));
  CHECK(testutil::throws_code(
      [] { rational_from_json(Json::parse("\"5/2x\"")); },
      ErrorCode::MalformedInput));
  CHECK(testutil::throws_code(
      [] { rational_from_json(Json::parse("\"1/0\"")); },
      ErrorCode::MalformedInput));
  CHECK(testutil::throws_code([] { int_from_json(Json::parse("\"1/2\"")); },
                              ErrorCode::MalformedInput));
  CHECK(int_from_json(Json::parse("\"-12\"")) == Int(-12));
}

TEST_CASE("core types round-trip through JSON") {
  NewtonClass b = GSp(2, {"5/2", "5/2", "1/2", "1/2"});
  CHECK(newton_class_from_json(newton_class_to_json(b)) == b);

  NewtonClass g = GL(3, {"4/3", "4/3", "4/3"});
  Json jg = newton_class_to_json(g);
  CHECK(jg["group"] == Json("GL"));
  CHECK(newton_class_from_json(jg) == g);

  OrderedPartition alpha(5, {2, 1});
  Json ja = partition_to_json(alpha);
  CHECK(ja["parts"] == Json::parse("[2,1]"));
  OrderedPartition back = partition_from_json(ja);
  CHECK(back.n() == 5);
  CHECK(back.parts() == alpha.parts());

  LeviCocharacter mu(OrderedPartition(2, {2}), V({"1", "0", "1", "0"}));
  LeviCocharacter mu_back = levi_cocharacter_from_json(levi_cocharacter_to_json(mu));
  CHECK(mu_back.alpha().parts() == mu.alpha().parts());
  CHECK(mu_back.slopes() == mu.slopes());

  MinusculeShape s{3, Int(-1), true};
  Json js = minuscule_shape_to_json(s);
  CHECK(js["d"] == Json("-1"));
  CHECK(minuscule_shape_from_json(js) == s);

  CHECK(polygon_from_json(polygon_to_json(P({"1/2", "-1/2"}))) ==
        P({"1/2", "-1/2"}));
}

TEST_CASE("malformed JSON inputs are rejected with MalformedInput") {
  CHECK(testutil::throws_code(
      [] { newton_class_from_json(Json::parse("{\"group\":\"Sp\",\"n\":2,\"nu\":[]}")); },
      ErrorCode::MalformedInput));
  CHECK(testutil::throws_code(
      [] { newton_class_from_json(Json::parse("{\"n\":2}")); },
      ErrorCode::MalformedInput));
  CHECK(testutil::throws_code(
      [] { minuscule_shape_from_json(Json::parse("{\"n\":2,\"d\":\"0\"}")); },
      ErrorCode::MalformedInput));
  CHECK(testutil::throws_code(
      [] { partition_from_json(Json::parse("{\"n\":2,\"parts\":[-1]}")); },
      ErrorCode::MalformedInput));
  CHECK(testutil::throws_code(
      [] { polygon_from_json(Json::parse("{\"not\":\"array\"}")); },
      ErrorCode::MalformedInput));
}

TEST_CASE("decision JSON has the frozen field layout") {
  NewtonClass b = GSp(2, {"5/2", "5/2", "1/2", "1/2"});
  MinusculeShape mu{2, Int(0), true};

  Json pos = decision_to_json(decide(b, GSp(2, {"2", "2", "0", "0"}), mu));
  CHECK(pos["nonempty"] == Json(true));
  CHECK_FALSE(pos.contains("failed_condition"));
  REQUIRE(pos.contains("certificate"));
  const Json& cert = pos["certificate"];
  CHECK(cert["alpha"] == Json::parse("{\"n\":2,\"parts\":[2]}"));
  CHECK(cert["d_vector"] == Json::parse("[\"1\",\"0\"]"));
  CHECK(cert["mu_bar"]["slopes"] == Json::parse("[\"1\",\"0\",\"1\",\"0\"]"));
  CHECK(cert["kappa_b"] == Json::parse("[\"5\",\"3\"]"));
  CHECK(cert["kappa_bt"] == Json::parse("[\"4\",\"2\"]"));
  CHECK(cert["mu_bar_degree"] == Json::parse("[\"1\",\"1\"]"));
  CHECK(cert["kappa_check"] == Json(true));
  CHECK(cert["bruhat_check"] == Json(true));
  CHECK(cert["basic_check"] == Json(true));
  CHECK(cert["notes"].is_array());
  // Key order is insertion order, so serialized output is frozen.
  CHECK(pos.dump().rfind("{\"nonempty\":true,\"certificate\":{\"alpha\":", 0) == 0);

  Json neg = decision_to_json(decide(b, GSp(2, {"1", "1", "1", "1"}), mu));
  CHECK(neg.dump() ==
        "{\"nonempty\":false,\"failed_condition\":\"SlopewiseLower\"}");
}

TEST_CASE("error JSON uses x for breakpoint positions and i for indices") {
  try {
    GL(2, {"3/2", "1/2"});
    FAIL("expected NonIntegerBreakpoint");
  } catch (const DomainError& e) {
    Json j = domain_error_to_json(e);
    CHECK(j["error"] == Json("NonIntegerBreakpoint"));
    CHECK(j["x"] == Json(1));
    CHECK_FALSE(j.contains("i"));
    CHECK(j["message"].is_string());
  }

  try {
    GSp(2, {"1", "1", "0", "-1"});
    FAIL("expected SymmetryViolation");
  } catch (const DomainError& e) {
    Json j = domain_error_to_json(e);
    CHECK(j["error"] == Json("SymmetryViolation"));
    CHECK(j["i"] == Json(2));
    CHECK_FALSE(j.contains("x"));
  }

  try {
    build_mu_bar(P({"2", "2", "2", "-1", "-1", "-1"}),
                 P({"1/2", "1/2", "1/2", "1/2", "1/2", "1/2"}),
                 OrderedPartition(3, {3}));
    FAIL("expected NonIntegerDi");
  } catch (const DomainError& e) {
    Json j = domain_error_to_json(e);
    CHECK(j["error"] == Json("NonIntegerDi"));
    CHECK(j["i"] == Json(1));
  }

  auto issue = NewtonClass::check(GroupTag{GroupFamily::GSp, 2},
                                  P({"1", "1", "0", "-1"}));
  REQUIRE(issue.has_value());
  Json j = validation_issue_to_json(*issue);
  CHECK(j["error"] == Json("SymmetryViolation"));
  CHECK(j["i"] == Json(2));
}

TEST_CASE("Levi blocks JSON: gsp_block is [] exactly when absent") {
  NewtonClass b = GSp(2, {"5/2", "5/2", "1/2", "1/2"});
  LeviBlocks full = split_blocks(b.nu(), OrderedPartition(2, {2}));
  Json jf = levi_blocks_to_json(full);
  CHECK(jf["gsp_block"] == Json::array());
  CHECK(jf["gl_blocks"] == Json::parse("[[\"5/2\",\"5/2\"]]"));
  CHECK(jf["dual_blocks"] == Json::parse("[[\"1/2\",\"1/2\"]]"));

  LeviBlocks mid = split_blocks(P({"3", "3", "1", "1"}), OrderedPartition(2, {1}));
  Json jm = levi_blocks_to_json(mid);
  CHECK(jm["gsp_block"] == Json::parse("[\"3\",\"1\"]"));
}

TEST_CASE("random classes and shapes survive a JSON round-trip") {
  corpus::Rng rng(90210u);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(corpus::rand_int(rng, 1, 3));
    NewtonClass b = corpus::random_class(rng, n, false);
    CHECK(newton_class_from_json(newton_class_to_json(b)) == b);

    OrderedPartition alpha = centralizer_partition(b);
    OrderedPartition alpha_back = partition_from_json(partition_to_json(alpha));
    CHECK(alpha_back.parts() == alpha.parts());
    CHECK(alpha_back.n() == alpha.n());

    // nu_b itself is a valid cocharacter of its own centralizer Levi.
    LeviCocharacter levi_b(alpha, b.nu().slopes());
    LeviCocharacter levi_back =
        levi_cocharacter_from_json(levi_cocharacter_to_json(levi_b));
    CHECK(levi_back.slopes() == levi_b.slopes());

    MinusculeShape mu{n, Int(corpus::rand_int(rng, -5, 5)),
                      corpus::rand_int(rng, 0, 1) == 1};
    CHECK(minuscule_shape_from_json(minuscule_shape_to_json(mu)) == mu);
  }
}

TEST_CASE("SVG output is structurally sound and byte-deterministic") {
  Polygon nu_b = P({"5/2", "5/2", "1/2", "1/2"});
  Polygon nu_bt = P({"2", "2", "0", "0"});
  Polygon mu = MinusculeShape{2, Int(0), true}.to_polygon();

  const std::string svg = render_decision_svg(nu_b, nu_bt, mu);
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(svg.size() >= 7);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  for (const char* color : {"#d62728", "#1f77b4", "#2ca02c", "#17becf"}) {
    CHECK(svg.find(color) != std::string::npos);
  }
  for (const char* label : {"nu_b", "nu_b + mu*", "nu_bt", "nu_bt + 1"}) {
    CHECK(svg.find(label) != std::string::npos);
  }
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  // Exact arithmetic leaves no scientific notation or non-finite artifacts.
  // ("e-" appears legitimately in attribute names like stroke-width.)
  CHECK(svg.find("e+") == std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);

  CHECK(render_decision_svg(nu_b, nu_bt, mu) == svg);

  // Fractional heights appear as truncated decimals (y = 5/2 somewhere).
  CHECK(svg.find(".") != std::string::npos);
}

TEST_CASE("SVG rendering rejects bad input") {
  Polygon nu_b = P({"5/2", "5/2", "1/2", "1/2"});
  CHECK(testutil::throws_code(
      [&] { render_decision_svg(nu_b, testutil::P({"1", "0"}), nu_b); },
      ErrorCode::DimensionMismatch));
  CHECK(testutil::throws_code(
      [&] {
        render_decision_svg(nu_b, nu_b, testutil::P({"0", "1", "0", "-1"}));
      },
      ErrorCode::NotDominant));
}
