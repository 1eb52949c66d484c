// newton-strata: command-line front end for the Newton stratum library.
//
// Verbs: validate, kappa, compare, decide, enumerate, reduce, mubar, render.
// Inputs arrive as inline flags (lists in bracket syntax, e.g.
// "[5/2,5/2,1/2,1/2]") or as a JSON document via --input whose keys mirror
// the flag names; inline flags win on conflict. JSON results go to standard
// output (or --out FILE); `render` emits SVG instead.
//
// Exit codes:
//   0  success
//   1  domain rejection (validation failure, unsupported hypothesis, ...)
//   2  malformed input (bad flags, unparseable numbers, bad JSON)
//   3  enumeration overflow (partial results in the error JSON)
//
// The enumeration cap is NEWTON_STRATA_MAX_CANDIDATES (default 1000000).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "newton_strata/newton_strata.hpp"

namespace ns = newton_strata;
using ns::Json;

namespace {

ns::DomainError malformed(const std::string& why) {
  return ns::DomainError(ns::ErrorCode::MalformedInput, why);
}

// "[a, b, c]" (brackets optional) -> JSON array of trimmed token strings.
Json parse_bracket_list(const std::string& text) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw malformed("empty list");
  }
  body = body.substr(first, last - first + 1);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw malformed("unbalanced brackets in list");
    body = body.substr(1, body.size() - 2);
  }
  Json out = Json::array();
  std::string token;
  auto flush = [&]() {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw malformed("empty entry in list");
    out.push_back(token.substr(b, e - b + 1));
    token.clear();
  };
  bool any = false;
  for (char c : body) {
    if (c == ',') {
      flush();
      any = true;
    } else {
      token.push_back(c);
    }
  }
  if (any || token.find_first_not_of(" \t") != std::string::npos) flush();
  return out;
}

// Inline flag slots; everything is funneled into one JSON object so that
// --input documents and inline flags share a single lookup path.
struct Slots {
  std::string input;
  std::string out;
  std::string group;
  std::string n;
  std::string nu;
  std::string a;
  std::string b;
  std::string bt;
  std::string mu;
  std::string d;
  std::string alpha;
  bool sort_right = false;
};

Json merge_arguments(const Slots& s) {
  Json merged = Json::object();
  if (!s.input.empty()) {
    std::ifstream in(s.input);
    if (!in) throw malformed("cannot open --input file: " + s.input);
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      throw malformed("--input file is not a JSON object");
    }
    merged = doc;
  }
  auto put = [&](const char* key, const std::string& value, bool list) {
    if (value.empty()) return;
    merged[key] = list ? parse_bracket_list(value) : Json(value);
  };
  put("group", s.group, false);
  put("n", s.n, false);
  put("nu", s.nu, true);
  put("a", s.a, true);
  put("b", s.b, true);
  put("bt", s.bt, true);
  // --mu is "ordinary"/"central" for GSp verbs, a bracket list for GL ones.
  if (!s.mu.empty()) {
    merged["mu"] = s.mu.find('[') != std::string::npos || s.mu.find(',') != std::string::npos
                       ? parse_bracket_list(s.mu)
                       : Json(s.mu);
  }
  put("d", s.d, false);
  put("alpha", s.alpha, true);
  if (s.sort_right) merged["sort-right"] = true;
  return merged;
}

const Json& require_key(const Json& args, const char* key) {
  if (!args.contains(key)) {
    throw malformed(std::string("missing required argument: ") + key);
  }
  return args.at(key);
}

std::size_t get_size(const Json& args, const char* key) {
  const Json& v = require_key(args, key);
  if (v.is_string()) {
    ns::Int i = ns::parse_int(v.get<std::string>());
    if (i < 0) throw malformed(std::string(key) + " must be nonnegative");
    return i.convert_to<std::size_t>();
  }
  return ns::size_from_json(v, key);
}

std::vector<ns::Rat> get_list(const Json& args, const char* key) {
  const Json& v = require_key(args, key);
  if (v.is_string()) {
    return ns::rational_list_from_json(parse_bracket_list(v.get<std::string>()));
  }
  return ns::rational_list_from_json(v);
}

ns::Int get_int_or(const Json& args, const char* key, ns::Int fallback) {
  if (!args.contains(key)) return fallback;
  return ns::int_from_json(args.at(key));
}

ns::GroupFamily get_group_or(const Json& args, ns::GroupFamily fallback) {
  if (!args.contains("group")) return fallback;
  const Json& v = args.at("group");
  if (!v.is_string()) throw malformed("group must be a string");
  return ns::group_family_from_string(v.get<std::string>());
}

ns::NewtonClass get_class(const Json& args, ns::GroupFamily family,
                          std::size_t n, const char* key) {
  return ns::NewtonClass(ns::GroupTag{family, n},
                         ns::Polygon(get_list(args, key)));
}

ns::OrderedPartition get_alpha_or_centralizer(const Json& args, std::size_t n,
                                              const ns::Polygon& nu) {
  if (!args.contains("alpha")) return ns::centralizer_partition(nu, n);
  const Json& v = args.at("alpha");
  Json list = v.is_string() ? parse_bracket_list(v.get<std::string>()) : v;
  if (!list.is_array()) throw malformed("alpha must be a list of parts");
  std::vector<std::size_t> parts;
  for (const Json& p : list) {
    if (p.is_string()) {
      ns::Int i = ns::parse_int(p.get<std::string>());
      if (i <= 0) throw malformed("alpha parts must be positive");
      parts.push_back(i.convert_to<std::size_t>());
    } else {
      parts.push_back(ns::size_from_json(p, "alpha part"));
    }
  }
  return ns::OrderedPartition(n, std::move(parts));
}

ns::MinusculeShape get_shape(const Json& args, std::size_t n) {
  const Json& v = require_key(args, "mu");
  if (!v.is_string()) {
    throw malformed("mu must be \"ordinary\" or \"central\" for this verb");
  }
  std::string kind = v.get<std::string>();
  ns::Int d = get_int_or(args, "d", ns::Int(0));
  if (kind == "ordinary") return ns::MinusculeShape{n, d, true};
  if (kind == "central") return ns::MinusculeShape{n, d, false};
  throw malformed("mu must be \"ordinary\" or \"central\" (got \"" + kind +
                  "\")");
}

ns::EnumerateOptions enumerate_options() {
  ns::EnumerateOptions options;
  std::size_t cap = 1000000;
  if (const char* env = std::getenv("NEWTON_STRATA_MAX_CANDIDATES")) {
    std::string text(env);
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      throw malformed(
          "NEWTON_STRATA_MAX_CANDIDATES must be a nonnegative integer");
    }
    cap = ns::parse_int(text).convert_to<std::size_t>();
  }
  options.max_candidates = cap;
  return options;
}

void emit(const Json& result, const std::string& out_path) {
  std::string text = result.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw malformed("cannot open --out file: " + out_path);
    out << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw malformed("cannot open --out file: " + out_path);
    out << text;
  }
}

// ---------------------------------------------------------------------------
// Verb implementations. Each returns the result JSON.
// ---------------------------------------------------------------------------

Json run_validate(const Json& args) {
  ns::GroupFamily family = get_group_or(args, ns::GroupFamily::GSp);
  std::size_t n = get_size(args, "n");
  ns::NewtonClass cls = get_class(args, family, n, "nu");
  Json out = ns::newton_class_to_json(cls);
  out["valid"] = true;
  out["kappa"] = ns::format_rational(ns::kottwitz(cls));
  out["basic"] = ns::is_basic(cls);
  return out;
}

Json run_kappa(const Json& args) {
  ns::GroupFamily family = get_group_or(args, ns::GroupFamily::GSp);
  std::size_t n = get_size(args, "n");
  ns::NewtonClass cls = get_class(args, family, n, "nu");
  Json out = Json::object();
  out["kappa"] = ns::format_rational(ns::kottwitz(cls));
  return out;
}

Json run_compare(const Json& args) {
  ns::Polygon a(get_list(args, "a"));
  ns::Polygon b(get_list(args, "b"));
  ns::RightOperandPolicy policy =
      args.contains("sort-right") && args.at("sort-right").is_boolean() &&
              args.at("sort-right").get<bool>()
          ? ns::RightOperandPolicy::SortIfNeeded
          : ns::RightOperandPolicy::Reject;
  Json out = Json::object();
  out["bruhat_a_leq_b"] = ns::bruhat_leq(a, b, policy);
  out["bruhat_b_leq_a"] = ns::bruhat_leq(b, a, policy);
  out["slopewise_a_leq_b"] = ns::slopewise_leq(a, b);
  out["slopewise_b_leq_a"] = ns::slopewise_leq(b, a);
  return out;
}

Json run_decide(const Json& args) {
  ns::GroupFamily family = get_group_or(args, ns::GroupFamily::GSp);
  std::size_t n = get_size(args, "n");
  if (family == ns::GroupFamily::GL) {
    ns::NewtonClass b = get_class(args, family, n, "b");
    ns::NewtonClass bt = get_class(args, family, n, "bt");
    ns::Polygon mu(get_list(args, "mu"));
    Json out = Json::object();
    out["necessary"] = ns::gl_necessary(b, bt, mu);
    return out;
  }
  ns::NewtonClass b = get_class(args, family, n, "b");
  ns::NewtonClass bt = get_class(args, family, n, "bt");
  ns::MinusculeShape mu = get_shape(args, n);
  return ns::decision_to_json(ns::decide(b, bt, mu));
}

Json run_enumerate(const Json& args) {
  std::size_t n = get_size(args, "n");
  ns::NewtonClass b = get_class(args, ns::GroupFamily::GSp, n, "b");
  ns::MinusculeShape mu = get_shape(args, n);
  std::vector<ns::NewtonClass> classes =
      ns::enumerate_nonempty(b, mu, enumerate_options());
  Json list = Json::array();
  for (const ns::NewtonClass& c : classes) {
    list.push_back(ns::newton_class_to_json(c));
  }
  Json out = Json::object();
  out["classes"] = list;
  return out;
}

Json run_reduce(const Json& args) {
  std::size_t n = get_size(args, "n");
  ns::Polygon nu(get_list(args, "nu"));
  ns::OrderedPartition alpha = get_alpha_or_centralizer(args, n, nu);
  return ns::levi_blocks_to_json(ns::split_blocks(nu, alpha));
}

Json run_mubar(const Json& args) {
  std::size_t n = get_size(args, "n");
  ns::Polygon nu_b(get_list(args, "b"));
  ns::Polygon nu_bt(get_list(args, "bt"));
  ns::OrderedPartition alpha = get_alpha_or_centralizer(args, n, nu_b);
  ns::MuBarResult result = ns::build_mu_bar(nu_b, nu_bt, alpha);
  Json out = Json::object();
  out["alpha"] = ns::partition_to_json(alpha);
  Json dv = Json::array();
  for (const ns::Int& d : result.d_vector) dv.push_back(ns::format_int(d));
  out["d_vector"] = dv;
  out["mu_bar"] = ns::levi_cocharacter_to_json(result.mu_bar);
  return out;
}

std::string run_render(const Json& args) {
  ns::GroupFamily family = get_group_or(args, ns::GroupFamily::GSp);
  std::size_t n = get_size(args, "n");
  ns::NewtonClass b = get_class(args, family, n, "b");
  ns::NewtonClass bt = get_class(args, family, n, "bt");
  ns::Polygon mu = [&]() {
    const Json& v = require_key(args, "mu");
    if (v.is_string() && family == ns::GroupFamily::GSp) {
      return get_shape(args, n).to_polygon();
    }
    return ns::Polygon(get_list(args, "mu"));
  }();
  return ns::render_decision_svg(b.nu(), bt.nu(), mu);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton stratum calculator for minuscule Schubert cells"};
  app.require_subcommand(1);

  Slots slots;
  std::string verb;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", slots.input,
                    "JSON file whose keys mirror the flags");
    sub->add_option("--out", slots.out, "write output to FILE");
    sub->callback([&verb, sub]() { verb = sub->get_name(); });
    return sub;
  };
  auto opt_group = [&](CLI::App* sub) {
    sub->add_option("--group", slots.group, "GL or GSp (default GSp)");
  };

  CLI::App* validate = add_common(app.add_subcommand(
      "validate", "check a slope tuple and report kappa/basic"));
  opt_group(validate);
  validate->add_option("--n", slots.n, "rank parameter");
  validate->add_option("--nu", slots.nu, "slope list, e.g. \"[3/2,3/2,1/2,1/2]\"");

  CLI::App* kappa = add_common(
      app.add_subcommand("kappa", "Kottwitz invariant of a class"));
  opt_group(kappa);
  kappa->add_option("--n", slots.n, "rank parameter");
  kappa->add_option("--nu", slots.nu, "slope list");

  CLI::App* compare = add_common(app.add_subcommand(
      "compare", "partial-sum and slopewise comparisons, both directions"));
  compare->add_option("--a", slots.a, "left slope list");
  compare->add_option("--b", slots.b, "right slope list");
  compare->add_flag("--sort-right", slots.sort_right,
                    "sort a non-dominant right operand before comparing");

  CLI::App* decide = add_common(app.add_subcommand(
      "decide", "decide whether the stratum of bt in the cell of mu is nonempty"));
  opt_group(decide);
  decide->add_option("--n", slots.n, "rank parameter");
  decide->add_option("--b", slots.b, "base class slopes");
  decide->add_option("--bt", slots.bt, "candidate class slopes");
  decide->add_option("--mu", slots.mu,
                     "GSp: ordinary|central; GL: 0/1 slope list");
  decide->add_option("--d", slots.d, "central twist exponent (default 0)");

  CLI::App* enumerate_cmd = add_common(app.add_subcommand(
      "enumerate", "list every nonempty stratum in the cell"));
  enumerate_cmd->add_option("--n", slots.n, "rank parameter");
  enumerate_cmd->add_option("--b", slots.b, "base class slopes");
  enumerate_cmd->add_option("--mu", slots.mu, "ordinary|central");
  enumerate_cmd->add_option("--d", slots.d, "central twist exponent (default 0)");

  CLI::App* reduce = add_common(app.add_subcommand(
      "reduce", "split a polygon into Levi blocks (default: centralizer)"));
  reduce->add_option("--n", slots.n, "rank parameter");
  reduce->add_option("--nu", slots.nu, "slope list");
  reduce->add_option("--alpha", slots.alpha, "partition parts, e.g. \"[2,1]\"");

  CLI::App* mubar = add_common(app.add_subcommand(
      "mubar", "reduced minuscule cocharacter for a pair of classes"));
  mubar->add_option("--n", slots.n, "rank parameter");
  mubar->add_option("--b", slots.b, "base class slopes");
  mubar->add_option("--bt", slots.bt, "candidate class slopes");
  mubar->add_option("--alpha", slots.alpha, "partition parts (default: centralizer)");

  CLI::App* render = add_common(app.add_subcommand(
      "render", "SVG picture of the decision polygons"));
  opt_group(render);
  render->add_option("--n", slots.n, "rank parameter");
  render->add_option("--b", slots.b, "base class slopes");
  render->add_option("--bt", slots.bt, "candidate class slopes");
  render->add_option("--mu", slots.mu, "ordinary|central or explicit slope list");
  render->add_option("--d", slots.d, "central twist exponent (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json err = Json::object();
    err["error"] = ns::error_code_name(ns::ErrorCode::MalformedInput);
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  try {
    Json args = merge_arguments(slots);
    if (verb == "render") {
      emit_text(run_render(args), slots.out);
    } else if (verb == "validate") {
      emit(run_validate(args), slots.out);
    } else if (verb == "kappa") {
      emit(run_kappa(args), slots.out);
    } else if (verb == "compare") {
      emit(run_compare(args), slots.out);
    } else if (verb == "decide") {
      emit(run_decide(args), slots.out);
    } else if (verb == "enumerate") {
      emit(run_enumerate(args), slots.out);
    } else if (verb == "reduce") {
      emit(run_reduce(args), slots.out);
    } else if (verb == "mubar") {
      emit(run_mubar(args), slots.out);
    }
    return 0;
  } catch (const ns::CandidateLimitError& e) {
    Json err = ns::domain_error_to_json(e);
    err["limit"] = e.limit();
    Json partial = Json::array();
    for (const ns::NewtonClass& c : e.partial()) {
      partial.push_back(ns::newton_class_to_json(c));
    }
    err["partial"] = partial;
    std::cout << err.dump(2) << "\n";
    return 3;
  } catch (const ns::DomainError& e) {
    std::cout << ns::domain_error_to_json(e).dump(2) << "\n";
    return e.code() == ns::ErrorCode::MalformedInput ? 2 : 1;
  } catch (const std::exception& e) {
    Json err = Json::object();
    err["error"] = ns::error_code_name(ns::ErrorCode::InternalError);
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
