#include "metabelian/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>

#include "metabelian/canonical.hpp"
#include "metabelian/oracle.hpp"
#include "metabelian/parser.hpp"
#include "metabelian/weitzenbock.hpp"

namespace metab {

namespace {

using nlohmann::json;

struct Settings {
  int d = 0;
  int max_degree = -1;
  std::string expr;
  std::string alpha;
  std::string format = "text";
  bool parallel = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Shape { Expression, Graded, Listing };

struct CommandSpec {
  const char* name;
  const char* help;
  Shape shape;
};

constexpr CommandSpec kCommands[] = {
    {"straighten", "rewrite x/u products (optionally a/w headed) into the canonical basis", Shape::Expression},
    {"bracket", "evaluate an expression in the wreath product W", Shape::Expression},
    {"embed", "image of a bracket expression in W", Shape::Expression},
    {"delta", "apply the derivation, or the shift y -> y + alpha*x with --alpha", Shape::Expression},
    {"is-constant", "whether the derivation annihilates the expression", Shape::Expression},
    {"is-lie", "whether an element of C lies in the image of the commutator ideal", Shape::Expression},
    {"reduce-mod-l", "residue of a constant of C modulo the submodule L", Shape::Expression},
    {"is-in-l", "whether a constant of C lies in the submodule L", Shape::Expression},
    {"kernel-dim", "per-degree kernel dimensions of the derivation", Shape::Graded},
    {"verify-nowicki", "check the generators of the polynomial constants degree by degree", Shape::Graded},
    {"verify-corollary", "check the generators of the Lie constants degree by degree", Shape::Graded},
    {"list-generators", "generators of L with their bracket preimages", Shape::Listing},
};

/// What a command produced: the text line(s), the JSON payload and whether
/// it counts as success.
struct Outcome {
  std::string text;
  json payload;
  bool ok = true;
};

WreathElement as_wreath(const ParsedValue& v) {
  if (auto* w = std::get_if<WreathElement>(&v)) return *w;
  if (auto* l = std::get_if<LieExpr>(&v)) return embed(*l);
  if (auto* m = std::get_if<FormalModuleElement>(&v)) return expand(*m);
  throw UsageError("expected an element of W (a bracket, or a combination of a, b, p, q, w)");
}

WreathElement as_module_element(const ParsedValue& v) {
  WreathElement w = as_wreath(v);
  if (!w.in_module()) throw DomainError("element has a component outside the module C");
  return w;
}

Outcome boolean(bool value, const json& extra = json::object()) {
  Outcome o{value ? "true" : "false", extra, value};
  o.payload["result"] = value;
  return o;
}

Outcome run_expression(const std::string& command, const Settings& s) {
  const int d = s.d;
  if (s.expr.empty()) throw UsageError(command + " requires --expr");
  if (!s.alpha.empty() && command != "delta") throw UsageError("--alpha only applies to delta");

  if (command == "straighten") {
    const ParsedValue v = parse_expr(s.expr, d);
    if (std::holds_alternative<FormalModuleElement>(v)) {
      const auto r = straighten_module(std::get<FormalModuleElement>(v));
      return {to_string(r), {{"result", to_string(r)}}};
    }
    const auto r = straighten_scalar(parse_scalar(s.expr, d));
    return {to_string(r), {{"result", to_string(r)}}};
  }
  if (command == "bracket") {
    const auto r = parse_wreath(s.expr, d);
    return {to_string(r), {{"result", to_string(r)}}};
  }
  if (command == "embed") {
    const auto r = embed(parse_lie(s.expr, d));
    return {to_string(r), {{"result", to_string(r)}}};
  }

  const ParsedValue v = parse_expr(s.expr, d);
  const bool polynomial = std::holds_alternative<Poly>(v) || std::holds_alternative<FormalScalar>(v);
  auto as_poly = [&] {
    if (auto* p = std::get_if<Poly>(&v)) return *p;
    return expand(std::get<FormalScalar>(v));
  };

  if (command == "delta") {
    if (!s.alpha.empty()) {
      if (!polynomial) throw UsageError("--alpha needs a polynomial expression");
      Rational alpha;
      if (alpha.set_str(s.alpha, 10) != 0) throw UsageError("invalid rational for --alpha: " + s.alpha);
      alpha.canonicalize();
      const auto r = shift_action(as_poly(), alpha);
      return {to_string(r), {{"result", to_string(r)}, {"alpha", to_string(alpha)}}};
    }
    std::string r;
    if (polynomial)
      r = to_string(delta(as_poly()));
    else if (auto* l = std::get_if<LieExpr>(&v))
      r = to_string(delta(*l));
    else
      r = to_string(delta(as_wreath(v)));
    return {r, {{"result", r}}};
  }
  if (command == "is-constant") {
    if (polynomial) return boolean(is_constant(as_poly()));
    return boolean(is_constant(as_wreath(v)));
  }
  if (command == "is-lie") return boolean(is_lie_element(as_module_element(v)));

  if (command == "reduce-mod-l" || command == "is-in-l") {
    FormalModuleElement formal(d);
    bool lie;
    if (auto* m = std::get_if<FormalModuleElement>(&v)) {
      formal = *m;
      lie = is_lie_element(expand(*m));
    } else {
      const WreathElement w = as_module_element(v);
      formal = module_canonical_form(w);
      lie = is_lie_element(w);
    }
    const auto residue = reduce_mod_L(formal);
    const json extra{{"residue", to_string(residue)}, {"lie", lie}};
    if (command == "is-in-l") return boolean(residue.is_zero(), extra);
    return {to_string(residue), extra};
  }
  throw UsageError("unknown command " + command);
}

json report_json(const GradedReport& rep) {
  json degrees = json::array();
  for (const auto& r : rep.degrees) {
    json e{{"n", r.n}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}};
    for (const auto& [k, v] : r.details) e[k] = v;
    degrees.push_back(std::move(e));
  }
  return json{{"command", rep.command},
              {"d", rep.d},
              {"max_degree", rep.max_degree},
              {"degrees", std::move(degrees)},
              {"pass", rep.pass()}};
}

std::string report_text(const GradedReport& rep) {
  std::string s = rep.command + " d=" + std::to_string(rep.d) + " max_degree=" + std::to_string(rep.max_degree) + "\n";
  for (const auto& r : rep.degrees) {
    s += "  n=" + std::to_string(r.n) + " expected=" + std::to_string(r.expected) +
         " actual=" + std::to_string(r.actual);
    for (const auto& [k, v] : r.details) s += " " + k + "=" + std::to_string(v);
    s += r.pass ? " ok\n" : " MISMATCH\n";
  }
  s += rep.pass() ? "PASS" : "FAIL";
  return s;
}

Outcome run_graded(const std::string& command, const Settings& s) {
  if (s.max_degree < 0) throw UsageError(command + " requires --max-degree >= 0");
  OracleOptions opts;
  opts.parallel = s.parallel;
  GradedReport rep;
  if (command == "kernel-dim")
    rep = kernel_dimensions(s.d, s.max_degree, opts);
  else if (command == "verify-nowicki")
    rep = verify_nowicki(s.d, s.max_degree, opts);
  else
    rep = verify_main_theorem(s.d, s.max_degree, opts);
  return {report_text(rep), report_json(rep), rep.pass()};
}

Outcome run_listing(const Settings& s) {
  Outcome o;
  json list = json::array();
  for (const auto& g : L_generators(s.d)) {
    std::string idx;
    for (int i : g.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    if (!o.text.empty()) o.text += '\n';
    o.text += g.family + "(" + idx + "): " + to_string(g.formal) + "  <-  " + to_string(g.preimage);
    list.push_back({{"family", g.family},
                    {"indices", g.indices},
                    {"generator", to_string(g.formal)},
                    {"element", to_string(g.element)},
                    {"preimage", to_string(g.preimage)}});
  }
  o.payload = {{"generators", std::move(list)}};
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the free metabelian Lie algebra and its constants", "metabelian"};
  app.require_subcommand(1);
  Settings s;

  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--d", s.d, "rank d (number of x and of y variables)")->required();
    if (c.shape == Shape::Expression) {
      sub->add_option("--expr", s.expr, "input expression")->required();
      if (std::string(c.name) == "delta") sub->add_option("--alpha", s.alpha, "shift parameter (rational)");
    }
    if (c.shape == Shape::Graded) {
      sub->add_option("--max-degree", s.max_degree, "largest degree to check")->required();
      sub->add_flag("--parallel", s.parallel, "process degrees concurrently");
    }
    sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto spec = std::find_if(std::begin(kCommands), std::end(kCommands),
                                 [&](const CommandSpec& c) { return command == c.name; });

  Outcome o;
  try {
    check_rank(s.d);
    switch (spec->shape) {
      case Shape::Expression:
        o = run_expression(command, s);
        break;
      case Shape::Graded:
        o = run_graded(command, s);
        break;
      case Shape::Listing:
        o = run_listing(s);
        break;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (s.format == "json") {
    json j = o.payload.is_object() ? o.payload : json::object();
    if (spec->shape != Shape::Graded) {
      j["command"] = command;
      j["d"] = s.d;
      if (spec->shape == Shape::Expression) j["expr"] = s.expr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << o.text << '\n';
  }
  return o.ok ? 0 : 1;
}

}  // namespace metab
