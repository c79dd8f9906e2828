#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "r3/bislice.hpp"
#include "r3/cauchy.hpp"
#include "r3/error.hpp"
#include "r3/format.hpp"
#include "r3/parse.hpp"
#include "r3/qdet.hpp"
#include "r3/qsplit.hpp"
#include "r3/stem.hpp"
#include "r3/zeros.hpp"

namespace r3::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tol = kDefaultTol;
  double fd_step = 1e-5;
  int nodes = kDefaultNodes;
  std::string output = "pretty";
};

// One command's result in both renderings.
struct Result {
  std::vector<std::string> lines;
  json record;
};

json to_json(const Element& x) { return json(x.coeffs()); }
// Adding 0.0 turns -0.0 into 0.0.
json to_json(const Quat& q) { return json::array({q.w + 0.0, q.a23 + 0.0, q.a13 + 0.0, q.a12 + 0.0}); }

json to_json(const BiSlicePoly& P) {
  json a = json::array();
  for (const auto& c : P.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const QuatMatrix2& m) {
  return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

json to_json(const SphereDescriptor& s) { return {{"center", s.center + 0.0}, {"radius", s.radius + 0.0}}; }

std::string fmt(double v) { return format_real(v); }

std::string fmt(const BiSlicePoly& P) {
  std::string s = "coeffs: [";
  for (std::size_t i = 0; i < P.coeffs().size(); ++i) s += (i ? ", " : "") + format(P.coeffs()[i]);
  return s + "]";
}

std::string fmt(const QuatMatrix2& m) {
  return "[[" + format(m.a) + ", " + format(m.b) + "], [" + format(m.c) + ", " + format(m.d) + "]]";
}

// "(t - q)" with a leading minus of q folded into the sign.
std::string linear_factor(const Quat& q) {
  const std::string v = format(q);
  return v.front() == '-' ? "(t + " + v.substr(1) + ")" : "(t - " + v + ")";
}

std::string fmt(const SphereDescriptor& s) { return "S(" + fmt(s.center) + ", " + fmt(s.radius) + ")"; }

std::string fmt(const ZeroComponent& c) { return c.is_sphere ? fmt(c.sphere) : format(c.point); }

json to_json(const ZeroComponent& c) {
  if (c.is_sphere) return {{"sphere", to_json(c.sphere)}};
  return {{"point", to_json(c.point)}};
}

std::string fmt(const SideMultiplicity& s, const char* exponent) {
  std::string out = std::string(exponent) + " = " + std::to_string(s.spherical_exponent) +
                    ", isolated = " + std::to_string(s.isolated);
  if (s.root) out += ", root = " + format(*s.root);
  return out;
}

json to_json(const SideMultiplicity& s) {
  json j{{"spherical_exponent", s.spherical_exponent}, {"isolated", s.isolated}};
  j["root"] = s.root ? to_json(*s.root) : json(nullptr);
  return j;
}

StemFunction parse_stem(const std::string& spec) {
  if (spec == "identity") return stems::identity();
  if (spec.rfind("monomial:", 0) == 0) {
    const double n = parse_real(spec.substr(9));
    if (n < 0 || n != static_cast<int>(n)) throw UsageError("monomial degree must be a nonnegative integer");
    return stems::monomial(static_cast<int>(n));
  }
  if (spec.rfind("constant:", 0) == 0) return stems::constant(parse_element(spec.substr(9)));
  throw UsageError("unknown stem '" + spec + "' (identity, monomial:<n>, constant:<element>)");
}

SphereDescriptor parse_sphere(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--sphere expects <x>,<y>");
  return {parse_real(text.substr(0, comma)), std::abs(parse_real(text.substr(comma + 1)))};
}

// A polynomial or a stem, whichever was given.
struct Function {
  std::optional<BiSlicePoly> poly;
  std::optional<StemFunction> stem;
  std::string source;

  static Function from(const std::string& poly, const std::string& stem) {
    if (poly.empty() == stem.empty()) throw UsageError("give exactly one of --poly or --stem");
    Function f;
    if (!poly.empty()) {
      f.poly = parse_polynomial(poly).poly;
      f.source = poly;
    } else {
      f.stem = parse_stem(stem);
      f.source = stem;
    }
    return f;
  }

  SliceMap map(double tol) const {
    if (poly) return [P = *poly](const Element& x) { return P.eval(x); };
    return [F = *stem, tol](const Element& x) { return induce(F, ConePoint::from_element(x, tol)); };
  }
};

Result cmd_split(const std::string& input) {
  const Element x = parse_element(input);
  const QuatPair s = split(x);
  return {{format(s)}, {{"command", "split"}, {"input", input}, {"p", to_json(s.p)}, {"q", to_json(s.q)}}};
}

Result cmd_cone_check(const std::string& input, const Globals& g) {
  const Element x = parse_element(input);
  const bool ok = in_cone(x, g.tol);
  const double quadric = x[Blade::e2] * x[Blade::e13] - x[Blade::e1] * x[Blade::e23] - x[Blade::e3] * x[Blade::e12];
  return {{ok ? "true" : "false"},
          {{"command", "cone-check"}, {"input", input}, {"in_cone", ok}, {"x123", x[Blade::e123]}, {"quadric", quadric}}};
}

Result cmd_eval(const Function& f, const std::string& at, const Globals& g) {
  const Element x = parse_element(at);
  const Element v = f.map(g.tol)(x);
  const QuatPair s = split(v);
  return {{format(v)},
          {{"command", "eval"}, {"function", f.source}, {"at", to_json(x)}, {"value", to_json(v)},
           {"p", to_json(s.p)}, {"q", to_json(s.q)}}};
}

Result cmd_star(const std::string& left, const std::string& right, const std::string& at, const Globals& g) {
  const BiSlicePoly f = parse_polynomial(left).poly;
  const BiSlicePoly h = parse_polynomial(right).poly;
  const BiSlicePoly product = star_mul(f, h);
  Result r{{fmt(product)}, {{"command", "star"}, {"product", to_json(product)}}};
  if (!at.empty()) {
    const Element x = parse_element(at);
    const Element conv = product.eval(x);
    const Element point = star_mul_pointwise(f, h, x, g.tol);
    const double diff = euclidean(conv - point);
    r.lines.push_back("at " + format(x) + ": " + format(conv));
    r.lines.push_back("pointwise: " + format(point));
    r.lines.push_back("difference: " + fmt(diff));
    r.record["at"] = to_json(x);
    r.record["value"] = to_json(conv);
    r.record["pointwise"] = to_json(point);
    r.record["difference"] = diff;
  }
  return r;
}

FactoredPoly require_factored(const std::string& text) {
  const ParsedPoly p = parse_polynomial(text);
  if (!p.factored) throw DomainError(ErrorKind::UnfactoredInput, "expected a product of linear factors");
  return *p.factored;
}

Result cmd_roots(const std::string& text, const Globals& g) {
  const FactoredPoly f = require_factored(text);
  if (f.degree() != 2) throw UsageError("roots expects exactly two linear factors");
  const ZeroSetQuadratic z = classify_quadratic(f.roots[0], f.roots[1], g.tol);
  Result r;
  r.lines.push_back("case: " + std::string(to_string(z.tag)) + (z.mirrored ? " (mirrored)" : ""));
  r.lines.push_back("omega+ factors: " + linear_factor(z.factors.p.a) + "*" + linear_factor(z.factors.p.b) +
                    " -> " + std::string(to_string(z.p_side.kind)));
  r.lines.push_back("omega- factors: " + linear_factor(z.factors.q.a) + "*" + linear_factor(z.factors.q.b) +
                    " -> " + std::string(to_string(z.q_side.kind)));
  json zeros = json::array();
  for (const auto& pair : z.zeros) {
    std::string line = "zero: (" + fmt(pair.p) + " | " + fmt(pair.q) + ")";
    if (const auto e = pair.element()) line += " = " + format(*e);
    line += "  residual " + fmt(pair.residual);
    r.lines.push_back(line);
    json j{{"p", to_json(pair.p)}, {"q", to_json(pair.q)}, {"residual", pair.residual}};
    j["element"] = pair.element() ? to_json(*pair.element()) : json(nullptr);
    zeros.push_back(j);
  }
  r.lines.push_back("max residual: " + fmt(z.max_residual()));
  r.record = {{"command", "roots"},      {"case", to_string(z.tag)},   {"mirrored", z.mirrored},
              {"p_side", to_string(z.p_side.kind)}, {"q_side", to_string(z.q_side.kind)},
              {"zeros", zeros},          {"max_residual", z.max_residual()}};
  return r;
}

Result cmd_mult(const std::string& text, const std::string& sphere, const Globals& g) {
  const SphereDescriptor base = parse_sphere(sphere);
  const ParsedPoly p = parse_polynomial(text);
  const double tol = std::max(g.tol, 1e-9);
  const MultiplicityReport m =
      p.factored ? multiplicities(*p.factored, base, tol) : multiplicities(std::vector{p.poly}, base, tol);
  Result r;
  r.lines = {"base: " + fmt(base),
             "omega+: " + fmt(m.f, "n"),
             "omega-: " + fmt(m.g, "m"),
             "4D spherical: " + std::to_string(m.four_dimensional),
             "isolated: " + std::to_string(m.isolated),
             "first kind: " + std::to_string(m.first_kind),
             "second kind: " + std::to_string(m.second_kind)};
  r.record = {{"command", "mult"},
              {"base", to_json(base)},
              {"f", to_json(m.f)},
              {"g", to_json(m.g)},
              {"four_dimensional", m.four_dimensional},
              {"isolated", m.isolated},
              {"first_kind", m.first_kind},
              {"second_kind", m.second_kind}};
  return r;
}

Result cmd_det(const std::string& text, const Globals& g) {
  const Matrix2 A = parse_matrix(text);
  const double d = det(A, g.tol);
  const DetReport rep = det_report(A, g.tol);
  Result r;
  r.lines = {fmt(d),
             "A'  = " + fmt(A.plus()),
             "A'' = " + fmt(A.minus()),
             "formula(A')  = " + fmt(rep.det_plus) + "  (radicand " + fmt(rep.radicand_plus) + ")",
             "formula(A'') = " + fmt(rep.det_minus) + "  (radicand " + fmt(rep.radicand_minus) + ")"};
  if (!A.in_cone(g.tol)) r.lines.push_back("note: some entries are outside the quadratic cone");
  r.record = {{"command", "det"},
              {"det", d},
              {"plus", to_json(A.plus())},
              {"minus", to_json(A.minus())},
              {"radicand_plus", rep.radicand_plus},
              {"radicand_minus", rep.radicand_minus},
              {"det_plus", rep.det_plus},
              {"det_minus", rep.det_minus},
              {"in_cone", A.in_cone(g.tol)},
              {"right_invertible", is_right_invertible(A, g.tol)}};
  return r;
}

struct CauchyArgs {
  std::string poly, at, unit_i = "e23", unit_j = "e13";
  double center = 0.0, radius = 2.0;
};

Result cmd_cauchy(const CauchyArgs& a, const Globals& g) {
  const BiSlicePoly P = parse_polynomial(a.poly).poly;
  const Element x = parse_element(a.at);
  const SliceContour cI(a.center, a.radius, parse_quat(a.unit_i), g.nodes, g.tol);
  const SliceContour cJ(a.center, a.radius, parse_quat(a.unit_j), g.nodes, g.tol);
  const Element value = cauchy_reconstruct(P, cI, cJ, x, g.tol);
  const Element expected = P.eval(x);
  const double error = euclidean(value - expected);
  const ContourCheck c = contour_integral_vanishes(P, cI, cJ);
  Result r;
  r.lines = {"reconstructed: " + format(value), "direct: " + format(expected), "error: " + fmt(error),
             "contour integrals: " + fmt(c.integral_f) + ", " + fmt(c.integral_g) +
                 (c.vanishes() ? " (vanish)" : " (do not vanish)")};
  r.record = {{"command", "cauchy-verify"}, {"nodes", g.nodes},        {"center", a.center},
              {"radius", a.radius},         {"at", to_json(x)},        {"value", to_json(value)},
              {"expected", to_json(expected)}, {"error", error},       {"integral_f", c.integral_f},
              {"integral_g", c.integral_g}, {"vanishes", c.vanishes()}};
  return r;
}

Result cmd_dbar(const Function& f, const std::string& at, const Globals& g) {
  const ConePoint x = ConePoint::from_element(parse_element(at), g.tol);
  const SliceMap m = f.map(g.tol);
  const double ij = dbar_residual(m, x, g.fd_step);
  const double k = dbar_k_residual(m, x, g.fd_step);
  return {{"dbar_IJ residual: " + fmt(ij), "dbar_K residual: " + fmt(k)},
          {{"command", "dbar-check"}, {"function", f.source}, {"h", g.fd_step}, {"residual_ij", ij}, {"residual_k", k}}};
}

Result cmd_kernel(const std::string& source, const std::string& at, const Globals& g) {
  const Element s = parse_element(source);
  const Element x = parse_element(at);
  const Element v = cauchy_kernel(s, x, g.tol);
  Result r{{format(v)}, {{"command", "kernel"}, {"value", to_json(v)}}};
  if (in_cone(s, g.tol) && in_cone(x, g.tol)) {
    const KernelRegularity k =
        kernel_regularity_residual(ConePoint::from_element(s, g.tol), ConePoint::from_element(x, g.tol), g.fd_step, g.tol);
    r.lines.push_back("left regularity in x: " + fmt(k.left_in_x));
    r.lines.push_back("right regularity in s: " + fmt(k.right_in_s));
    r.record["left_in_x"] = k.left_in_x;
    r.record["right_in_s"] = k.right_in_s;
  }
  return r;
}

void emit(const Result& r, const Globals& g, std::ostream& out) {
  if (g.output == "records") {
    out << r.record.dump() << '\n';
  } else {
    for (const auto& line : r.lines) out << line << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the Clifford algebra R3 and its quadratic cone", "r3"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Zero tolerance")->capture_default_str();
  app.add_option("--fd-step", g.fd_step, "Finite-difference step")->capture_default_str();
  app.add_option("--nodes", g.nodes, "Contour quadrature nodes")->capture_default_str();
  app.add_option("--output", g.output, "Output mode")->check(CLI::IsMember({"pretty", "records"}))->capture_default_str();

  std::function<Result()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string element;
  auto* split_cmd = sub("split", "Split an element into its quaternion pair");
  split_cmd->add_option("element", element)->required();
  split_cmd->callback([&] { action = [&] { return cmd_split(element); }; });

  auto* cone_cmd = sub("cone-check", "Test membership in the quadratic cone");
  cone_cmd->add_option("element", element)->required();
  cone_cmd->callback([&] { action = [&] { return cmd_cone_check(element, g); }; });

  std::string poly, stem, at;
  auto* eval_cmd = sub("eval", "Evaluate a polynomial or built-in stem function");
  eval_cmd->add_option("--poly", poly, "Polynomial");
  eval_cmd->add_option("--stem", stem, "identity | monomial:<n> | constant:<element>");
  eval_cmd->add_option("--at", at, "Point")->required();
  eval_cmd->callback([&] { action = [&] { return cmd_eval(Function::from(poly, stem), at, g); }; });

  std::string left, right;
  auto* star_cmd = sub("star", "Star product of two polynomials");
  star_cmd->add_option("--left", left)->required();
  star_cmd->add_option("--right", right)->required();
  star_cmd->add_option("--at", at, "Also compare with the pointwise product here");
  star_cmd->callback([&] { action = [&] { return cmd_star(left, right, at, g); }; });

  std::string factored;
  auto* roots_cmd = sub("roots", "Zeros of (x - a)*(x - b)");
  roots_cmd->add_option("--factored", factored)->required();
  roots_cmd->callback([&] { action = [&] { return cmd_roots(factored, g); }; });

  std::string sphere;
  auto* mult_cmd = sub("mult", "Multiplicity figures at a sphere");
  mult_cmd->add_option("--factored", factored)->required();
  mult_cmd->add_option("--sphere", sphere, "<x>,<y>")->required();
  mult_cmd->callback([&] { action = [&] { return cmd_mult(factored, sphere, g); }; });

  std::string matrix;
  auto* det_cmd = sub("det", "Determinant of a 2x2 matrix");
  det_cmd->add_option("--matrix", matrix)->required();
  det_cmd->callback([&] { action = [&] { return cmd_det(matrix, g); }; });

  CauchyArgs ca;
  auto* cauchy_cmd = sub("cauchy-verify", "Cauchy formula reconstruction error");
  cauchy_cmd->add_option("--poly", ca.poly)->required();
  cauchy_cmd->add_option("--at", ca.at)->required();
  cauchy_cmd->add_option("--center", ca.center)->capture_default_str();
  cauchy_cmd->add_option("--radius", ca.radius)->capture_default_str();
  cauchy_cmd->add_option("--unit-i", ca.unit_i)->capture_default_str();
  cauchy_cmd->add_option("--unit-j", ca.unit_j)->capture_default_str();
  cauchy_cmd->callback([&] { action = [&] { return cmd_cauchy(ca, g); }; });

  auto* dbar_cmd = sub("dbar-check", "Finite-difference Cauchy-Riemann residuals");
  dbar_cmd->add_option("--poly", poly);
  dbar_cmd->add_option("--stem", stem);
  dbar_cmd->add_option("--at", at)->required();
  dbar_cmd->callback([&] { action = [&] { return cmd_dbar(Function::from(poly, stem), at, g); }; });

  std::string source;
  auto* kernel_cmd = sub("kernel", "Cauchy kernel value and regularity");
  kernel_cmd->add_option("--source", source)->required();
  kernel_cmd->add_option("--at", at)->required();
  kernel_cmd->callback([&] { action = [&] { return cmd_kernel(source, at, g); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    emit(action(), g, out);
    return 0;
  } catch (const ParseError& e) {
    err << e.annotated() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace r3::cli
