#include "r3/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "r3/error.hpp"
#include "r3/format.hpp"

namespace r3 {

BiSlicePoly FactoredPoly::expand() const {
  BiSlicePoly acc = BiSlicePoly::constant(Element::scalar(scale));
  for (const auto& r : roots) acc = star_mul(acc, BiSlicePoly::linear(r));
  return acc;
}

SplitFactors split_factors(const Element& alpha, const Element& beta) {
  const QuatPair a = split(alpha);
  const QuatPair b = split(beta);
  return {{a.p, b.p}, {a.q, b.q}};
}

std::string_view to_string(QuatQuadraticZeros::Kind kind) {
  switch (kind) {
    case QuatQuadraticZeros::Kind::Sphere: return "sphere";
    case QuatQuadraticZeros::Kind::SinglePoint: return "single-point";
    case QuatQuadraticZeros::Kind::TwoPoints: return "two-points";
  }
  return "?";
}

QuatQuadraticZeros quat_quadratic_zeros(const Quat& a, const Quat& b, double tol) {
  QuatQuadraticZeros out;
  if (max_abs(b - a.conjugate()) <= tol) {
    out.kind = QuatQuadraticZeros::Kind::Sphere;
    out.sphere = SphereDescriptor::of(a);
    if (out.sphere.is_point(tol)) out.sphere.radius = 0.0;
    return out;
  }
  if (same_sphere(a, b, tol)) {
    out.kind = QuatQuadraticZeros::Kind::SinglePoint;
    out.points = {a};
    return out;
  }
  const Quat d = b - a.conjugate();
  out.kind = QuatQuadraticZeros::Kind::TwoPoints;
  out.points = {a, inverse(d, tol) * b * d};
  return out;
}

std::string_view to_string(ZeroCase c) {
  switch (c) {
    case ZeroCase::Case1_1: return "1.1";
    case ZeroCase::Case1_2: return "1.2";
    case ZeroCase::Case2: return "2";
    case ZeroCase::Case3: return "3";
    case ZeroCase::Case4: return "4";
    case ZeroCase::Case5: return "5";
    case ZeroCase::Case6: return "6";
  }
  return "?";
}

std::optional<Element> ZeroPair::element() const {
  if (p.is_sphere || q.is_sphere) return std::nullopt;
  return join(p.point, q.point);
}

double ZeroSetQuadratic::max_residual() const {
  double m = 0.0;
  for (const auto& z : zeros) m = std::max(m, z.residual);
  return m;
}

namespace {

const std::array<Quat, 8>& sample_units() {
  static const std::array<Quat, 8> units = [] {
    const std::array<std::array<double, 3>, 8> raw{{{1, 0, 0},
                                                    {0, 1, 0},
                                                    {0, 0, 1},
                                                    {1, 1, 1},
                                                    {-1, 2, 0.5},
                                                    {0.3, -0.7, 2},
                                                    {-2, -1, 1},
                                                    {0.1, 0.2, -3}}};
    std::array<Quat, 8> out{};
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const Quat v{0, raw[i][0], raw[i][1], raw[i][2]};
      out[i] = v / v.abs();
    }
    return out;
  }();
  return units;
}

Quat sample(const ZeroComponent& c, std::size_t i) {
  if (!c.is_sphere) return c.point;
  return Quat::real(c.sphere.center) + sample_units()[i % 8] * c.sphere.radius;
}

std::vector<ZeroComponent> components(const QuatQuadraticZeros& z) {
  if (z.kind == QuatQuadraticZeros::Kind::Sphere) {
    if (z.sphere.radius == 0.0) return {{false, {}, Quat::real(z.sphere.center)}};
    return {{true, z.sphere, {}}};
  }
  std::vector<ZeroComponent> out;
  for (const auto& p : z.points) out.push_back({false, {}, p});
  return out;
}

// Returns the tag and whether the sides are exchanged relative to the
// canonical statement.
std::pair<ZeroCase, bool> case_of(const QuatQuadraticZeros& p, const QuatQuadraticZeros& q,
                                  const SplitFactors& f, double tol) {
  using K = QuatQuadraticZeros::Kind;
  const K kp = p.kind;
  const K kq = q.kind;
  if (kp == K::Sphere && kq == K::Sphere)
    return {same_sphere(f.p.a, f.q.a, tol) ? ZeroCase::Case1_1 : ZeroCase::Case1_2, false};
  if (kp == K::Sphere && kq == K::SinglePoint) return {ZeroCase::Case2, false};
  if (kp == K::SinglePoint && kq == K::Sphere) return {ZeroCase::Case2, true};
  if (kp == K::Sphere && kq == K::TwoPoints) return {ZeroCase::Case3, false};
  if (kp == K::TwoPoints && kq == K::Sphere) return {ZeroCase::Case3, true};
  if (kp == K::TwoPoints && kq == K::TwoPoints) return {ZeroCase::Case4, false};
  if (kp == K::SinglePoint && kq == K::SinglePoint) return {ZeroCase::Case5, false};
  if (kp == K::TwoPoints && kq == K::SinglePoint) return {ZeroCase::Case6, false};
  return {ZeroCase::Case6, true};
}

}  // namespace

ZeroSetQuadratic classify_quadratic(const Element& alpha, const Element& beta, double tol) {
  ZeroSetQuadratic out;
  out.factors = split_factors(alpha, beta);
  out.p_side = quat_quadratic_zeros(out.factors.p.a, out.factors.p.b, tol);
  out.q_side = quat_quadratic_zeros(out.factors.q.a, out.factors.q.b, tol);
  std::tie(out.tag, out.mirrored) = case_of(out.p_side, out.q_side, out.factors, tol);

  const BiSlicePoly f = star_mul(BiSlicePoly::linear(alpha), BiSlicePoly::linear(beta));
  for (const auto& zp : components(out.p_side)) {
    for (const auto& zq : components(out.q_side)) {
      ZeroPair pair{zp, zq, 0.0};
      const std::size_t n = (zp.is_sphere || zq.is_sphere) ? 8 : 1;
      for (std::size_t i = 0; i < n; ++i) {
        const Element x = join(sample(zp, i), sample(zq, i + 3));
        pair.residual = std::max(pair.residual, euclidean(f.eval(x)));
      }
      out.zeros.push_back(pair);
    }
  }
  return out;
}

// ---- Multiplicities -----------------------------------------------------------

SideMultiplicity side_multiplicity(const QuatPoly& F, const SphereDescriptor& base, double tol) {
  if (F.degree(tol) < 0)
    throw DomainError(ErrorKind::UnfactoredInput, "component polynomial vanishes identically");

  double scale = 1.0;
  for (const auto& c : F.coeffs()) scale = std::max(scale, max_abs(c));
  const double rtol = tol * scale;

  const bool real_base = base.is_point();
  const double x = base.center;
  const double y = base.radius;
  const std::vector<double> divisor =
      real_base ? std::vector<double>{-x, 1.0} : std::vector<double>{x * x + y * y, -2.0 * x, 1.0};
  const int step = static_cast<int>(divisor.size()) - 1;

  auto exponent = [&](QuatPoly P) {
    int e = 0;
    while (P.degree(rtol) >= step) {
      QuatDivision d = divide_by_real(P, divisor);
      if (d.remainder.degree(rtol) >= 0) break;
      P = std::move(d.quotient);
      ++e;
    }
    return std::pair{e, P};
  };

  SideMultiplicity out;
  auto [e, reduced] = exponent(F);
  if (real_base) {
    out.isolated = e;
    if (e > 0) out.root = Quat::real(x);
    return out;
  }
  out.spherical_exponent = e;
  out.isolated = exponent(symmetrization(reduced)).first;
  if (out.isolated > 0) {
    const QuatPoly r = divide_by_real(reduced, divisor).remainder;
    const Quat c1 = r.coeff(1);
    if (c1.abs() > rtol) out.root = -(r.coeff(0) * inverse(c1));
  }
  return out;
}

namespace {

MultiplicityReport report_for(const BiSlicePoly& P, const SphereDescriptor& base, double tol) {
  const auto [F, G] = split_poly(P);
  MultiplicityReport r;
  r.base = base;
  r.f = side_multiplicity(F, base, tol);
  r.g = side_multiplicity(G, base, tol);
  const int n = r.f.spherical_exponent;
  const int m = r.g.spherical_exponent;
  r.four_dimensional = 2 * n + 2 * m;
  r.isolated = r.f.isolated + r.g.isolated;
  r.first_kind = 2 * n + r.g.isolated;
  r.second_kind = r.f.isolated + 2 * m;
  return r;
}

}  // namespace

MultiplicityReport multiplicities(const FactoredPoly& poly, const SphereDescriptor& base,
                                  double tol) {
  return report_for(poly.expand(), base, tol);
}

MultiplicityReport multiplicities(const std::vector<BiSlicePoly>& factors,
                                  const SphereDescriptor& base, double tol) {
  BiSlicePoly acc = BiSlicePoly::constant(kOne);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int d = factors[i].degree(tol);
    if (d >= 2)
      throw DomainError(ErrorKind::UnfactoredInput,
                        "factor " + std::to_string(i + 1) + " has degree " + std::to_string(d));
    acc = star_mul(acc, factors[i]);
  }
  return report_for(acc, base, tol);
}

Element fta_witness(const FactoredPoly& poly) {
  if (poly.roots.empty()) throw std::invalid_argument("fta_witness: polynomial has degree 0");
  const QuatPair r = split(poly.roots.front());
  return join(r.p, r.q);
}

}  // namespace r3
