#include "r3/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "r3/error.hpp"
#include "r3/format.hpp"

namespace r3 {

SliceContour::SliceContour(double center, double radius, const Quat& unit, int nodes, double tol)
    : center_(center), radius_(radius), unit_(unit), nodes_(nodes) {
  if (!is_imaginary_unit(unit, tol))
    throw DomainError(ErrorKind::NotImaginaryUnit, "contour unit " + format(unit));
  if (!(radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
  if (nodes < 16) throw std::invalid_argument("contour needs at least 16 nodes");
}

double SliceContour::theta(int k) const { return 2.0 * std::numbers::pi * k / nodes_; }

Quat SliceContour::node(int k) const {
  const double t = theta(k);
  return Quat::real(center_ + radius_ * std::cos(t)) + unit_ * (radius_ * std::sin(t));
}

Quat SliceContour::measure(int k) const {
  const double t = theta(k);
  return Quat::real(radius_ * std::cos(t)) + unit_ * (radius_ * std::sin(t));
}

bool SliceContour::encloses(const Quat& q) const {
  const double dx = q.re() - center_;
  const double y = q.im_abs();
  return dx * dx + y * y < radius_ * radius_;
}

Quat cauchy_kernel_quat(const Quat& s, const Quat& q, double tol) {
  const Quat d = q * q - q * (2.0 * s.re()) + Quat::real(s.norm_sq());
  if (d.abs() <= tol)
    throw DomainError(ErrorKind::OnSingularSphere,
                      format(q) + " lies on the sphere of " + format(s));
  return inverse(d, tol) * (s.conjugate() - q);
}

Element cauchy_kernel(const Element& s, const Element& x, double tol) {
  const QuatPair ss = split(s);
  const QuatPair xs = split(x);
  auto component = [tol](const Quat& a, const Quat& b, const char* tag) {
    try {
      return cauchy_kernel_quat(a, b, tol);
    } catch (const DomainError& e) {
      throw DomainError(e.kind(), std::string(tag) + " component: " + format(b) +
                                      " lies on the sphere of " + format(a));
    }
  };
  return join(component(ss.p, xs.p, "omega+"), component(ss.q, xs.q, "omega-"));
}

Quat contour_integral(const QuatMap& F, const SliceContour& c) {
  Quat acc{};
  for (int k = 0; k < c.nodes(); ++k) acc += c.measure(k) * F(c.node(k));
  return acc * (2.0 * std::numbers::pi / c.nodes());
}

namespace {

double contour_scale(const QuatPoly& F, const SliceContour& c) {
  double m = 0.0;
  for (int k = 0; k < c.nodes(); ++k) m = std::max(m, F.eval(c.node(k)).abs());
  return m;
}

Quat reconstruct_component(const QuatPoly& F, const SliceContour& c, const Quat& p, double tol) {
  Quat acc{};
  for (int k = 0; k < c.nodes(); ++k) {
    const Quat s = c.node(k);
    acc += cauchy_kernel_quat(s, p, tol) * c.measure(k) * F.eval(s);
  }
  // (1/2pi) * (2pi/N)
  return acc / c.nodes();
}

}  // namespace

ContourCheck contour_integral_vanishes(const BiSlicePoly& P, const SliceContour& cI,
                                       const SliceContour& cJ) {
  const auto [F, G] = split_poly(P);
  ContourCheck out;
  out.integral_f = contour_integral([&F](const Quat& s) { return F.eval(s); }, cI).abs();
  out.integral_g = contour_integral([&G](const Quat& s) { return G.eval(s); }, cJ).abs();
  out.scale_f = contour_scale(F, cI);
  out.scale_g = contour_scale(G, cJ);
  return out;
}

Element cauchy_reconstruct(const BiSlicePoly& P, const SliceContour& cI, const SliceContour& cJ,
                           const Element& x, double tol) {
  const QuatPair xs = split(x);
  if (!cI.encloses(xs.p))
    throw DomainError(ErrorKind::PointOutsideContour,
                      "omega+ component " + format(xs.p) + " is not inside the I contour");
  if (!cJ.encloses(xs.q))
    throw DomainError(ErrorKind::PointOutsideContour,
                      "omega- component " + format(xs.q) + " is not inside the J contour");
  const auto [F, G] = split_poly(P);
  return join(reconstruct_component(F, cI, xs.p, tol), reconstruct_component(G, cJ, xs.q, tol));
}

KernelRegularity kernel_regularity_residual(const ConePoint& s, const ConePoint& x, double h,
                                            double tol) {
  const Element se = s.element();
  KernelRegularity out;
  out.left_in_x =
      dbar_residual([&](const Element& y) { return cauchy_kernel(se, y, tol); }, x, h);

  const Quat& I = s.unit_p();
  const Quat& J = s.unit_q();
  const Element xe = x.element();
  auto at = [&](double u, double v) {
    return cauchy_kernel(join(Quat::real(u) + I * v, Quat::real(u) + J * v), xe, tol);
  };
  const double u = s.alpha();
  const double v = s.beta();
  const Element du = (at(u + h, v) - at(u - h, v)) / (2.0 * h);
  const Element dv = (at(u, v + h) - at(u, v - h)) / (2.0 * h);
  const Element K = join(I, J);
  out.right_in_s = euclidean(0.5 * (du + mul(dv, K)));
  return out;
}

}  // namespace r3
