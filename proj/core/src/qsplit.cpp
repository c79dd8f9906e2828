#include "r3/qsplit.hpp"

#include <algorithm>
#include <cstdlib>

#include "r3/error.hpp"
#include "r3/format.hpp"

namespace r3 {

Quat inverse(const Quat& q, double tol) {
  const double n = q.norm_sq();
  if (std::sqrt(n) <= tol) {
    throw DomainError(ErrorKind::SingularElement, "quaternion " + format(q) + " has zero modulus");
  }
  return q.conjugate() / n;
}

double max_abs(const Quat& q) {
  return std::max({std::abs(q.w), std::abs(q.a23), std::abs(q.a13), std::abs(q.a12)});
}

bool approx_equal(const Quat& a, const Quat& b, double tol) { return max_abs(a - b) <= tol; }

bool is_imaginary_unit(const Quat& q, double tol) {
  return std::abs(q.w) <= tol && std::abs(q.norm_sq() - 1.0) <= tol;
}

Element embed(const Quat& q) {
  Element x;
  x[Blade::e0] = q.w;
  x[Blade::e23] = q.a23;
  x[Blade::e13] = q.a13;
  x[Blade::e12] = q.a12;
  return x;
}

QuatPair split(const Element& x) {
  const double x0 = x[Blade::e0], x1 = x[Blade::e1], x2 = x[Blade::e2], x3 = x[Blade::e3];
  const double x12 = x[Blade::e12], x13 = x[Blade::e13], x23 = x[Blade::e23];
  const double x123 = x[Blade::e123];
  return {{x0 + x123, x23 - x1, x13 + x2, x12 - x3},
          {x0 - x123, x23 + x1, x13 - x2, x12 + x3}};
}

Element join(const QuatPair& pair) {
  return mul(kOmegaPlus, embed(pair.p)) + mul(kOmegaMinus, embed(pair.q));
}

bool in_cone(const Element& x, double tol) {
  const double quadric = x[Blade::e2] * x[Blade::e13] - x[Blade::e1] * x[Blade::e23] -
                         x[Blade::e3] * x[Blade::e12];
  return std::abs(x[Blade::e123]) <= tol && std::abs(quadric) <= tol;
}

bool is_sqrt_minus_one(const Element& x, double tol) {
  const auto [p, q] = split(x);
  return approx_equal(p * p, Quat::real(-1.0), tol) && approx_equal(q * q, Quat::real(-1.0), tol);
}

Element inverse(const Element& x, double tol) {
  const auto [p, q] = split(x);
  if (p.abs() <= tol || q.abs() <= tol) {
    throw DomainError(ErrorKind::SingularElement,
                      format(x) + " splits as " + format(QuatPair{p, q}) +
                          " with a zero component");
  }
  return join(inverse(p, tol), inverse(q, tol));
}

Quat power(const Quat& q, int n, double tol) {
  Quat base = n < 0 ? inverse(q, tol) : q;
  unsigned e = static_cast<unsigned>(std::abs(n));
  Quat result = Quat::real(1.0);
  while (e != 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Element power(const Element& x, int n, double tol) {
  const auto [p, q] = split(x);
  if (n < 0 && (p.abs() <= tol || q.abs() <= tol)) {
    throw DomainError(ErrorKind::SingularElement,
                      "negative power of " + format(x) + " which is not invertible");
  }
  return join(power(p, n, tol), power(q, n, tol));
}

bool same_sphere(const Quat& a, const Quat& b, double tol) {
  return std::abs(a.re() - b.re()) <= tol && std::abs(a.im_abs() - b.im_abs()) <= tol;
}

ConePoint::ConePoint(double alpha, double beta, const Quat& i, const Quat& j)
    : alpha_(alpha), beta_(beta), unit_p_(i), unit_q_(j) {
  element_ = join(p(), q());
}

ConePoint ConePoint::from_element(const Element& x, double tol) {
  if (!in_cone(x, tol)) {
    throw DomainError(ErrorKind::NotInCone, format(x) + " is not in the quadratic cone");
  }
  const auto [p, q] = split(x);
  const double alpha = 0.5 * (p.re() + q.re());
  const double bp = p.im_abs();
  const double bq = q.im_abs();
  const double beta = 0.5 * (bp + bq);
  const Quat i = bp > tol ? p.im() / bp : Quat::e23();
  const Quat j = bq > tol ? q.im() / bq : Quat::e23();
  return ConePoint(alpha, beta, i, j);
}

ConePoint ConePoint::on_slice(double alpha, double beta) const {
  return ConePoint(alpha, beta, unit_p_, unit_q_);
}

ConePoint cone_point(double x, double y, const Quat& I, const Quat& J, double tol) {
  if (!is_imaginary_unit(I, tol) || !is_imaginary_unit(J, tol)) {
    throw DomainError(ErrorKind::NotImaginaryUnit,
                      format(I) + " or " + format(J) + " does not square to -1");
  }
  return ConePoint(x, y, I, J);
}

bool in_ball(const ConePoint& x, double R) { return x.norm() < R; }

}  // namespace r3
