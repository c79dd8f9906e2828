#pragma once

/**
 * @file qsplit.hpp
 * @brief The even subalgebra of R3 as quaternions and the splitting
 *        R3 = omega+ H (+) omega- H.
 *
 * A quaternion is stored on the even basis (e0, e23, e13, e12). The usual
 * (1, i, j, k) view is i = e23, j = -e13, k = e12.
 */

#include <cmath>
#include <string>

#include "r3/clifford3.hpp"

namespace r3 {

struct Quat {
  double w = 0.0;
  double a23 = 0.0;
  double a13 = 0.0;
  double a12 = 0.0;

  static constexpr Quat real(double s) { return {s, 0, 0, 0}; }
  static constexpr Quat e23(double s = 1.0) { return {0, s, 0, 0}; }
  static constexpr Quat e13(double s = 1.0) { return {0, 0, s, 0}; }
  static constexpr Quat e12(double s = 1.0) { return {0, 0, 0, s}; }
  // From Hamilton coordinates w + x i + y j + z k.
  static constexpr Quat from_hamilton(double w, double x, double y, double z) {
    return {w, x, -y, z};
  }

  constexpr double re() const { return w; }
  constexpr Quat im() const { return {0, a23, a13, a12}; }
  constexpr double norm_sq() const { return w * w + a23 * a23 + a13 * a13 + a12 * a12; }
  double abs() const { return std::sqrt(norm_sq()); }
  double im_abs() const { return std::sqrt(a23 * a23 + a13 * a13 + a12 * a12); }
  constexpr Quat conjugate() const { return {w, -a23, -a13, -a12}; }

  constexpr Quat& operator+=(const Quat& o) {
    w += o.w;
    a23 += o.a23;
    a13 += o.a13;
    a12 += o.a12;
    return *this;
  }
  constexpr Quat& operator-=(const Quat& o) {
    w -= o.w;
    a23 -= o.a23;
    a13 -= o.a13;
    a12 -= o.a12;
    return *this;
  }
  constexpr Quat& operator*=(double s) {
    w *= s;
    a23 *= s;
    a13 *= s;
    a12 *= s;
    return *this;
  }

  friend constexpr Quat operator+(Quat a, const Quat& b) { return a += b; }
  friend constexpr Quat operator-(Quat a, const Quat& b) { return a -= b; }
  friend constexpr Quat operator-(Quat a) { return a *= -1.0; }
  friend constexpr Quat operator*(Quat a, double s) { return a *= s; }
  friend constexpr Quat operator*(double s, Quat a) { return a *= s; }
  friend constexpr Quat operator/(Quat a, double s) { return a *= 1.0 / s; }

  // Product inherited from the Clifford product on the even subalgebra:
  // e23 e13 = -e12, e13 e12 = -e23, e12 e23 = -e13.
  friend constexpr Quat operator*(const Quat& x, const Quat& y) {
    return {x.w * y.w - x.a23 * y.a23 - x.a13 * y.a13 - x.a12 * y.a12,
            x.w * y.a23 + x.a23 * y.w - x.a13 * y.a12 + x.a12 * y.a13,
            x.w * y.a13 + x.a13 * y.w + x.a23 * y.a12 - x.a12 * y.a23,
            x.w * y.a12 + x.a12 * y.w - x.a23 * y.a13 + x.a13 * y.a23};
  }

  friend constexpr bool operator==(const Quat&, const Quat&) = default;
};

// Throws SingularElement when |q| <= tol.
Quat inverse(const Quat& q, double tol = kDefaultTol);

double max_abs(const Quat& q);
bool approx_equal(const Quat& a, const Quat& b, double tol = kDefaultTol);

// Euclidean inner product of the coefficient vectors.
constexpr double dot(const Quat& a, const Quat& b) {
  return a.w * b.w + a.a23 * b.a23 + a.a13 * b.a13 + a.a12 * b.a12;
}

// Re(q) = 0 and |q| = 1 within tol.
bool is_imaginary_unit(const Quat& q, double tol = kDefaultTol);

Element embed(const Quat& q);

struct QuatPair {
  Quat p;
  Quat q;
  friend constexpr bool operator==(const QuatPair&, const QuatPair&) = default;
};

// x = omega+ p + omega- q.
QuatPair split(const Element& x);
Element join(const QuatPair& pair);
inline Element join(const Quat& p, const Quat& q) { return join(QuatPair{p, q}); }

// x123 = 0 and x2 x13 - x1 x23 - x3 x12 = 0, each within tol.
bool in_cone(const Element& x, double tol = kDefaultTol);

// Both split components square to -1.
bool is_sqrt_minus_one(const Element& x, double tol = kDefaultTol);

// Componentwise inverse; SingularElement when either component has modulus <= tol.
Element inverse(const Element& x, double tol = kDefaultTol);

// Componentwise integer power; negative exponents require invertibility.
Quat power(const Quat& q, int n, double tol = kDefaultTol);
Element power(const Element& x, int n, double tol = kDefaultTol);

// The real 2-sphere {center + radius * I : I unit imaginary}; radius 0 is a point.
struct SphereDescriptor {
  double center = 0.0;
  double radius = 0.0;

  bool is_point(double tol = kDefaultTol) const { return radius <= tol; }
  bool contains(const Quat& q, double tol = kDefaultTol) const {
    return std::abs(q.re() - center) <= tol && std::abs(q.im_abs() - radius) <= tol;
  }
  static SphereDescriptor of(const Quat& q) { return {q.re(), q.im_abs()}; }
};

bool same_sphere(const Quat& a, const Quat& b, double tol = kDefaultTol);

// A point of the quadratic cone, x = alpha + beta (omega+ I + omega- J).
class ConePoint {
 public:
  // Checks membership; throws NotInCone.
  static ConePoint from_element(const Element& x, double tol = kDefaultTol);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const Quat& unit_p() const { return unit_p_; }
  const Quat& unit_q() const { return unit_q_; }

  const Element& element() const { return element_; }
  QuatPair pair() const { return {p(), q()}; }
  Quat p() const { return Quat::real(alpha_) + unit_p_ * beta_; }
  Quat q() const { return Quat::real(alpha_) + unit_q_ * beta_; }

  // t(x) and n(x), both real on the cone.
  double trace() const { return 2.0 * alpha_; }
  double norm() const { return alpha_ * alpha_ + beta_ * beta_; }

  bool is_real(double tol = kDefaultTol) const { return std::abs(beta_) <= tol; }

  // Same point with the slice parameters moved to (alpha, beta', I, J) along
  // the slice through this point.
  ConePoint on_slice(double alpha, double beta) const;

  SphereDescriptor sphere() const { return {alpha_, std::abs(beta_)}; }

 private:
  friend ConePoint cone_point(double, double, const Quat&, const Quat&, double);
  ConePoint(double alpha, double beta, const Quat& i, const Quat& j);

  double alpha_;
  double beta_;
  Quat unit_p_;
  Quat unit_q_;
  Element element_;
};

// omega+ (x + I y) + omega- (x + J y); throws NotImaginaryUnit.
ConePoint cone_point(double x, double y, const Quat& I, const Quat& J,
                     double tol = kDefaultTol);

// n(x) < R.
bool in_ball(const ConePoint& x, double R);

}  // namespace r3
