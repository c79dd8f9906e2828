#pragma once

/**
 * @file cauchy.hpp
 * @brief The slice Cauchy kernel, circular contours on slices and the
 *        numerical Cauchy theorem / Cauchy formula for bi-slice polynomials.
 */

#include <functional>
#include <utility>

#include "r3/bislice.hpp"
#include "r3/clifford3.hpp"
#include "r3/qsplit.hpp"

namespace r3 {

inline constexpr int kDefaultNodes = 512;

// s(theta) = center + radius e^{I theta}, counterclockwise, sampled at
// `nodes` equispaced angles for the trapezoid rule.
class SliceContour {
 public:
  // Throws NotImaginaryUnit for a bad unit and std::invalid_argument for
  // radius <= 0 or nodes < 16.
  SliceContour(double center, double radius, const Quat& unit, int nodes = kDefaultNodes,
               double tol = kDefaultTol);

  double center() const { return center_; }
  double radius() const { return radius_; }
  const Quat& unit() const { return unit_; }
  int nodes() const { return nodes_; }

  double theta(int k) const;
  Quat node(int k) const;
  // ds_I = -I ds = radius e^{I theta} dtheta, without the dtheta.
  Quat measure(int k) const;

  // (Re q - center)^2 + |Im q|^2 < radius^2: q lies in the axially
  // symmetric disc bounded by the contour.
  bool encloses(const Quat& q) const;

 private:
  double center_;
  double radius_;
  Quat unit_;
  int nodes_;
};

// S^-1(s, q) = (q^2 - 2 Re(s) q + |s|^2)^-1 (conj(s) - q).
// Throws OnSingularSphere when q lies on the sphere of s.
Quat cauchy_kernel_quat(const Quat& s, const Quat& q, double tol = kDefaultTol);

// omega+ S^-1(s', p) + omega- S^-1(s'', q).
Element cauchy_kernel(const Element& s, const Element& x, double tol = kDefaultTol);
inline Element cauchy_kernel(const ConePoint& s, const ConePoint& x, double tol = kDefaultTol) {
  return cauchy_kernel(s.element(), x.element(), tol);
}

using QuatMap = std::function<Quat(const Quat&)>;

// Trapezoid value of the closed integral of ds_I F(s).
Quat contour_integral(const QuatMap& F, const SliceContour& c);

struct ContourCheck {
  double integral_f = 0.0;  // |closed integral of ds_I F(s)| over the I contour
  double integral_g = 0.0;  // |closed integral of ds_J G(s)| over the J contour
  double scale_f = 0.0;     // max |F| on the contour
  double scale_g = 0.0;

  bool vanishes(double rel_tol = 1e-8) const {
    return integral_f < rel_tol * (1.0 + scale_f) && integral_g < rel_tol * (1.0 + scale_g);
  }
};

ContourCheck contour_integral_vanishes(const BiSlicePoly& P, const SliceContour& cI,
                                       const SliceContour& cJ);

// omega+ (1/2pi) sum S^-1(s, p) ds_I F(s) + omega- (1/2pi) sum S^-1(s, q) ds_J G(s).
// p and q may lie on any slice inside the axially symmetric discs of the
// contours; throws PointOutsideContour otherwise.
Element cauchy_reconstruct(const BiSlicePoly& P, const SliceContour& cI, const SliceContour& cJ,
                           const Element& x, double tol = kDefaultTol);

struct KernelRegularity {
  double left_in_x = 0.0;
  double right_in_s = 0.0;
};

// Central-difference residuals of the left d-bar operator applied to
// x -> S^-1(s, x) and of the right operator 1/2 (du + (dv) K) applied to
// s -> S^-1(s, x), each along the slice of the moving point.
KernelRegularity kernel_regularity_residual(const ConePoint& s, const ConePoint& x, double h,
                                            double tol = kDefaultTol);

}  // namespace r3
