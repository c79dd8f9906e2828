#pragma once

/**
 * @file stem.hpp
 * @brief Stem functions F(z) = omega+ (f1 + i f2) + omega- (g1 + i g2) on a
 *        complex rectangle, and the bi-slice functions they induce on the cone.
 *
 * The induced function at x = alpha + beta (omega+ I + omega- J) is
 *   omega+ (f1(z) + I f2(z)) + omega- (g1(z) + J g2(z)),  z = alpha + i beta.
 */

#include <cstdint>
#include <functional>

#include "r3/clifford3.hpp"
#include "r3/qsplit.hpp"

namespace r3 {

// Axially symmetric rectangle [alpha_min, alpha_max] x [-beta_max, beta_max].
struct StemDomain {
  double alpha_min = -10.0;
  double alpha_max = 10.0;
  double beta_max = 10.0;

  bool contains(double alpha, double beta) const {
    return alpha >= alpha_min && alpha <= alpha_max && beta >= -beta_max && beta <= beta_max;
  }
};

struct StemFunction {
  using Component = std::function<Quat(double alpha, double beta)>;

  Component f1;
  Component f2;
  Component g1;
  Component g2;
  StemDomain domain;
};

namespace stems {

// F(z) = z.
StemFunction identity(StemDomain domain = {});
// F(z) = z^n, real coefficients.
StemFunction monomial(int n, StemDomain domain = {});
// F(z) = c.
StemFunction constant(const Element& c, StemDomain domain = {});

}  // namespace stems

// Throws OutOfDomain when (alpha, beta) of the point is outside F.domain.
Element induce(const StemFunction& F, const ConePoint& at);

struct CheckReport {
  double max_violation = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

// Max of |f1(z) - f1(conj z)|, |f2(z) + f2(conj z)| and the g analogues over
// `samples` random points of the domain.
CheckReport check_parity(const StemFunction& F, int samples, double tol = kDefaultTol,
                         std::uint64_t seed = 1);

struct CauchyRiemannOptions {
  // Threshold is c * h^2 plus a rounding allowance; c <= 0 means estimate
  // c from second differences sampled over the domain.
  double c = 0.0;
  std::uint64_t seed = 1;
};

// Central-difference residuals of df1/da - df2/db and df1/db + df2/da (and
// for g) over `samples` random points.
CheckReport check_cauchy_riemann(const StemFunction& F, double h, int samples,
                                 CauchyRiemannOptions options = {});

// omega+ f1(z) + omega- g1(z).
Element spherical_value(const StemFunction& F, const ConePoint& at);

// omega+ f2(z)/beta + omega- g2(z)/beta; throws RealPoint when |beta| <= tol.
Element spherical_derivative(const StemFunction& F, const ConePoint& at,
                             double tol = kDefaultTol);

}  // namespace r3
