#pragma once

/**
 * @file zeros.hpp
 * @brief Zeros of factored bi-slice polynomials: the quaternionic quadratic
 *        engine, the six-case classification of (x - alpha)*(x - beta), and
 *        the four multiplicity figures.
 */

#include <optional>
#include <string_view>
#include <vector>

#include "r3/bislice.hpp"
#include "r3/clifford3.hpp"
#include "r3/qsplit.hpp"

namespace r3 {

// scale * (x - roots[0]) * (x - roots[1]) * ...
struct FactoredPoly {
  double scale = 1.0;
  std::vector<Element> roots;

  BiSlicePoly expand() const;
  int degree() const { return static_cast<int>(roots.size()); }
};

struct FactorPair {
  Quat a;
  Quat b;
};

// alpha = omega+ a1 + omega- a2, beta = omega+ b1 + omega- b2.
struct SplitFactors {
  FactorPair p;  // (a1, b1)
  FactorPair q;  // (a2, b2)
};

SplitFactors split_factors(const Element& alpha, const Element& beta);

// Zero set of the quaternionic quadratic (t - a)*(t - b).
struct QuatQuadraticZeros {
  enum class Kind { Sphere, SinglePoint, TwoPoints };

  Kind kind = Kind::SinglePoint;
  // Kind::Sphere; radius 0 when a = b is real.
  SphereDescriptor sphere;
  // SinglePoint: {a}. TwoPoints: {a, (b - a^c)^-1 b (b - a^c)}. Sphere: empty.
  std::vector<Quat> points;
};

std::string_view to_string(QuatQuadraticZeros::Kind kind);

// Ties resolve toward the more degenerate kind.
QuatQuadraticZeros quat_quadratic_zeros(const Quat& a, const Quat& b, double tol = kDefaultTol);

enum class ZeroCase { Case1_1, Case1_2, Case2, Case3, Case4, Case5, Case6 };

// "1.1", "1.2", "2", ..., "6"
std::string_view to_string(ZeroCase c);

// One factor of a zero set: a component sphere or a component point.
struct ZeroComponent {
  bool is_sphere = false;
  SphereDescriptor sphere;
  Quat point;
};

struct ZeroPair {
  ZeroComponent p;
  ZeroComponent q;
  // max |f| over the pair; spheres are sampled at 8 units.
  double residual = 0.0;

  // The joined zero when both components are points.
  std::optional<Element> element() const;
};

struct ZeroSetQuadratic {
  ZeroCase tag = ZeroCase::Case5;
  // Cases 2, 3 and 6 are defined with fixed sides; `mirrored` marks
  // the same configuration with the omega+ and omega- sides exchanged.
  bool mirrored = false;
  SplitFactors factors;
  QuatQuadraticZeros p_side;
  QuatQuadraticZeros q_side;
  std::vector<ZeroPair> zeros;

  double max_residual() const;
};

// Zeros of (x - alpha)*(x - beta) in R3: the product of the component zero sets.
ZeroSetQuadratic classify_quadratic(const Element& alpha, const Element& beta,
                                    double tol = kDefaultTol);

// Per-component data behind the multiplicity figures at a base sphere.
struct SideMultiplicity {
  // Largest e with the real quadratic (or linear factor at a real base)
  // to the power e dividing the component.
  int spherical_exponent = 0;
  // Roots of the reduced component on the base counted with multiplicity.
  int isolated = 0;
  std::optional<Quat> root;
};

struct MultiplicityReport {
  SphereDescriptor base;
  SideMultiplicity f;  // omega+ side, exponent n
  SideMultiplicity g;  // omega- side, exponent m

  int four_dimensional = 0;  // 2n + 2m at (S, S)
  int isolated = 0;          // isolated(F~) + isolated(G~) at (p1, q1)
  int first_kind = 0;        // 2n + isolated(G~) at (S, q1)
  int second_kind = 0;       // isolated(F~) + 2m at (p1, S)
};

// Component figures of one quaternionic polynomial at the base.
SideMultiplicity side_multiplicity(const QuatPoly& F, const SphereDescriptor& base,
                                   double tol = 1e-9);

MultiplicityReport multiplicities(const FactoredPoly& poly, const SphereDescriptor& base,
                                  double tol = 1e-9);

// Factors must each have degree <= 1; throws UnfactoredInput otherwise.
MultiplicityReport multiplicities(const std::vector<BiSlicePoly>& factors,
                                  const SphereDescriptor& base, double tol = 1e-9);

// A zero of a factored polynomial of degree >= 1: the root of its leftmost
// factor, joined from one quaternionic root per component.
Element fta_witness(const FactoredPoly& poly);

}  // namespace r3
