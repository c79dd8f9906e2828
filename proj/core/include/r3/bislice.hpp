#pragma once

/**
 * @file bislice.hpp
 * @brief Bi-slice regular polynomials over R3 with right coefficients,
 *        P(x) = sum x^n a_n, and their quaternionic split components.
 *
 * Because x^n = omega+ p^n + omega- q^n for x = omega+ p + omega- q, a
 * polynomial evaluates componentwise:
 *   P(x) = omega+ F(p) + omega- G(q),  a_n = omega+ b_n + omega- c_n,
 * where F and G carry the coefficients b_n and c_n.
 */

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "r3/clifford3.hpp"
#include "r3/qsplit.hpp"
#include "r3/stem.hpp"

namespace r3 {

class QuatPoly {
 public:
  QuatPoly() = default;
  explicit QuatPoly(std::vector<Quat> coeffs) : coeffs_(std::move(coeffs)) {}

  // (q - root)
  static QuatPoly linear(const Quat& root) { return QuatPoly({-root, Quat::real(1.0)}); }

  const std::vector<Quat>& coeffs() const { return coeffs_; }
  Quat coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quat{}; }

  // Index of the last coefficient with modulus > tol, or -1 for zero.
  int degree(double tol = kDefaultTol) const;

  Quat eval(const Quat& q) const;

  QuatPoly conjugate() const;

  friend QuatPoly operator+(const QuatPoly& a, const QuatPoly& b);
  friend QuatPoly operator-(const QuatPoly& a, const QuatPoly& b);
  // *-product: coefficient convolution c_k = sum_{i+j=k} a_i b_j.
  friend QuatPoly star(const QuatPoly& a, const QuatPoly& b);

 private:
  std::vector<Quat> coeffs_;
};

QuatPoly symmetrization(const QuatPoly& F);

// Long division by a monic real polynomial (coefficients lowest first).
// Real coefficients are central, so the quotient is unambiguous.
struct QuatDivision {
  QuatPoly quotient;
  QuatPoly remainder;
};
QuatDivision divide_by_real(const QuatPoly& F, const std::vector<double>& monic_divisor);

class BiSlicePoly {
 public:
  BiSlicePoly() = default;
  explicit BiSlicePoly(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {}

  static BiSlicePoly constant(const Element& c) { return BiSlicePoly({c}); }
  // x - root
  static BiSlicePoly linear(const Element& root) { return BiSlicePoly({-root, kOne}); }
  static BiSlicePoly monomial(int n, const Element& coeff = kOne);

  const std::vector<Element>& coeffs() const { return coeffs_; }
  Element coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Element{}; }

  int degree(double tol = kDefaultTol) const;

  // Through the split; valid on all of R3.
  Element eval(const Element& x) const;
  Element eval(const ConePoint& x) const { return eval(x.element()); }

  // Horner with the Clifford product; independent of the split.
  Element eval_direct(const Element& x) const;

  friend BiSlicePoly operator+(const BiSlicePoly& a, const BiSlicePoly& b);
  friend BiSlicePoly operator-(const BiSlicePoly& a, const BiSlicePoly& b);
  friend BiSlicePoly operator*(double s, const BiSlicePoly& a);

 private:
  std::vector<Element> coeffs_;
};

std::pair<QuatPoly, QuatPoly> split_poly(const BiSlicePoly& P);
BiSlicePoly join_poly(const QuatPoly& F, const QuatPoly& G);

BiSlicePoly star_mul(const BiSlicePoly& P, const BiSlicePoly& Q);

// f*g(x) = omega+ A(p) C(A(p)^-1 p A(p)) + omega- B(q) D(B(q)^-1 q B(q)).
// Returns 0 when both components of f(x) vanish; throws NotInvertibleAtPoint
// when exactly one does.
Element star_mul_pointwise(const BiSlicePoly& f, const BiSlicePoly& g, const Element& x,
                           double tol = kDefaultTol);

BiSlicePoly regular_conjugate(const BiSlicePoly& P);
BiSlicePoly symmetrization(const BiSlicePoly& P);

// Values of a bi-slice function on two slices through (x, y): F at x +- W1 y
// and G at x +- W2 y.
struct SliceSamples {
  Quat w1;
  Quat w2;
  Quat f_plus;
  Quat f_minus;
  Quat g_plus;
  Quat g_minus;
};

SliceSamples sample_slices(const BiSlicePoly& P, double x, double y, const Quat& w1,
                           const Quat& w2);

// Rebuilds f at the cone point from the slice samples:
//   omega+ [ (F+ + F-)/2 - I W1 (F+ - F-)/2 ] + omega- [ (G+ + G-)/2 - J W2 (G+ - G-)/2 ].
// Throws NotImaginaryUnit when W1 or W2 is not a unit.
Element representation_formula(const SliceSamples& samples, const ConePoint& at,
                               double tol = kDefaultTol);

// F restricted to C_I written as A + B K with A, B holomorphic C_I-valued.
// Complex numbers are read in C_I via i -> I.
struct SplittingProjection {
  std::vector<std::complex<double>> A;
  std::vector<std::complex<double>> B;
  Quat I;
  Quat K;

  Quat eval(std::complex<double> z) const;
};

// Throws NotImaginaryUnit or NotOrthogonal.
SplittingProjection splitting_projection(const QuatPoly& F, const Quat& I, const Quat& K,
                                         double tol = kDefaultTol);

inline Quat in_slice(std::complex<double> z, const Quat& I) {
  return Quat::real(z.real()) + I * z.imag();
}

using SliceMap = std::function<Element(const Element&)>;

// |1/2 (omega+ (dx + I dy) + omega- (dx + J dy)) f| with central differences
// of step h along the slice of x.
double dbar_residual(const SliceMap& f, const ConePoint& x, double h);
double dbar_residual(const BiSlicePoly& P, const ConePoint& x, double h);

// |1/2 (dx + K dy) f| with K = omega+ I + omega- J.
double dbar_k_residual(const SliceMap& f, const ConePoint& x, double h);
double dbar_k_residual(const BiSlicePoly& P, const ConePoint& x, double h);

// The stem function of P: F(z) = sum z^n a_n with z complex.
StemFunction polynomial_stem(const BiSlicePoly& P, StemDomain domain = {});

}  // namespace r3
