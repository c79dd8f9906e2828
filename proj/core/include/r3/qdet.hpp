#pragma once

/**
 * @file qdet.hpp
 * @brief 2x2 matrices over R3, their quaternionic split blocks, right
 *        invertibility and the determinant
 *   det A = sqrt( n(a')n(d') + n(c')n(b') - 2 Re(d' conj(b') a' conj(c')) ).
 */

#include <utility>

#include "r3/clifford3.hpp"
#include "r3/qsplit.hpp"

namespace r3 {

struct QuatMatrix2 {
  Quat a, b;
  Quat c, d;

  static QuatMatrix2 identity() { return {Quat::real(1), {}, {}, Quat::real(1)}; }
  friend bool operator==(const QuatMatrix2&, const QuatMatrix2&) = default;
};

QuatMatrix2 matmul(const QuatMatrix2& A, const QuatMatrix2& B);

// The radicand above for one quaternionic block.
double det_radicand(const QuatMatrix2& A);

class Matrix2 {
 public:
  Matrix2() = default;
  Matrix2(const Element& a, const Element& b, const Element& c, const Element& d);

  static Matrix2 identity() { return {kOne, {}, {}, kOne}; }

  const Element& a() const { return a_; }
  const Element& b() const { return b_; }
  const Element& c() const { return c_; }
  const Element& d() const { return d_; }

  // Blocks of A = omega+ A' + omega- A''.
  const QuatMatrix2& plus() const { return plus_; }
  const QuatMatrix2& minus() const { return minus_; }

  // All four entries lie in the quadratic cone.
  bool in_cone(double tol = kDefaultTol) const;

 private:
  Element a_, b_, c_, d_;
  QuatMatrix2 plus_{};
  QuatMatrix2 minus_{};
};

std::pair<QuatMatrix2, QuatMatrix2> split_matrix(const Matrix2& A);
Matrix2 join_matrix(const QuatMatrix2& plus, const QuatMatrix2& minus);

Matrix2 matmul(const Matrix2& A, const Matrix2& B);

struct DetReport {
  double radicand_plus = 0.0;   // from A'
  double radicand_minus = 0.0;  // from A''
  double det_plus = 0.0;
  double det_minus = 0.0;
};

// Both block formulas. Throws NegativeRadicand when a radicand is below -tol.
DetReport det_report(const Matrix2& A, double tol = kDefaultTol);

// The A' formula, defined on all of M(2, R3). Agrees with the A'' formula
// when the entries lie in the cone.
double det(const Matrix2& A, double tol = kDefaultTol);

// Tries b(c - d b^-1 a), a(d - c a^-1 b), c(b - a c^-1 d), d(a - b d^-1 c) in
// turn, skipping any whose inverse is singular; true on the first whose split
// components both have modulus > tol.
bool is_right_invertible(const Matrix2& A, double tol = kDefaultTol);

}  // namespace r3
