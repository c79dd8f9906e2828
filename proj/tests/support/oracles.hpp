#pragma once

// Reference implementations used only by the tests. Each is written from a
// different starting point than the library so that agreement means something.

#include <array>
#include <complex>
#include <vector>

#include "r3/clifford3.hpp"
#include "r3/qsplit.hpp"

namespace r3::oracle {

// Clifford product by word reduction: each blade is a sorted list of
// generator indices; concatenate, bubble sort counting swaps, cancel equal
// neighbours with e_i e_i = -1.
Element clifford_mul(const Element& x, const Element& y);

// Hamilton quaternion with the textbook i, j, k table.
struct Hamilton {
  double w, x, y, z;
  friend Hamilton operator*(const Hamilton& a, const Hamilton& b);
};
Hamilton to_hamilton(const Quat& q);
Quat from_hamilton(const Hamilton& h);
Quat quat_mul(const Quat& a, const Quat& b);

// Split by solving the 8x8 linear system omega+ p + omega- q = x with
// Gaussian elimination, the columns built from clifford_mul.
QuatPair split_solve(const Element& x);

// Determinant of an n x n complex matrix by partial-pivot elimination.
std::complex<double> complex_det(std::vector<std::vector<std::complex<double>>> m);

// det of a 2x2 quaternionic matrix through its 4x4 complex adjoint; the
// result is real and nonnegative and equals the square of the Study-type
// determinant.
double adjoint_det(const Quat& a, const Quat& b, const Quat& c, const Quat& d);

// Coefficient-sequence polynomial helpers over Hamilton quaternions.
std::vector<Quat> quat_poly_mul(const std::vector<Quat>& a, const std::vector<Quat>& b);
Quat quat_poly_eval(const std::vector<Quat>& coeffs, const Quat& q);

}  // namespace r3::oracle
