#pragma once

#include <gtest/gtest.h>

#include "r3/clifford3.hpp"
#include "r3/error.hpp"
#include "r3/qsplit.hpp"

namespace r3::testing {

inline Element B(Blade b, double c = 1.0) { return Element::basis(b, c); }

// Kind of the DomainError raised by `fn`; records a failure if none is.
template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no DomainError raised";
  return ErrorKind::SingularElement;
}

inline void expect_quat(const Quat& a, const Quat& b, double tol = 0.0) {
  EXPECT_NEAR(a.w, b.w, tol);
  EXPECT_NEAR(a.a23, b.a23, tol);
  EXPECT_NEAR(a.a13, b.a13, tol);
  EXPECT_NEAR(a.a12, b.a12, tol);
}

inline void expect_element(const Element& a, const Element& b, double tol = 0.0) {
  for (std::size_t i = 0; i < kBladeCount; ++i) EXPECT_NEAR(a[i], b[i], tol) << "coefficient " << i;
}

}  // namespace r3::testing
