#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "helpers.hpp"
#include "r3/cauchy.hpp"

using namespace r3;
using namespace r3::testing;

namespace {

SliceContour circle(const Quat& I, double r = 2.0, int n = 512, double c = 0.0) {
  return SliceContour(c, r, I, n);
}

}  // namespace

TEST(KernelQuat, RealSourceReducesToResolvent) {
  expect_quat(cauchy_kernel_quat(Quat::real(2), Quat::e23()), Quat{2, 1, 0, 0} / 5.0, 1e-15);
  gen::Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    const Quat s = Quat::real(rng.uniform(-3, 3));
    const Quat q = rng.quat();
    if (std::abs(q.re() - s.re()) < 1e-3 && q.im_abs() < 1e-3) continue;
    expect_quat(cauchy_kernel_quat(s, q), inverse(s - q), 1e-10);
  }
}

TEST(KernelQuat, SingularOnSphereOfSource) {
  const Quat s{1, 2, 0, 0};
  EXPECT_EQ(kind_of([&] { cauchy_kernel_quat(s, s); }), ErrorKind::OnSingularSphere);
  EXPECT_EQ(kind_of([&] { cauchy_kernel_quat(s, Quat{1, 0, 0, 2}); }),
            ErrorKind::OnSingularSphere);
  EXPECT_NO_THROW(cauchy_kernel_quat(s, Quat{1, 0, 0, 2.1}));
}

TEST(KernelQuat, SingularSetIsExactlyTheSphere) {
  gen::Rng rng(72);
  for (int t = 0; t < 500; ++t) {
    const Quat s = rng.quat();
    const Quat on = Quat::real(s.re()) + rng.unit() * s.im_abs();
    EXPECT_EQ(kind_of([&] { cauchy_kernel_quat(s, on, 1e-9); }), ErrorKind::OnSingularSphere);
    const Quat off = on + Quat::real(0.05);
    EXPECT_NO_THROW(cauchy_kernel_quat(s, off, 1e-9));
  }
}

TEST(Kernel, Joined) {
  const Element k = cauchy_kernel(Element::scalar(2), B(Blade::e1));
  const QuatPair s = split(k);
  expect_quat(s.p, cauchy_kernel_quat(Quat::real(2), Quat::e23(-1)), 1e-15);
  expect_quat(s.q, cauchy_kernel_quat(Quat::real(2), Quat::e23()), 1e-15);

  expect_element(cauchy_kernel(Element::scalar(3), Element::scalar(1)), Element::scalar(0.5), 1e-15);

  const ConePoint src = cone_point(0, 1, Quat::e23(), Quat::e13());
  const ConePoint x = cone_point(0, 1, Quat::e12(), Quat::e12());
  EXPECT_EQ(kind_of([&] { cauchy_kernel(src, x); }), ErrorKind::OnSingularSphere);
}

TEST(Contour, Validation) {
  EXPECT_THROW(SliceContour(0, 1, Quat::e23(), 8), std::invalid_argument);
  EXPECT_THROW(SliceContour(0, -1, Quat::e23(), 64), std::invalid_argument);
  EXPECT_EQ(kind_of([] { SliceContour(0, 1, Quat::e23(2), 64); }), ErrorKind::NotImaginaryUnit);
}

TEST(CauchyTheorem, IntegralsVanish) {
  const ContourCheck id =
      contour_integral_vanishes(BiSlicePoly::monomial(1), circle(Quat::e23(), 1, 256),
                                circle(Quat::e13(), 1, 256));
  EXPECT_LT(id.integral_f, 1e-10);
  EXPECT_LT(id.integral_g, 1e-10);

  gen::Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    const BiSlicePoly P = rng.poly(4);
    const ContourCheck c = contour_integral_vanishes(P, circle(rng.unit(), 1.5), circle(rng.unit(), 1.5));
    EXPECT_LT(c.integral_f, 1e-8);
    EXPECT_LT(c.integral_g, 1e-8);
    EXPECT_TRUE(c.vanishes());
  }
}

TEST(CauchyTheorem, ConjugateDoesNotIntegrateToZero) {
  const double r = 1.5;
  const Quat v = contour_integral([](const Quat& s) { return s.conjugate(); },
                                  circle(Quat::e12(), r, 256));
  EXPECT_NEAR(v.abs(), 2 * std::numbers::pi * r * r, 1e-10);
}

TEST(CauchyFormula, ConstantReproduces) {
  gen::Rng rng(74);
  const auto cI = circle(Quat::e23());
  const auto cJ = circle(Quat::e13());
  for (int t = 0; t < 20; ++t) {
    const ConePoint x = rng.cone(0.8, 0.8);
    expect_element(cauchy_reconstruct(BiSlicePoly::constant(kOne), cI, cJ, x.element()), kOne, 1e-8);
  }
}

TEST(CauchyFormula, SquareAtHalfE1) {
  const Element x = B(Blade::e1, 0.5);
  const Element v = cauchy_reconstruct(BiSlicePoly::monomial(2), circle(Quat::e23()), circle(Quat::e13()), x);
  expect_element(v, Element::scalar(-0.25), 1e-7);
}

TEST(CauchyFormula, RandomCubicsAtInteriorPoints) {
  gen::Rng rng(75);
  for (int t = 0; t < 50; ++t) {
    const BiSlicePoly P = rng.poly(3);
    const ConePoint x = rng.cone(1.0, 1.0);
    const auto cI = circle(rng.unit());
    const auto cJ = circle(rng.unit());
    const Element got = cauchy_reconstruct(P, cI, cJ, x.element());
    EXPECT_LT(euclidean(got - P.eval(x)), 1e-6);
  }
}

TEST(CauchyFormula, ConvergesWithNodeCount) {
  const BiSlicePoly P = BiSlicePoly::monomial(5);
  const ConePoint x = cone_point(0.9, 1.5, Quat::e12(), Quat::e23());
  auto err = [&](int n) {
    const auto v = cauchy_reconstruct(P, circle(Quat::e23(), 2, n), circle(Quat::e13(), 2, n), x.element());
    return euclidean(v - P.eval(x));
  };
  const double e64 = err(64), e128 = err(128);
  EXPECT_LT(e128, e64 / 10);
}

TEST(CauchyFormula, OutsideContour) {
  EXPECT_EQ(kind_of([] {
              cauchy_reconstruct(BiSlicePoly::monomial(1), circle(Quat::e23(), 1), circle(Quat::e13(), 1),
                                 B(Blade::e1, 1.5));
            }),
            ErrorKind::PointOutsideContour);
}

TEST(KernelRegularity, Residuals) {
  const ConePoint s = cone_point(3, 0, Quat::e23(), Quat::e23());
  const ConePoint x = cone_point(0, 1, Quat::e23(-1), Quat::e23());
  const KernelRegularity r = kernel_regularity_residual(s, x, 1e-4);
  EXPECT_LT(r.left_in_x, 1e-7);
  EXPECT_LT(r.right_in_s, 1e-7);
}

TEST(KernelRegularity, SecondOrder) {
  gen::Rng rng(76);
  for (int t = 0; t < 20; ++t) {
    const ConePoint s = cone_point(rng.uniform(1.5, 2.5), rng.uniform(0.5, 1), rng.unit(), rng.unit());
    const ConePoint x = rng.cone(0.5, 0.5);
    const auto a = kernel_regularity_residual(s, x, 2e-2);
    const auto b = kernel_regularity_residual(s, x, 1e-2);
    EXPECT_LT(b.left_in_x, 0.35 * a.left_in_x + 1e-11);
    EXPECT_LT(b.right_in_s, 0.35 * a.right_in_s + 1e-11);
  }
}
