#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "r3/bislice.hpp"
#include "r3/stem.hpp"

using namespace r3;
using namespace r3::testing;

namespace {

StemFunction square_stem() {
  StemFunction F;
  F.f1 = [](double a, double b) { return Quat::real(a * a - b * b); };
  F.f2 = [](double a, double b) { return Quat::real(2 * a * b); };
  F.g1 = F.f1;
  F.g2 = F.f2;
  return F;
}

const ConePoint kE1 = cone_point(0, 1, Quat::e23(-1), Quat::e23());

}  // namespace

TEST(Induce, Identity) {
  gen::Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const ConePoint x = rng.cone(3.0, 3.0);
    expect_element(induce(stems::identity(), x), x.element(), 1e-14);
  }
}

TEST(Induce, Constant) {
  const Element c = B(Blade::e12, 2) - B(Blade::e3) + B(Blade::e123, 0.5);
  gen::Rng rng(42);
  expect_element(induce(stems::constant(c), rng.cone()), c, 1e-15);
}

TEST(Induce, SquareAtE1) {
  expect_element(induce(square_stem(), kE1), Element::scalar(-1), 1e-15);
  expect_element(induce(square_stem(), kE1), power(B(Blade::e1), 2), 1e-15);
  expect_element(induce(stems::monomial(2), kE1), Element::scalar(-1), 1e-14);
}

TEST(Induce, OutOfDomain) {
  const StemFunction F = stems::identity({-1, 1, 1});
  EXPECT_EQ(kind_of([&] { induce(F, cone_point(2, 0, Quat::e23(), Quat::e23())); }),
            ErrorKind::OutOfDomain);
  EXPECT_EQ(kind_of([&] { spherical_value(F, cone_point(0, 3, Quat::e23(), Quat::e23())); }),
            ErrorKind::OutOfDomain);
}

TEST(Induce, WellDefinedUnderSignFlip) {
  gen::Rng rng(43);
  const StemFunction F = stems::monomial(3);
  for (int t = 0; t < 200; ++t) {
    const double a = rng.uniform(), b = rng.uniform();
    const Quat I = rng.unit(), J = rng.unit();
    expect_element(induce(F, cone_point(a, b, I, J)), induce(F, cone_point(a, -b, -I, -J)), 1e-13);
  }
}

TEST(Induce, PolynomialStemMatchesEvaluation) {
  gen::Rng rng(44);
  for (int t = 0; t < 200; ++t) {
    const BiSlicePoly P = rng.poly(rng.integer(0, 4));
    const ConePoint x = rng.cone();
    expect_element(induce(polynomial_stem(P), x), P.eval(x), 1e-10);
  }
}

TEST(Parity, Reports) {
  const CheckReport id = check_parity(stems::identity(), 100);
  EXPECT_TRUE(id.passed);
  EXPECT_EQ(id.max_violation, 0.0);

  StemFunction bad = stems::identity();
  bad.f2 = [](double, double) { return Quat::real(1); };
  EXPECT_FALSE(check_parity(bad, 10).passed);

  EXPECT_TRUE(check_parity(square_stem(), 100).passed);
}

TEST(CauchyRiemann, Reports) {
  const CheckReport id = check_cauchy_riemann(stems::identity(), 1e-4, 100);
  EXPECT_TRUE(id.passed);
  EXPECT_LT(id.max_violation, 1e-9);

  const CheckReport sq = check_cauchy_riemann(square_stem(), 1e-3, 100);
  EXPECT_TRUE(sq.passed);

  StemFunction bad = stems::constant(kOne);
  bad.f1 = [](double a, double) { return Quat::real(a * a); };
  EXPECT_FALSE(check_cauchy_riemann(bad, 1e-3, 50).passed);
}

TEST(CauchyRiemann, HolomorphicPolynomialStemsPass) {
  gen::Rng rng(45);
  for (int t = 0; t < 20; ++t) {
    const BiSlicePoly P = rng.poly(rng.integer(1, 5));
    EXPECT_TRUE(check_cauchy_riemann(polynomial_stem(P, {-2, 2, 2}), 1e-3, 50).passed);
  }
}

TEST(Spherical, Value) {
  gen::Rng rng(46);
  const ConePoint x = rng.cone();
  expect_element(spherical_value(stems::identity(), x), Element::scalar(x.alpha()), 0);
  const Element c = B(Blade::e13, 3);
  expect_element(spherical_value(stems::constant(c), x), c, 1e-15);
  expect_element(spherical_value(square_stem(), kE1), Element::scalar(-1), 0);
}

TEST(Spherical, Derivative) {
  gen::Rng rng(47);
  const ConePoint x = rng.cone(1.0, 1.0);
  expect_element(spherical_derivative(stems::identity(), x), kOne, 1e-15);
  expect_element(spherical_derivative(stems::constant(B(Blade::e2)), x), Element{}, 0);
  expect_element(spherical_derivative(square_stem(), x), Element::scalar(2 * x.alpha()), 1e-14);
  EXPECT_EQ(kind_of([] {
              spherical_derivative(stems::identity(), cone_point(1, 0, Quat::e23(), Quat::e23()));
            }),
            ErrorKind::RealPoint);
}

TEST(Spherical, Decomposition) {
  gen::Rng rng(48);
  for (int t = 0; t < 200; ++t) {
    const BiSlicePoly P = rng.poly(3);
    const StemFunction F = polynomial_stem(P);
    const ConePoint x = rng.cone();
    if (x.is_real(1e-3)) continue;
    const Element im = join(x.unit_p() * x.beta(), x.unit_q() * x.beta());
    const Element rebuilt = spherical_value(F, x) + mul(im, spherical_derivative(F, x));
    expect_element(rebuilt, induce(F, x), 1e-12);
  }
}
