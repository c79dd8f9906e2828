#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "r3/error.hpp"
#include "r3/qsplit.hpp"

using namespace r3;

using namespace r3::testing;

TEST(Quat, ProductMatchesHamilton) {
  gen::Rng rng(21);
  for (int t = 0; t < 1000; ++t) {
    const Quat a = rng.quat(), b = rng.quat();
    expect_quat(a * b, oracle::quat_mul(a, b), 1e-14);
  }
}

TEST(Quat, ProductMatchesEvenSubalgebra) {
  gen::Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const Quat a = rng.quat(), b = rng.quat();
    EXPECT_TRUE(approx_equal(embed(a * b), mul(embed(a), embed(b)), 1e-14));
  }
}

TEST(Quat, HamiltonView) {
  const Quat i = Quat::from_hamilton(0, 1, 0, 0);
  const Quat j = Quat::from_hamilton(0, 0, 1, 0);
  const Quat k = Quat::from_hamilton(0, 0, 0, 1);
  expect_quat(i * j, k);
  expect_quat(i, Quat::e23());
  expect_quat(j, Quat::e13(-1));
}

TEST(Split, PaperExamples) {
  const QuatPair s1 = split(B(Blade::e1));
  expect_quat(s1.p, Quat::e23(-1));
  expect_quat(s1.q, Quat::e23(1));

  const QuatPair s12 = split(B(Blade::e12));
  expect_quat(s12.p, Quat::e12());
  expect_quat(s12.q, Quat::e12());

  const QuatPair s = split(B(Blade::e2) + B(Blade::e23));
  expect_quat(s.p, Quat::e13() + Quat::e23());
  expect_quat(s.q, Quat::e23() - Quat::e13());
}

TEST(Split, MatchesLinearSolve) {
  gen::Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    const Element x = rng.element(3.0);
    const QuatPair a = split(x);
    const QuatPair b = oracle::split_solve(x);
    expect_quat(a.p, b.p, 1e-13);
    expect_quat(a.q, b.q, 1e-13);
  }
}

TEST(Join, Examples) {
  EXPECT_EQ(join(Quat::real(1), Quat::real(1)), kOne);
  EXPECT_TRUE(approx_equal(join(Quat::e23(-1), Quat::e23()), B(Blade::e1), 0));
  const Quat p{1, 2, 3, 4};
  EXPECT_TRUE(approx_equal(join(p, p), embed(p), 0));
}

TEST(Split, RoundTrip) {
  gen::Rng rng(24);
  for (int t = 0; t < 10000; ++t) {
    const Element x = rng.element(5.0);
    EXPECT_TRUE(approx_equal(join(split(x)), x, 1e-12));
    const Quat p = rng.quat(5.0), q = rng.quat(5.0);
    const QuatPair s = split(join(p, q));
    expect_quat(s.p, p, 1e-12);
    expect_quat(s.q, q, 1e-12);
  }
}

TEST(Split, TraceAndNormSplit) {
  gen::Rng rng(25);
  for (int t = 0; t < 500; ++t) {
    const Element x = rng.element();
    const QuatPair s = split(x);
    const QuatPair ts = split(trace(x));
    expect_quat(ts.p, Quat::real(2 * s.p.re()), 1e-13);
    expect_quat(ts.q, Quat::real(2 * s.q.re()), 1e-13);
    const QuatPair ns = split(norm_n(x));
    expect_quat(ns.p, Quat::real(s.p.norm_sq()), 1e-13);
    expect_quat(ns.q, Quat::real(s.q.norm_sq()), 1e-13);
  }
}

TEST(Cone, Membership) {
  EXPECT_TRUE(in_cone(B(Blade::e1)));
  EXPECT_FALSE(in_cone(B(Blade::e123)));
  EXPECT_FALSE(in_cone(B(Blade::e1) + B(Blade::e23)));
}

TEST(Cone, EquivalentToEqualRealPartAndModulus) {
  gen::Rng rng(26);
  int inside = 0;
  for (int t = 0; t < 10000; ++t) {
    // Half the draws are built on the cone, half are generic.
    const Element x = (t % 2 == 0) ? rng.cone_element(2.0) : rng.element(2.0);
    const QuatPair s = split(x);
    const bool pair_test = std::abs(s.p.re() - s.q.re()) <= 1e-9 &&
                           std::abs(s.p.im_abs() - s.q.im_abs()) <= 1e-9;
    EXPECT_EQ(in_cone(x, 1e-9), pair_test) << t;
    inside += pair_test;
  }
  EXPECT_GE(inside, 5000);
}

TEST(Cone, TraceAndNormAreReal) {
  gen::Rng rng(27);
  for (int t = 0; t < 1000; ++t) {
    const Element x = rng.cone_element(2.0);
    for (const Element& v : {trace(x), norm_n(x)})
      for (std::size_t i = 1; i < kBladeCount; ++i) EXPECT_NEAR(v[i], 0.0, 1e-12);
  }
}

TEST(SqrtMinusOne, Examples) {
  EXPECT_TRUE(is_sqrt_minus_one(B(Blade::e1)));
  EXPECT_TRUE(is_sqrt_minus_one(B(Blade::e12)));
  EXPECT_FALSE(is_sqrt_minus_one(B(Blade::e12) + B(Blade::e23)));
}

TEST(SqrtMinusOne, ImpliesConeAndSquare) {
  gen::Rng rng(28);
  for (int t = 0; t < 500; ++t) {
    const Element x = join(rng.unit(), rng.unit());
    ASSERT_TRUE(is_sqrt_minus_one(x, 1e-12));
    EXPECT_TRUE(in_cone(x, 1e-12));
    EXPECT_TRUE(approx_equal(mul(x, x), Element::scalar(-1), 1e-12));
  }
}

TEST(Inverse, Examples) {
  EXPECT_TRUE(approx_equal(inverse(Element::scalar(2)), Element::scalar(0.5), 0));
  EXPECT_TRUE(approx_equal(inverse(B(Blade::e12)), B(Blade::e12, -1), 1e-15));
  EXPECT_EQ(kind_of([] { inverse(kOmegaPlus); }), ErrorKind::SingularElement);
}

TEST(Inverse, IsTwoSided) {
  gen::Rng rng(29);
  for (int t = 0; t < 500; ++t) {
    const Element x = rng.element();
    const Element xi = inverse(x);
    EXPECT_TRUE(approx_equal(mul(x, xi), kOne, 1e-9));
    EXPECT_TRUE(approx_equal(mul(xi, x), kOne, 1e-9));
  }
}

TEST(Power, Examples) {
  EXPECT_TRUE(approx_equal(power(B(Blade::e1), 2), Element::scalar(-1), 1e-15));
  gen::Rng rng(30);
  EXPECT_TRUE(approx_equal(power(rng.element(), 0), kOne, 0));
  const Element y = kOne + B(Blade::e1);
  EXPECT_TRUE(approx_equal(power(y, 3), mul(mul(y, y), y), 1e-12));
  EXPECT_EQ(kind_of([] { power(kOmegaMinus, -1); }), ErrorKind::SingularElement);
}

TEST(Power, MatchesRepeatedProduct) {
  gen::Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const Element x = rng.element();
    Element acc = kOne;
    for (int n = 0; n <= 8; ++n) {
      EXPECT_TRUE(approx_equal(power(x, n), acc, 1e-12 * (1 + max_abs(acc))));
      acc = mul(acc, x);
    }
  }
}

TEST(Power, NegativeExponents) {
  gen::Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    const Element x = rng.element() + Element::scalar(2.0);
    EXPECT_TRUE(approx_equal(mul(power(x, -3), power(x, 3)), kOne, 1e-10));
  }
}

TEST(ConePoint, Construction) {
  const ConePoint a = cone_point(0, 1, Quat::e23(), Quat::e23());
  EXPECT_TRUE(approx_equal(a.element(), B(Blade::e23), 0));
  const ConePoint b = cone_point(0, 1, Quat::e23(-1), Quat::e23());
  EXPECT_TRUE(approx_equal(b.element(), B(Blade::e1), 0));
  const ConePoint c = cone_point(3, 0, Quat::e12(), Quat::e13());
  EXPECT_TRUE(approx_equal(c.element(), Element::scalar(3), 0));
  EXPECT_DOUBLE_EQ(c.trace(), 6.0);
  EXPECT_DOUBLE_EQ(b.norm(), 1.0);
  EXPECT_EQ(kind_of([] { cone_point(0, 1, Quat::e23(2), Quat::e23()); }),
            ErrorKind::NotImaginaryUnit);
  EXPECT_EQ(kind_of([] { cone_point(0, 1, Quat::e23(), Quat{1, 0, 0, 0}); }),
            ErrorKind::NotImaginaryUnit);
}

TEST(ConePoint, FromElement) {
  gen::Rng rng(33);
  for (int t = 0; t < 500; ++t) {
    const ConePoint c = rng.cone(2.0, 2.0);
    const ConePoint d = ConePoint::from_element(c.element(), 1e-12);
    EXPECT_TRUE(approx_equal(d.element(), c.element(), 1e-12));
    EXPECT_NEAR(d.alpha(), c.alpha(), 1e-12);
    EXPECT_NEAR(std::abs(d.beta()), std::abs(c.beta()), 1e-12);
  }
  EXPECT_EQ(kind_of([] { ConePoint::from_element(B(Blade::e123)); }), ErrorKind::NotInCone);
  const ConePoint real = ConePoint::from_element(Element::scalar(4));
  EXPECT_TRUE(real.is_real());
}

TEST(ConePoint, Ball) {
  const ConePoint e1 = ConePoint::from_element(B(Blade::e1));
  EXPECT_TRUE(in_ball(e1, 2));
  EXPECT_FALSE(in_ball(e1, 1));
  EXPECT_TRUE(in_ball(ConePoint::from_element(Element::scalar(3)), 10));
}

TEST(ConePoint, BallSplitsIntoQuaternionicBalls) {
  gen::Rng rng(34);
  for (int t = 0; t < 1000; ++t) {
    const ConePoint x = rng.cone(2.0, 2.0);
    const double R = rng.uniform(0.1, 6.0);
    EXPECT_EQ(in_ball(x, R), x.p().norm_sq() < R && x.q().norm_sq() < R);
  }
}

TEST(Sphere, Descriptor) {
  const SphereDescriptor s = SphereDescriptor::of(Quat{1, 0, 3, 4});
  EXPECT_DOUBLE_EQ(s.center, 1);
  EXPECT_DOUBLE_EQ(s.radius, 5);
  EXPECT_TRUE(s.contains(Quat{1, 5, 0, 0}));
  EXPECT_TRUE(SphereDescriptor::of(Quat::real(2)).is_point());
  EXPECT_TRUE(same_sphere(Quat::e23(2), Quat::e13(2)));
  EXPECT_FALSE(same_sphere(Quat::e23(2), Quat::e13(4)));
}
