#include "r3/stem.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "r3/error.hpp"
#include "r3/format.hpp"

namespace r3 {
namespace stems {

StemFunction identity(StemDomain domain) {
  auto re = [](double a, double) { return Quat::real(a); };
  auto im = [](double, double b) { return Quat::real(b); };
  return {re, im, re, im, domain};
}

StemFunction monomial(int n, StemDomain domain) {
  auto re = [n](double a, double b) { return Quat::real(std::pow(std::complex<double>(a, b), n).real()); };
  auto im = [n](double a, double b) { return Quat::real(std::pow(std::complex<double>(a, b), n).imag()); };
  return {re, im, re, im, domain};
}

StemFunction constant(const Element& c, StemDomain domain) {
  const auto [p, q] = split(c);
  auto zero = [](double, double) { return Quat{}; };
  return {[p](double, double) { return p; }, zero, [q](double, double) { return q; }, zero,
          domain};
}

}  // namespace stems

namespace {

void require_in_domain(const StemFunction& F, const ConePoint& at) {
  if (!F.domain.contains(at.alpha(), at.beta())) {
    throw DomainError(ErrorKind::OutOfDomain,
                      "(" + format_real(at.alpha()) + ", " + format_real(at.beta()) +
                          ") lies outside the stem domain");
  }
}

struct Sampler {
  explicit Sampler(const StemDomain& d, std::uint64_t seed)
      : rng(seed), alpha(d.alpha_min, d.alpha_max), beta(-d.beta_max, d.beta_max) {}
  std::pair<double, double> next() { return {alpha(rng), beta(rng)}; }

  std::mt19937_64 rng;
  std::uniform_real_distribution<double> alpha;
  std::uniform_real_distribution<double> beta;
};

const StemFunction::Component& component(const StemFunction& F, int k) {
  switch (k) {
    case 0: return F.f1;
    case 1: return F.f2;
    case 2: return F.g1;
    default: return F.g2;
  }
}

}  // namespace

Element induce(const StemFunction& F, const ConePoint& at) {
  require_in_domain(F, at);
  const double a = at.alpha();
  const double b = at.beta();
  return join(F.f1(a, b) + at.unit_p() * F.f2(a, b), F.g1(a, b) + at.unit_q() * F.g2(a, b));
}

CheckReport check_parity(const StemFunction& F, int samples, double tol, std::uint64_t seed) {
  Sampler sampler(F.domain, seed);
  CheckReport report;
  report.threshold = tol;
  for (int s = 0; s < samples; ++s) {
    const auto [a, b] = sampler.next();
    report.max_violation = std::max({report.max_violation,
                                     max_abs(F.f1(a, b) - F.f1(a, -b)),
                                     max_abs(F.f2(a, b) + F.f2(a, -b)),
                                     max_abs(F.g1(a, b) - F.g1(a, -b)),
                                     max_abs(F.g2(a, b) + F.g2(a, -b))});
  }
  report.passed = report.max_violation < tol;
  return report;
}

CheckReport check_cauchy_riemann(const StemFunction& F, double h, int samples,
                                 CauchyRiemannOptions options) {
  Sampler sampler(F.domain, options.seed);
  const double H = std::max(1e-2, 10.0 * h);
  double second_scale = 0.0;
  double value_scale = 0.0;
  CheckReport report;
  for (int s = 0; s < samples; ++s) {
    const auto [a, b] = sampler.next();
    auto d_alpha = [&](const StemFunction::Component& f) {
      return (f(a + h, b) - f(a - h, b)) / (2.0 * h);
    };
    auto d_beta = [&](const StemFunction::Component& f) {
      return (f(a, b + h) - f(a, b - h)) / (2.0 * h);
    };
    report.max_violation = std::max({report.max_violation,
                                     max_abs(d_alpha(F.f1) - d_beta(F.f2)),
                                     max_abs(d_beta(F.f1) + d_alpha(F.f2)),
                                     max_abs(d_alpha(F.g1) - d_beta(F.g2)),
                                     max_abs(d_beta(F.g1) + d_alpha(F.g2))});
    for (int k = 0; k < 4; ++k) {
      const auto& f = component(F, k);
      const Quat center = f(a, b);
      value_scale = std::max(value_scale, max_abs(center));
      second_scale = std::max(
          {second_scale, max_abs(f(a + H, b) - 2.0 * center + f(a - H, b)) / (H * H),
           max_abs(f(a, b + H) - 2.0 * center + f(a, b - H)) / (H * H)});
    }
  }
  const double c = options.c > 0.0 ? options.c : 10.0 * (1.0 + second_scale);
  const double rounding =
      10.0 * std::numeric_limits<double>::epsilon() * (1.0 + value_scale) / h;
  report.threshold = c * h * h + rounding;
  report.passed = report.max_violation < report.threshold;
  return report;
}

Element spherical_value(const StemFunction& F, const ConePoint& at) {
  require_in_domain(F, at);
  return join(F.f1(at.alpha(), at.beta()), F.g1(at.alpha(), at.beta()));
}

Element spherical_derivative(const StemFunction& F, const ConePoint& at, double tol) {
  require_in_domain(F, at);
  if (at.is_real(tol)) {
    throw DomainError(ErrorKind::RealPoint, "spherical derivative is undefined on the real axis");
  }
  const double inv = 1.0 / at.beta();
  return join(F.f2(at.alpha(), at.beta()) * inv, F.g2(at.alpha(), at.beta()) * inv);
}

}  // namespace r3
