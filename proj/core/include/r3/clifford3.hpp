#pragma once

/**
 * @file clifford3.hpp
 * @brief The real Clifford algebra R3 generated by e1, e2, e3 with
 *        ei*ej + ej*ei = -2 delta_ij.
 *
 * Elements are stored on the fixed basis
 *   (e0, e1, e2, e3, e12, e13, e23, e123)
 * which is also the serialized coefficient order.
 */

#include <array>
#include <cstddef>
#include <span>

namespace r3 {

inline constexpr double kDefaultTol = 1e-10;

enum class Blade : std::size_t { e0, e1, e2, e3, e12, e13, e23, e123 };

inline constexpr std::size_t kBladeCount = 8;

class Element {
 public:
  using Coeffs = std::array<double, kBladeCount>;

  constexpr Element() = default;
  constexpr explicit Element(const Coeffs& c) : c_(c) {}

  static constexpr Element scalar(double s) {
    Coeffs c{};
    c[0] = s;
    return Element(c);
  }
  static constexpr Element basis(Blade b, double coef = 1.0) {
    Coeffs c{};
    c[static_cast<std::size_t>(b)] = coef;
    return Element(c);
  }

  constexpr double operator[](Blade b) const { return c_[static_cast<std::size_t>(b)]; }
  constexpr double& operator[](Blade b) { return c_[static_cast<std::size_t>(b)]; }
  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }

  constexpr const Coeffs& coeffs() const { return c_; }
  std::span<const double, kBladeCount> span() const { return c_; }

  constexpr Element& operator+=(const Element& o) {
    for (std::size_t i = 0; i < kBladeCount; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr Element& operator-=(const Element& o) {
    for (std::size_t i = 0; i < kBladeCount; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr Element& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend constexpr Element operator+(Element a, const Element& b) { return a += b; }
  friend constexpr Element operator-(Element a, const Element& b) { return a -= b; }
  friend constexpr Element operator-(Element a) { return a *= -1.0; }
  friend constexpr Element operator*(Element a, double s) { return a *= s; }
  friend constexpr Element operator*(double s, Element a) { return a *= s; }
  friend constexpr Element operator/(Element a, double s) { return a *= 1.0 / s; }

  // Clifford product.
  friend Element operator*(const Element& a, const Element& b);

  friend constexpr bool operator==(const Element&, const Element&) = default;

 private:
  Coeffs c_{};
};

Element mul(const Element& x, const Element& y);

// Antiinvolution fixing e0 and e123 and negating the other six blades.
Element conj(const Element& x);

// t(x) = x + conj(x).
Element trace(const Element& x);

// n(x) = x * conj(x). Real on the quadratic cone, not in general.
Element norm_n(const Element& x);

// Largest absolute coefficient.
double max_abs(const Element& x);

// Euclidean length of the coefficient vector.
double euclidean(const Element& x);

bool approx_equal(const Element& a, const Element& b, double tol = kDefaultTol);

// Sign and target blade of the product of two basis blades.
struct BladeProduct {
  int sign;
  Blade blade;
};
BladeProduct blade_product(Blade a, Blade b);

inline const Element kOne = Element::scalar(1.0);
inline const Element kOmegaPlus = Element({0.5, 0, 0, 0, 0, 0, 0, 0.5});
inline const Element kOmegaMinus = Element({0.5, 0, 0, 0, 0, 0, 0, -0.5});

}  // namespace r3
