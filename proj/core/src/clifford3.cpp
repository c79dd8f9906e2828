#include "r3/clifford3.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace r3 {
namespace {

// Generator bitmask of each blade in storage order: bit0=e1, bit1=e2, bit2=e3.
constexpr std::array<unsigned, kBladeCount> kMask = {0b000, 0b001, 0b010, 0b100,
                                                     0b011, 0b101, 0b110, 0b111};

constexpr std::size_t blade_of_mask(unsigned mask) {
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (kMask[i] == mask) return i;
  }
  return kBladeCount;
}

// Product of two canonically ordered generator words. Moving each generator
// of b leftwards past the larger generators of a costs one sign flip per
// transposition; each shared generator then squares to -1.
constexpr BladeProduct compute_product(std::size_t ia, std::size_t ib) {
  const unsigned a = kMask[ia];
  const unsigned b = kMask[ib];
  int swaps = 0;
  for (unsigned bit = 0; bit < 3; ++bit) {
    if ((b >> bit) & 1u) swaps += std::popcount(a >> (bit + 1));
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  if (std::popcount(a & b) % 2 == 1) sign = -sign;
  return {sign, static_cast<Blade>(blade_of_mask(a ^ b))};
}

using Table = std::array<std::array<BladeProduct, kBladeCount>, kBladeCount>;

constexpr Table make_table() {
  Table t{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    for (std::size_t j = 0; j < kBladeCount; ++j) t[i][j] = compute_product(i, j);
  }
  return t;
}

constexpr Table kTable = make_table();

static_assert(kTable[1][2].sign == 1 && kTable[1][2].blade == Blade::e12);
static_assert(kTable[1][1].sign == -1 && kTable[1][1].blade == Blade::e0);
static_assert(kTable[7][7].sign == 1 && kTable[7][7].blade == Blade::e0);

constexpr std::array<double, kBladeCount> kConjSign = {1, -1, -1, -1, -1, -1, -1, 1};

}  // namespace

BladeProduct blade_product(Blade a, Blade b) {
  return kTable[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Element operator*(const Element& a, const Element& b) {
  Element r;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const auto& bp = kTable[i][j];
      r[bp.blade] += bp.sign * a[i] * b[j];
    }
  }
  return r;
}

Element mul(const Element& x, const Element& y) { return x * y; }

Element conj(const Element& x) {
  Element r;
  for (std::size_t i = 0; i < kBladeCount; ++i) r[i] = kConjSign[i] * x[i];
  return r;
}

Element trace(const Element& x) { return x + conj(x); }

Element norm_n(const Element& x) { return x * conj(x); }

double max_abs(const Element& x) {
  double m = 0.0;
  for (double v : x.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

double euclidean(const Element& x) {
  double s = 0.0;
  for (double v : x.coeffs()) s += v * v;
  return std::sqrt(s);
}

bool approx_equal(const Element& a, const Element& b, double tol) {
  return max_abs(a - b) <= tol;
}

}  // namespace r3
