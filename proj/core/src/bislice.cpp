#include "r3/bislice.hpp"

#include <algorithm>
#include <cmath>

#include "r3/error.hpp"
#include "r3/format.hpp"

namespace r3 {

// ---- QuatPoly ---------------------------------------------------------------

int QuatPoly::degree(double tol) const {
  for (int n = static_cast<int>(coeffs_.size()) - 1; n >= 0; --n)
    if (max_abs(coeffs_[n]) > tol) return n;
  return -1;
}

Quat QuatPoly::eval(const Quat& q) const {
  // q commutes with its own powers, so sum q^n b_n folds as q (...) + b_n.
  Quat acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = q * acc + *it;
  return acc;
}

QuatPoly QuatPoly::conjugate() const {
  std::vector<Quat> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.conjugate());
  return QuatPoly(std::move(out));
}

QuatPoly operator+(const QuatPoly& a, const QuatPoly& b) {
  std::vector<Quat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeff(n) + b.coeff(n);
  return QuatPoly(std::move(out));
}

QuatPoly operator-(const QuatPoly& a, const QuatPoly& b) {
  std::vector<Quat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeff(n) - b.coeff(n);
  return QuatPoly(std::move(out));
}

QuatPoly star(const QuatPoly& a, const QuatPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return QuatPoly();
  std::vector<Quat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QuatPoly(std::move(out));
}

QuatPoly symmetrization(const QuatPoly& F) { return star(F, F.conjugate()); }

QuatDivision divide_by_real(const QuatPoly& F, const std::vector<double>& monic_divisor) {
  const std::size_t m = monic_divisor.size();
  if (m == 0 || monic_divisor.back() != 1.0)
    throw std::invalid_argument("divide_by_real: divisor must be monic");
  std::vector<Quat> rem = F.coeffs();
  const std::size_t dm = m - 1;
  if (rem.size() <= dm) return {QuatPoly(), QuatPoly(std::move(rem))};

  std::vector<Quat> quot(rem.size() - dm);
  for (std::size_t k = rem.size(); k-- > dm;) {
    const Quat lead = rem[k];
    quot[k - dm] = lead;
    for (std::size_t i = 0; i < m; ++i) rem[k - dm + i] -= lead * monic_divisor[i];
  }
  rem.resize(dm);
  return {QuatPoly(std::move(quot)), QuatPoly(std::move(rem))};
}

// ---- BiSlicePoly ------------------------------------------------------------

BiSlicePoly BiSlicePoly::monomial(int n, const Element& coeff) {
  if (n < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Element> c(static_cast<std::size_t>(n) + 1);
  c.back() = coeff;
  return BiSlicePoly(std::move(c));
}

int BiSlicePoly::degree(double tol) const {
  for (int n = static_cast<int>(coeffs_.size()) - 1; n >= 0; --n)
    if (max_abs(coeffs_[n]) > tol) return n;
  return -1;
}

Element BiSlicePoly::eval(const Element& x) const {
  const auto [F, G] = split_poly(*this);
  const QuatPair xs = split(x);
  return join(F.eval(xs.p), G.eval(xs.q));
}

Element BiSlicePoly::eval_direct(const Element& x) const {
  Element acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = mul(x, acc) + *it;
  return acc;
}

BiSlicePoly operator+(const BiSlicePoly& a, const BiSlicePoly& b) {
  std::vector<Element> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeff(n) + b.coeff(n);
  return BiSlicePoly(std::move(out));
}

BiSlicePoly operator-(const BiSlicePoly& a, const BiSlicePoly& b) {
  std::vector<Element> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeff(n) - b.coeff(n);
  return BiSlicePoly(std::move(out));
}

BiSlicePoly operator*(double s, const BiSlicePoly& a) {
  std::vector<Element> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return BiSlicePoly(std::move(out));
}

std::pair<QuatPoly, QuatPoly> split_poly(const BiSlicePoly& P) {
  std::vector<Quat> F;
  std::vector<Quat> G;
  F.reserve(P.coeffs().size());
  G.reserve(P.coeffs().size());
  for (const auto& a : P.coeffs()) {
    const QuatPair s = split(a);
    F.push_back(s.p);
    G.push_back(s.q);
  }
  return {QuatPoly(std::move(F)), QuatPoly(std::move(G))};
}

BiSlicePoly join_poly(const QuatPoly& F, const QuatPoly& G) {
  std::vector<Element> out(std::max(F.coeffs().size(), G.coeffs().size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = join(F.coeff(n), G.coeff(n));
  return BiSlicePoly(std::move(out));
}

BiSlicePoly star_mul(const BiSlicePoly& P, const BiSlicePoly& Q) {
  const auto& a = P.coeffs();
  const auto& b = Q.coeffs();
  if (a.empty() || b.empty()) return BiSlicePoly();
  std::vector<Element> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += mul(a[i], b[j]);
  return BiSlicePoly(std::move(out));
}

Element star_mul_pointwise(const BiSlicePoly& f, const BiSlicePoly& g, const Element& x,
                           double tol) {
  const auto [A, B] = split_poly(f);
  const auto [C, D] = split_poly(g);
  const QuatPair xs = split(x);
  const Quat a = A.eval(xs.p);
  const Quat b = B.eval(xs.q);
  const bool a_zero = a.abs() <= tol;
  const bool b_zero = b.abs() <= tol;
  if (a_zero && b_zero) return Element{};
  if (a_zero || b_zero)
    throw DomainError(ErrorKind::NotInvertibleAtPoint,
                      "f(x) = " + format(join(a, b)) + " has exactly one vanishing component");
  const Quat p_moved = inverse(a, tol) * xs.p * a;
  const Quat q_moved = inverse(b, tol) * xs.q * b;
  return join(a * C.eval(p_moved), b * D.eval(q_moved));
}

BiSlicePoly regular_conjugate(const BiSlicePoly& P) {
  std::vector<Element> out;
  out.reserve(P.coeffs().size());
  for (const auto& a : P.coeffs()) out.push_back(conj(a));
  return BiSlicePoly(std::move(out));
}

BiSlicePoly symmetrization(const BiSlicePoly& P) { return star_mul(P, regular_conjugate(P)); }

// ---- Representation formula -------------------------------------------------

SliceSamples sample_slices(const BiSlicePoly& P, double x, double y, const Quat& w1,
                           const Quat& w2) {
  const auto [F, G] = split_poly(P);
  const Quat re = Quat::real(x);
  return {w1,
          w2,
          F.eval(re + w1 * y),
          F.eval(re - w1 * y),
          G.eval(re + w2 * y),
          G.eval(re - w2 * y)};
}

Element representation_formula(const SliceSamples& s, const ConePoint& at, double tol) {
  if (!is_imaginary_unit(s.w1, tol))
    throw DomainError(ErrorKind::NotImaginaryUnit, "W1 = " + format(s.w1));
  if (!is_imaginary_unit(s.w2, tol))
    throw DomainError(ErrorKind::NotImaginaryUnit, "W2 = " + format(s.w2));

  const Quat p = (s.f_plus + s.f_minus) * 0.5 - at.unit_p() * s.w1 * (s.f_plus - s.f_minus) * 0.5;
  const Quat q = (s.g_plus + s.g_minus) * 0.5 - at.unit_q() * s.w2 * (s.g_plus - s.g_minus) * 0.5;
  return join(p, q);
}

// ---- Splitting lemma --------------------------------------------------------

Quat SplittingProjection::eval(std::complex<double> z) const {
  std::complex<double> a{};
  std::complex<double> b{};
  for (std::size_t n = A.size(); n-- > 0;) a = a * z + A[n];
  for (std::size_t n = B.size(); n-- > 0;) b = b * z + B[n];
  return in_slice(a, I) + in_slice(b, I) * K;
}

SplittingProjection splitting_projection(const QuatPoly& F, const Quat& I, const Quat& K,
                                         double tol) {
  if (!is_imaginary_unit(I, tol)) throw DomainError(ErrorKind::NotImaginaryUnit, "I = " + format(I));
  if (!is_imaginary_unit(K, tol)) throw DomainError(ErrorKind::NotImaginaryUnit, "K = " + format(K));
  if (std::abs(dot(I, K)) > tol)
    throw DomainError(ErrorKind::NotOrthogonal, "I = " + format(I) + ", K = " + format(K));

  // {1, I, K, IK} is an orthonormal basis; b = a0 + a1 I + (c0 + c1 I) K.
  const Quat IK = I * K;
  SplittingProjection out{{}, {}, I, K};
  out.A.reserve(F.coeffs().size());
  out.B.reserve(F.coeffs().size());
  for (const auto& b : F.coeffs()) {
    out.A.emplace_back(b.re(), dot(b, I));
    out.B.emplace_back(dot(b, K), dot(b, IK));
  }
  return out;
}

// ---- d-bar residuals ----------------------------------------------------------

namespace {

struct SliceDerivatives {
  Element dx;
  Element dy;
};

SliceDerivatives slice_derivatives(const SliceMap& f, const ConePoint& x, double h) {
  const Quat& I = x.unit_p();
  const Quat& J = x.unit_q();
  auto at = [&](double a, double b) {
    return f(join(Quat::real(a) + I * b, Quat::real(a) + J * b));
  };
  const double a = x.alpha();
  const double b = x.beta();
  return {(at(a + h, b) - at(a - h, b)) / (2.0 * h), (at(a, b + h) - at(a, b - h)) / (2.0 * h)};
}

}  // namespace

double dbar_residual(const SliceMap& f, const ConePoint& x, double h) {
  const auto d = slice_derivatives(f, x, h);
  const Element I = embed(x.unit_p());
  const Element J = embed(x.unit_q());
  const Element v = mul(kOmegaPlus, d.dx + mul(I, d.dy)) + mul(kOmegaMinus, d.dx + mul(J, d.dy));
  return euclidean(0.5 * v);
}

double dbar_residual(const BiSlicePoly& P, const ConePoint& x, double h) {
  return dbar_residual([&P](const Element& y) { return P.eval(y); }, x, h);
}

double dbar_k_residual(const SliceMap& f, const ConePoint& x, double h) {
  const auto d = slice_derivatives(f, x, h);
  const Element K = join(x.unit_p(), x.unit_q());
  return euclidean(0.5 * (d.dx + mul(K, d.dy)));
}

double dbar_k_residual(const BiSlicePoly& P, const ConePoint& x, double h) {
  return dbar_k_residual([&P](const Element& y) { return P.eval(y); }, x, h);
}

// ---- Stem of a polynomial -----------------------------------------------------

StemFunction polynomial_stem(const BiSlicePoly& P, StemDomain domain) {
  const auto [F, G] = split_poly(P);
  // sum z^n b_n with z^n = u_n + i v_n gives f1 = sum u_n b_n, f2 = sum v_n b_n.
  auto part = [](std::vector<Quat> coeffs, bool imaginary) {
    return [coeffs = std::move(coeffs), imaginary](double alpha, double beta) {
      const std::complex<double> z(alpha, beta);
      std::complex<double> zn(1.0, 0.0);
      Quat acc{};
      for (const auto& c : coeffs) {
        acc += c * (imaginary ? zn.imag() : zn.real());
        zn *= z;
      }
      return acc;
    };
  };
  return {part(F.coeffs(), false), part(F.coeffs(), true), part(G.coeffs(), false),
          part(G.coeffs(), true), domain};
}

}  // namespace r3
