#include "r3/qdet.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "r3/error.hpp"
#include "r3/format.hpp"

namespace r3 {

QuatMatrix2 matmul(const QuatMatrix2& A, const QuatMatrix2& B) {
  return {A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,  //
          A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d};
}

double det_radicand(const QuatMatrix2& A) {
  const Quat cross = A.d * A.b.conjugate() * A.a * A.c.conjugate();
  return A.a.norm_sq() * A.d.norm_sq() + A.c.norm_sq() * A.b.norm_sq() - 2.0 * cross.re();
}

Matrix2::Matrix2(const Element& a, const Element& b, const Element& c, const Element& d)
    : a_(a), b_(b), c_(c), d_(d) {
  const QuatPair sa = split(a);
  const QuatPair sb = split(b);
  const QuatPair sc = split(c);
  const QuatPair sd = split(d);
  plus_ = {sa.p, sb.p, sc.p, sd.p};
  minus_ = {sa.q, sb.q, sc.q, sd.q};
}

bool Matrix2::in_cone(double tol) const {
  return r3::in_cone(a_, tol) && r3::in_cone(b_, tol) && r3::in_cone(c_, tol) &&
         r3::in_cone(d_, tol);
}

std::pair<QuatMatrix2, QuatMatrix2> split_matrix(const Matrix2& A) {
  return {A.plus(), A.minus()};
}

Matrix2 join_matrix(const QuatMatrix2& P, const QuatMatrix2& M) {
  return {join(P.a, M.a), join(P.b, M.b), join(P.c, M.c), join(P.d, M.d)};
}

Matrix2 matmul(const Matrix2& A, const Matrix2& B) {
  return {mul(A.a(), B.a()) + mul(A.b(), B.c()), mul(A.a(), B.b()) + mul(A.b(), B.d()),
          mul(A.c(), B.a()) + mul(A.d(), B.c()), mul(A.c(), B.b()) + mul(A.d(), B.d())};
}

namespace {

double checked_sqrt(double radicand, const char* block, double tol) {
  if (radicand < -tol)
    throw DomainError(ErrorKind::NegativeRadicand,
                      std::string(block) + " radicand " + format_real(radicand));
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

DetReport det_report(const Matrix2& A, double tol) {
  DetReport r;
  r.radicand_plus = det_radicand(A.plus());
  r.radicand_minus = det_radicand(A.minus());
  r.det_plus = checked_sqrt(r.radicand_plus, "omega+", tol);
  r.det_minus = checked_sqrt(r.radicand_minus, "omega-", tol);
  return r;
}

double det(const Matrix2& A, double tol) {
  return checked_sqrt(det_radicand(A.plus()), "omega+", tol);
}

bool is_right_invertible(const Matrix2& A, double tol) {
  const Element& a = A.a();
  const Element& b = A.b();
  const Element& c = A.c();
  const Element& d = A.d();

  // x (y - z w^-1 v), or nothing when w is singular.
  auto nonzero = [tol](const Element& x, const Element& y, const Element& z, const Element& w,
                       const Element& v) -> std::optional<bool> {
    const QuatPair sw = split(w);
    if (sw.p.abs() <= tol || sw.q.abs() <= tol) return std::nullopt;
    const Element e = mul(x, y - mul(mul(z, inverse(w, tol)), v));
    const QuatPair s = split(e);
    return s.p.abs() > tol && s.q.abs() > tol;
  };

  for (const auto& r : {nonzero(b, c, d, b, a), nonzero(a, d, c, a, b), nonzero(c, b, a, c, d),
                        nonzero(d, a, b, d, c)}) {
    if (r && *r) return true;
  }
  return false;
}

}  // namespace r3
