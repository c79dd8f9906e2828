#include "r3/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "r3/error.hpp"

namespace r3 {
namespace {

constexpr std::array<std::string_view, kBladeCount> kBladeNames = {
    "", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};

constexpr double kPrettyCutoff = 1e-12;

}  // namespace

std::string_view blade_name(Blade b) {
  const auto i = static_cast<std::size_t>(b);
  return i == 0 ? std::string_view("e0") : kBladeNames[i];
}

std::string format_real(double v, Precision precision) {
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = precision == Precision::Full
                       ? std::to_chars(buf.data(), buf.data() + buf.size(), v)
                       : std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general, 12);
  std::string s(buf.data(), res.ptr);
  for (auto& ch : s) {
    if (ch == 'e') ch = 'E';
  }
  return s;
}

std::string format(const Element& x, Precision precision) {
  const double cutoff = precision == Precision::Pretty ? kPrettyCutoff : 0.0;
  std::string out;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    double v = x[i];
    if (std::abs(v) <= cutoff || v == 0.0) continue;
    const bool negative = v < 0;
    v = std::abs(v);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += format_real(v, precision);
    } else {
      if (v != 1.0) out += format_real(v, precision);
      out += kBladeNames[i];
    }
  }
  return out.empty() ? "0" : out;
}

std::string format(const Quat& q, Precision precision) { return format(embed(q), precision); }

std::string format(const QuatPair& pair, Precision precision) {
  return "(" + format(pair.p, precision) + " | " + format(pair.q, precision) + ")";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularElement: return "SingularElement";
    case ErrorKind::NotImaginaryUnit: return "NotImaginaryUnit";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::RealPoint: return "RealPoint";
    case ErrorKind::NotInvertibleAtPoint: return "NotInvertibleAtPoint";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::OnSingularSphere: return "OnSingularSphere";
    case ErrorKind::PointOutsideContour: return "PointOutsideContour";
    case ErrorKind::UnfactoredInput: return "UnfactoredInput";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
  }
  return "UnknownError";
}

std::string ParseError::annotated() const {
  std::string out = "parse error: " + message_ + "\n  " + input_ + "\n  ";
  out.append(std::min(position_, input_.size()), ' ');
  out += "^";
  return out;
}

}  // namespace r3
