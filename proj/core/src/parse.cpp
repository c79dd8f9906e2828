#include "r3/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>
#include <vector>

#include "r3/error.hpp"
#include "r3/format.hpp"

namespace r3 {

namespace {

struct BasisToken {
  std::string_view name;
  Blade blade;
};

// Longest names first so that e123 wins over e12 and e1.
constexpr BasisToken kTokens[] = {
    {"e123", Blade::e123}, {"e12", Blade::e12}, {"e13", Blade::e13}, {"e23", Blade::e23},
    {"e0", Blade::e0},     {"e1", Blade::e1},   {"e2", Blade::e2},   {"e3", Blade::e3},
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
    throw ParseError(message, std::string(text_), pos);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    if (pos_ + w.size() < text_.size() && is_ident_char(text_[pos_ + w.size()])) return false;
    pos_ += w.size();
    return true;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }

  // Unsigned real at the cursor, or nothing if no digit or '.' starts here.
  std::optional<double> number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t i = pos_;
    auto digit = [&](std::size_t k) {
      return k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]));
    };
    bool any = false;
    while (digit(i)) ++i, any = true;
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      while (digit(i)) ++i, any = true;
    }
    if (!any) return std::nullopt;
    // Exponent: E[sign]digits, or e<sign>digits.
    if (i < text_.size()) {
      const char c = text_[i];
      const bool sign_next = i + 1 < text_.size() && (text_[i + 1] == '+' || text_[i + 1] == '-');
      std::size_t j = i;
      if (c == 'E') {
        j = i + 1;
        if (sign_next) ++j;
      } else if (c == 'e' && sign_next) {
        j = i + 2;
      }
      if (j != i) {
        if (!digit(j)) fail_at("malformed exponent", j);
        while (digit(j)) ++j;
        i = j;
      }
    }
    std::string buf(text_.substr(start, i - start));
    for (auto& ch : buf)
      if (ch == 'E') ch = 'e';
    double v = 0.0;
    const auto res = std::from_chars(buf.data(), buf.data() + buf.size(), v);
    if (res.ec != std::errc()) fail_at("number out of range", start);
    pos_ = i;
    return v;
  }

  bool basis_ahead() {
    const std::size_t save = pos_;
    const bool found = basis().has_value();
    pos_ = save;
    return found;
  }

  std::optional<Blade> basis() {
    skip_ws();
    for (const auto& t : kTokens) {
      if (text_.substr(pos_, t.name.size()) == t.name &&
          !(pos_ + t.name.size() < text_.size() && is_ident_char(text_[pos_ + t.name.size()]))) {
        pos_ += t.name.size();
        return t.blade;
      }
    }
    return std::nullopt;
  }

  // Sign prefix; `required` for every term after the first.
  double sign(bool required) {
    if (accept('+')) return 1.0;
    if (accept('-')) return -1.0;
    if (required) fail("expected '+' or '-'");
    return 1.0;
  }

  // Term-form element. Stops at ',', ']', ')' or end.
  Element element() {
    Element out;
    bool first = true;
    while (true) {
      const char c = peek();
      if (c == '\0' || c == ',' || c == ']' || c == ')') break;
      const double s = sign(!first);
      out += term() * s;
      first = false;
    }
    if (first) fail("expected an element");
    return out;
  }

  Element term() {
    skip_ws();
    const std::size_t start = pos();
    const auto coef = number();
    if (coef) {
      const bool star = accept('*');
      if (const auto b = basis()) return Element::basis(*b, *coef);
      if (star) fail("expected a basis token after '*'");
      return Element::scalar(*coef);
    }
    if (const auto b = basis()) return Element::basis(*b, 1.0);
    fail_at("expected a number or a basis token", start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Element positional(std::string_view text) {
  Parser p(text);
  Element out;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (i > 0) p.expect(',');
    const double s = p.sign(false);
    const auto v = p.number();
    if (!v) p.fail("expected a real number");
    out[i] = s * *v;
  }
  p.expect_end();
  return out;
}

// x^n, x, or nothing.
std::optional<int> x_power(Parser& p) {
  if (!p.accept_word("x")) return std::nullopt;
  if (!p.accept('^')) return 1;
  const std::size_t at = p.pos();
  const auto n = p.number();
  if (!n || *n != static_cast<int>(*n)) p.fail_at("expected a nonnegative integer exponent", at);
  return static_cast<int>(*n);
}

// Optional right coefficient after x^n: `*e12` or `*(<element>)`.
Element x_coefficient(Parser& p) {
  if (!p.accept('*')) return kOne;
  if (p.accept('(')) {
    Element c = p.element();
    p.expect(')');
    return c;
  }
  if (const auto b = p.basis()) return Element::basis(*b);
  p.fail("expected a coefficient after '*'");
}

void add_coeff(std::vector<Element>& coeffs, int n, const Element& c) {
  if (coeffs.size() <= static_cast<std::size_t>(n)) coeffs.resize(n + 1);
  coeffs[n] += c;
}

BiSlicePoly term_polynomial(Parser& p) {
  std::vector<Element> coeffs;
  bool first = true;
  while (!p.at_end()) {
    double scale = p.sign(!first);
    first = false;
    p.skip_ws();
    const std::size_t start = p.pos();
    bool star = false;
    if (const auto v = p.number()) {
      scale *= *v;
      star = p.accept('*');
      if (!star && p.peek() != 'x' && !p.basis_ahead()) {
        add_coeff(coeffs, 0, Element::scalar(scale));
        continue;
      }
    }
    if (const auto n = x_power(p)) {
      add_coeff(coeffs, *n, x_coefficient(p) * scale);
    } else if (const auto b = p.basis()) {
      add_coeff(coeffs, 0, Element::basis(*b, scale));
    } else {
      p.fail_at(star ? "expected x or a basis token after '*'" : "expected a term", start);
    }
  }
  if (first) p.fail("empty polynomial");
  return BiSlicePoly(std::move(coeffs));
}

FactoredPoly factored_polynomial(Parser& p) {
  FactoredPoly out;
  if (p.peek() != '(') {
    const double s = p.sign(false);
    const auto v = p.number();
    if (!v) p.fail("expected a scalar or '('");
    out.scale = s * *v;
    p.expect('*');
  }
  do {
    p.expect('(');
    if (!p.accept_word("x")) p.fail("expected 'x'");
    if (p.accept(')')) {
      out.roots.push_back(Element{});
      continue;
    }
    if (p.peek() != '-' && p.peek() != '+') p.fail("expected '-' or '+'");
    out.roots.push_back(p.element() * -1.0);
    p.expect(')');
  } while (p.accept('*'));
  p.expect_end();
  return out;
}

bool looks_factored(std::string_view text) {
  Parser p(text);
  if (p.peek() == '(') return true;
  p.sign(false);
  if (!p.number()) return false;
  return p.accept('*') && p.peek() == '(';
}

}  // namespace

double parse_real(std::string_view text) {
  Parser p(text);
  const double s = p.sign(false);
  const auto v = p.number();
  if (!v) p.fail("expected a real number");
  p.expect_end();
  return s * *v;
}

Element parse_element(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return positional(text);
  Parser p(text);
  Element e = p.element();
  p.expect_end();
  return e;
}

Quat parse_quat(std::string_view text) {
  const Element e = parse_element(text);
  for (Blade b : {Blade::e1, Blade::e2, Blade::e3, Blade::e123}) {
    if (e[b] != 0.0) {
      const std::size_t at = text.find(blade_name(b));
      throw ParseError("a quaternion accepts only 1, e0, e23, e13, e12", std::string(text),
                       at == std::string_view::npos ? 0 : at);
    }
  }
  return {e[Blade::e0], e[Blade::e23], e[Blade::e13], e[Blade::e12]};
}

ParsedPoly parse_polynomial(std::string_view text) {
  Parser p(text);
  if (p.accept_word("coeffs")) {
    p.expect(':');
    p.expect('[');
    std::vector<Element> coeffs;
    if (!p.accept(']')) {
      do coeffs.push_back(p.element());
      while (p.accept(','));
      p.expect(']');
    }
    p.expect_end();
    return {BiSlicePoly(std::move(coeffs)), std::nullopt};
  }
  if (looks_factored(text)) {
    FactoredPoly f = factored_polynomial(p);
    BiSlicePoly poly = f.expand();
    return {std::move(poly), std::move(f)};
  }
  return {term_polynomial(p), std::nullopt};
}

Matrix2 parse_matrix(std::string_view text) {
  Parser p(text);
  Element e[4];
  p.expect('[');
  for (int row = 0; row < 2; ++row) {
    if (row > 0) p.expect(',');
    p.expect('[');
    e[2 * row] = p.element();
    p.expect(',');
    e[2 * row + 1] = p.element();
    p.expect(']');
  }
  p.expect(']');
  p.expect_end();
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace r3
