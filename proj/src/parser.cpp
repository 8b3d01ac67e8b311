#include <cctype>

#include "zlab/polyring.hpp"

namespace zlab {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldDescriptor& desc) : s_(text), desc_(desc) {}

  BiPoly parse_all() {
    skip();
    if (at_end()) fail("empty expression");
    BiPoly p = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  BiPoly expr() {
    BiPoly acc(desc_);
    skip();
    bool neg = false;
    if (accept('+')) {
    } else if (accept('-')) {
      neg = true;
    }
    BiPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      skip();
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      skip();
      if (peek("**")) break;  // power, handled in factor
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        int line = line_, col = col_;
        BiPoly d = factor();
        if (d.total_degree() > 0) throw ParseError("division by a non-constant", line, col);
        FieldElem c = d.coeff(0, 0);
        if (c.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero at line " + std::to_string(line));
        acc = c.inverse() * acc;
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly factor() {
    skip();
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    BiPoly b = base();
    skip();
    if (peek("**")) {
      advance();
      advance();
      return pow(b, exponent());
    }
    if (accept('^')) return pow(b, exponent());
    return b;
  }

  unsigned exponent() {
    skip();
    bool paren = accept('(');
    skip();
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      digits.push_back(s_[pos_]);
      advance();
    }
    if (digits.empty() || digits.size() > 4) fail("expected a small non-negative integer exponent");
    if (paren) {
      skip();
      if (!accept(')')) fail("expected ')'");
    }
    return static_cast<unsigned>(std::stoul(digits));
  }

  BiPoly base() {
    skip();
    if (at_end()) fail("unexpected end of input");
    char c = s_[pos_];
    if (accept('(')) {
      BiPoly p = expr();
      skip();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        digits.push_back(s_[pos_]);
        advance();
      }
      return BiPoly::constant(desc_, FieldElem(Rational(Integer(digits)), desc_));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      int line = line_, col = col_;
      std::string id;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        id.push_back(s_[pos_]);
        advance();
      }
      if (id == "x") return BiPoly::x(desc_);
      if (id == "y") return BiPoly::y(desc_);
      if (id == "sqrt") return sqrt_literal(line, col);
      throw ParseError("unknown identifier '" + id + "'", line, col);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  BiPoly sqrt_literal(int line, int col) {
    skip();
    if (!accept('(')) fail("expected '(' after sqrt");
    skip();
    std::string lit;
    while (!at_end() && s_[pos_] != ')') {
      if (!std::isspace(static_cast<unsigned char>(s_[pos_]))) lit.push_back(s_[pos_]);
      advance();
    }
    if (!accept(')')) fail("expected ')'");
    Rational d;
    try {
      d = parse_rational(lit);
    } catch (const Error&) {
      throw ParseError("sqrt expects a rational radicand", line, col);
    }
    if (desc_.is_rational_field() || d != desc_.radicand())
      throw Error(ErrorKind::DescriptorMismatch, "sqrt(" + d.get_str() + ") in field " + desc_.to_string() +
                                                     " at line " + std::to_string(line) + ", column " +
                                                     std::to_string(col));
    return BiPoly::constant(desc_, FieldElem::root(desc_));
  }

  void skip() {
    while (!at_end()) {
      char c = s_[pos_];
      if (c == '#') {
        while (!at_end() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  bool at_end() const { return pos_ >= s_.size(); }
  bool peek(std::string_view t) const { return s_.substr(pos_, t.size()) == t; }
  bool accept(char c) {
    if (!at_end() && s_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  std::string_view s_;
  FieldDescriptor desc_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto part = [&](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  part("x", m.i);
  part("y", m.j);
  return s;
}

}  // namespace

BiPoly parse_polynomial(std::string_view text, const FieldDescriptor& desc) { return Parser(text, desc).parse_all(); }

FieldElem FieldElem::parse(std::string_view text, const FieldDescriptor& desc) {
  BiPoly p = Parser(text, desc).parse_all();
  if (p.total_degree() > 0) throw ParseError("expected a constant, got a polynomial", 1, 1);
  return p.coeff(0, 0);
}

std::string to_string(const BiPoly& f) {
  std::string out;
  for (const auto& [m, c] : f.sorted_terms()) {
    std::string mono = monomial_text(m);
    bool first = out.empty();
    if (c.is_rational()) {
      Rational a = c.a();
      bool neg = sgn(a) < 0;
      if (neg) a = -a;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mono.empty())
        out += a.get_str();
      else if (a == 1)
        out += mono;
      else
        out += a.get_str() + "*" + mono;
    } else {
      out += first ? "" : " + ";
      out += "(" + c.to_string() + ")";
      if (!mono.empty()) out += "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace zlab
