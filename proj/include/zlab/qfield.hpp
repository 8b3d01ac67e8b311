#pragma once

// Exact arithmetic in Q and in quadratic fields Q(sqrt(D)).

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "zlab/error.hpp"

namespace zlab {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
/// Parses "p" or "p/q" (optional sign). Throws SyntaxError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Exact square root of a rational, if it has one.
std::optional<Rational> rational_sqrt(const Rational& q);

/// The radicand D of Q(sqrt(D)); D = 0 stands for Q itself.
///
/// D is stored as given. Two descriptors are equal iff their radicands are equal.
class FieldDescriptor {
 public:
  FieldDescriptor() = default;
  explicit FieldDescriptor(const Rational& radicand);

  static FieldDescriptor rationals() { return {}; }

  const Rational& radicand() const;
  bool is_rational_field() const noexcept { return !d_; }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);

  std::string to_string() const;

 private:
  std::shared_ptr<const Rational> d_;
};

/// a + b*sqrt(D).
class FieldElem {
 public:
  using Context = FieldDescriptor;

  FieldElem() = default;
  FieldElem(Rational a, FieldDescriptor desc = {});
  FieldElem(Rational a, Rational b, FieldDescriptor desc);

  static FieldElem zero(const FieldDescriptor& d) { return FieldElem(Rational(0), d); }
  static FieldElem one(const FieldDescriptor& d) { return FieldElem(Rational(1), d); }
  static FieldElem from_rational(const FieldDescriptor& d, const Rational& q) { return FieldElem(q, d); }
  /// sqrt(D) itself.
  static FieldElem root(const FieldDescriptor& d);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const FieldDescriptor& descriptor() const noexcept { return desc_; }
  const FieldDescriptor& context() const noexcept { return desc_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_trivially_zero() const { return is_zero(); }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  FieldElem conjugate() const;
  Rational norm() const;
  FieldElem inverse() const;
  /// Square root inside the same field, when it exists.
  std::optional<FieldElem> sqrt() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }

  /// Componentwise equality; elements of different fields are never equal.
  friend bool operator==(const FieldElem& x, const FieldElem& y);

  /// "a + b*sqrt(D)" with rationals printed as p/q.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "b*sqrt(D)" and "a - b*sqrt(D)".
  static FieldElem parse(std::string_view text, const FieldDescriptor& desc);

 private:
  void require_same_field(const FieldElem& o) const;

  Rational a_;
  Rational b_;
  FieldDescriptor desc_;
};

FieldElem pow(FieldElem x, unsigned e);

}  // namespace zlab
