#pragma once

// Finite etale algebras F[t]/(m) over a quadratic field F, m monic squarefree.
//
// Points whose coordinates are roots of some univariate polynomial are handled
// as one family over such an algebra. Zero tests that hit a zero divisor raise
// SplitNeeded, and the caller splits the family along the returned factor.

#include <memory>
#include <string>

#include "zlab/polynomial.hpp"
#include "zlab/qfield.hpp"

namespace zlab {

using UniPoly = Univariate<FieldElem>;
using BiPoly = Bivariate<FieldElem>;

class EtaleAlgebra;
using AlgebraRef = std::shared_ptr<const EtaleAlgebra>;

class EtaleAlgebra {
 public:
  EtaleAlgebra(FieldDescriptor field, UniPoly modulus);

  static AlgebraRef make(const FieldDescriptor& field, const UniPoly& modulus) {
    return std::make_shared<const EtaleAlgebra>(field, modulus);
  }

  const FieldDescriptor& field() const { return field_; }
  const UniPoly& modulus() const { return m_; }
  int degree() const { return m_.degree(); }

 private:
  FieldDescriptor field_;
  UniPoly m_;
};

/// Raised when a zero test meets a zero divisor. factor is a proper monic
/// divisor of the modulus.
struct SplitNeeded {
  AlgebraRef algebra;
  UniPoly factor;
};

class AlgElem {
 public:
  using Context = AlgebraRef;

  AlgElem() = default;
  AlgElem(AlgebraRef alg, UniPoly rep);

  static AlgElem zero(const AlgebraRef& a) { return AlgElem(a, UniPoly(a->field())); }
  static AlgElem one(const AlgebraRef& a) { return from_field(a, FieldElem::one(a->field())); }
  static AlgElem from_rational(const AlgebraRef& a, const Rational& q) {
    return from_field(a, FieldElem(q, a->field()));
  }
  static AlgElem from_field(const AlgebraRef& a, const FieldElem& c) { return AlgElem(a, UniPoly::constant(a->field(), c)); }
  /// The class of t.
  static AlgElem generator(const AlgebraRef& a) { return AlgElem(a, UniPoly::variable(a->field())); }

  const AlgebraRef& context() const { return alg_; }
  const UniPoly& rep() const { return rep_; }

  bool is_trivially_zero() const { return rep_.coefficients().empty(); }
  /// Exact zero test; throws SplitNeeded if the element is a nonzero zero divisor.
  bool is_zero() const;
  /// The element as a field constant, if its representative is constant.
  std::optional<FieldElem> as_field() const;

  AlgElem inverse() const;

  AlgElem operator-() const { return AlgElem(alg_, -rep_, true); }
  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const AlgElem& o);
  AlgElem& operator/=(const AlgElem& o) { return *this *= o.inverse(); }
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const AlgElem& b) { return a *= b; }
  friend AlgElem operator/(AlgElem a, const AlgElem& b) { return a /= b; }

  /// Image in a quotient algebra whose modulus divides this one's.
  AlgElem project(const AlgebraRef& target) const { return AlgElem(target, rep_); }

  std::string to_string() const { return rep_.to_string("t"); }

 private:
  AlgElem(AlgebraRef alg, UniPoly rep, bool reduced) : alg_(std::move(alg)), rep_(std::move(rep)) { (void)reduced; }

  AlgebraRef alg_;
  UniPoly rep_;
};

using AlgPoly = Bivariate<AlgElem>;
using AlgUni = Univariate<AlgElem>;

/// Embeds a field polynomial into the algebra.
AlgPoly lift(const BiPoly& f, const AlgebraRef& a);
AlgPoly project(const AlgPoly& f, const AlgebraRef& target);

}  // namespace zlab
