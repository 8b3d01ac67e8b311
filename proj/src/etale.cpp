#include "zlab/etale.hpp"

namespace zlab {

EtaleAlgebra::EtaleAlgebra(FieldDescriptor field, UniPoly modulus) : field_(std::move(field)), m_(modulus.monic()) {
  if (m_.degree() < 1) throw Error(ErrorKind::InvalidArgument, "algebra modulus must have positive degree");
}

AlgElem::AlgElem(AlgebraRef alg, UniPoly rep) : alg_(std::move(alg)) {
  rep_ = rep.degree() >= alg_->degree() ? rep % alg_->modulus() : std::move(rep);
}

bool AlgElem::is_zero() const {
  if (is_trivially_zero()) return true;
  if (rep_.degree() == 0) return false;
  UniPoly g = gcd(rep_, alg_->modulus());
  if (g.degree() == 0) return false;
  if (g.degree() == alg_->degree()) return true;
  throw SplitNeeded{alg_, g};
}

std::optional<FieldElem> AlgElem::as_field() const {
  if (rep_.degree() > 0) return std::nullopt;
  return rep_.coeff(0);
}

AlgElem AlgElem::inverse() const {
  if (is_trivially_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in algebra");
  if (rep_.degree() == 0) return from_field(alg_, rep_.coeff(0).inverse());
  auto [g, s] = gcd_with_cofactor(rep_, alg_->modulus());
  if (g.degree() == alg_->degree()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in algebra");
  if (g.degree() > 0) throw SplitNeeded{alg_, g};
  return AlgElem(alg_, s);
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  rep_ += o.rep_;
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  rep_ -= o.rep_;
  return *this;
}

AlgElem& AlgElem::operator*=(const AlgElem& o) {
  if (is_trivially_zero()) return *this;
  if (o.rep_.degree() <= 0) {
    rep_ = o.rep_.coeff(0) * rep_;
    return *this;
  }
  if (rep_.degree() == 0) {
    rep_ = rep_.coeff(0) * o.rep_;
    return *this;
  }
  rep_ = (rep_ * o.rep_) % alg_->modulus();
  return *this;
}

AlgPoly lift(const BiPoly& f, const AlgebraRef& a) {
  return f.map([&](const FieldElem& c) { return AlgElem::from_field(a, c); }, a);
}

AlgPoly project(const AlgPoly& f, const AlgebraRef& target) {
  return f.map([&](const AlgElem& c) { return c.project(target); }, target);
}

}  // namespace zlab
