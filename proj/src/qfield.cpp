#include "zlab/qfield.hpp"

#include <cctype>

namespace zlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::PointAtInfinity: return "PointAtInfinity";
    case ErrorKind::NonReducedCurve: return "NonReducedCurve";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::NotAType: return "NotAType";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::IncompleteLocus: return "IncompleteLocus";
    case ErrorKind::NotAllSimple: return "NotAllSimple";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::IdentityFails: return "IdentityFails";
    case ErrorKind::WildPresent: return "WildPresent";
    case ErrorKind::ZeroPencilValue: return "ZeroPencilValue";
    case ErrorKind::ZeroPencilCoordinates: return "ZeroPencilCoordinates";
    case ErrorKind::RankDrop: return "RankDrop";
    case ErrorKind::UnsupportedTriple: return "UnsupportedTriple";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](std::string_view t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

// --- FieldDescriptor -------------------------------------------------------

FieldDescriptor::FieldDescriptor(const Rational& radicand) {
  if (sgn(radicand) == 0) return;
  if (rational_sqrt(radicand))
    throw Error(ErrorKind::InvalidArgument, "radicand " + radicand.get_str() + " is a square in Q");
  d_ = std::make_shared<const Rational>(radicand);
}

const Rational& FieldDescriptor::radicand() const {
  static const Rational zero(0);
  return d_ ? *d_ : zero;
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return *a.d_ == *b.d_;
}

std::string FieldDescriptor::to_string() const {
  return is_rational_field() ? "Q" : "Q(sqrt(" + radicand().get_str() + "))";
}

// --- FieldElem -------------------------------------------------------------

FieldElem::FieldElem(Rational a, FieldDescriptor desc) : a_(std::move(a)), b_(0), desc_(std::move(desc)) {
  a_.canonicalize();
}

FieldElem::FieldElem(Rational a, Rational b, FieldDescriptor desc)
    : a_(std::move(a)), b_(std::move(b)), desc_(std::move(desc)) {
  a_.canonicalize();
  b_.canonicalize();
  if (desc_.is_rational_field() && sgn(b_) != 0)
    throw Error(ErrorKind::DescriptorMismatch, "irrational part in the field Q");
}

FieldElem FieldElem::root(const FieldDescriptor& d) {
  if (d.is_rational_field()) throw Error(ErrorKind::InvalidArgument, "Q has no adjoined root");
  return FieldElem(Rational(0), Rational(1), d);
}

void FieldElem::require_same_field(const FieldElem& o) const {
  if (!(desc_ == o.desc_))
    throw Error(ErrorKind::DescriptorMismatch, desc_.to_string() + " vs " + o.desc_.to_string());
}

FieldElem FieldElem::conjugate() const {
  FieldElem r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational FieldElem::norm() const { return a_ * a_ - desc_.radicand() * b_ * b_; }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Rational n = norm();
  FieldElem r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

std::optional<FieldElem> FieldElem::sqrt() const {
  if (is_zero()) return *this;
  if (sgn(b_) == 0) {
    if (auto r = rational_sqrt(a_)) return FieldElem(*r, desc_);
    if (desc_.is_rational_field()) return std::nullopt;
    // a = D * q^2  =>  sqrt(a) = q*sqrt(D)
    if (auto r = rational_sqrt(a_ / desc_.radicand())) return FieldElem(Rational(0), *r, desc_);
    return std::nullopt;
  }
  // (p + q sqrt D)^2 = a + b sqrt D: p^2 + D q^2 = a, 2pq = b.
  auto n = rational_sqrt(norm());
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational p2 = (a_ + sign * *n) / 2;
    if (auto p = rational_sqrt(p2); p && sgn(*p) != 0) {
      Rational q = b_ / (2 * *p);
      FieldElem cand(*p, q, desc_);
      if (cand * cand == *this) return cand;
    }
  }
  return std::nullopt;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  require_same_field(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + desc_.radicand() * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  require_same_field(o);
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (sgn(o.b_) == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const FieldElem& x, const FieldElem& y) {
  return x.desc_ == y.desc_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string FieldElem::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string root = "sqrt(" + desc_.radicand().get_str() + ")";
  auto b_term = [&](const Rational& b) {
    if (b == 1) return root;
    return b.get_str() + "*" + root;
  };
  if (sgn(a_) == 0) {
    if (b_ == -1) return "-" + root;
    return b_term(b_);
  }
  if (sgn(b_) > 0) return a_.get_str() + " + " + b_term(b_);
  return a_.get_str() + " - " + b_term(-b_);
}

FieldElem pow(FieldElem x, unsigned e) {
  FieldElem r = FieldElem::one(x.descriptor());
  while (e) {
    if (e & 1u) r *= x;
    e >>= 1u;
    if (e) x *= x;
  }
  return r;
}

}  // namespace zlab
