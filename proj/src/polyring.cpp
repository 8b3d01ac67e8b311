#include "zlab/polyring.hpp"

namespace zlab {

void TernaryForm::add(int i, int j, int k, const FieldElem& c) {
  if (i + j + k != degree_) throw Error(ErrorKind::Internal, "ternary term of wrong degree");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(std::array<int, 3>{i, j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FieldElem TernaryForm::evaluate(const FieldElem& X, const FieldElem& Y, const FieldElem& Z) const {
  FieldElem r = FieldElem::zero(desc_);
  for (const auto& [e, c] : t_) r += c * pow(X, e[0]) * pow(Y, e[1]) * pow(Z, e[2]);
  return r;
}

TernaryForm homogenize(const BiPoly& f, int degree) {
  if (f.total_degree() > degree)
    throw Error(ErrorKind::DegreeTooLow, "polynomial of degree " + std::to_string(f.total_degree()) +
                                             " does not fit degree " + std::to_string(degree));
  TernaryForm t(f.context(), degree);
  for (const auto& [m, c] : f.terms()) t.add(m.i, m.j, degree - m.degree(), c);
  return t;
}

std::string_view to_string(Chart c) {
  switch (c) {
    case Chart::Z: return "Z=1";
    case Chart::X: return "X=1";
    case Chart::Y: return "Y=1";
  }
  return "?";
}

BiPoly chart_polynomial(const BiPoly& f, int degree, Chart chart) {
  if (chart == Chart::Z) return f;
  if (f.total_degree() > degree) throw Error(ErrorKind::DegreeTooLow, "polynomial does not fit the given degree");
  BiPoly r(f.context());
  for (const auto& [m, c] : f.terms()) {
    int k = degree - m.degree();
    if (chart == Chart::X)
      r.set_coeff(m.j, k, c);  // X=1: (Y, Z) -> (x, y)
    else
      r.set_coeff(m.i, k, c);  // Y=1: (X, Z) -> (x, y)
  }
  return r;
}

ProjPoint::ProjPoint(FieldElem X, FieldElem Y, FieldElem Z) : c_{std::move(X), std::move(Y), std::move(Z)} {
  int last = -1;
  for (int i = 2; i >= 0; --i)
    if (!c_[static_cast<std::size_t>(i)].is_zero()) {
      last = i;
      break;
    }
  if (last < 0) throw Error(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
  FieldElem inv = c_[static_cast<std::size_t>(last)].inverse();
  for (auto& v : c_) v *= inv;
}

std::pair<FieldElem, FieldElem> ProjPoint::affine_coordinates() const {
  if (!is_affine()) throw Error(ErrorKind::PointAtInfinity, "point " + to_string() + " is at infinity");
  return {c_[0], c_[1]};
}

std::optional<std::pair<FieldElem, FieldElem>> ProjPoint::chart_coordinates(Chart chart) const {
  switch (chart) {
    case Chart::Z:
      if (c_[2].is_zero()) return std::nullopt;
      return std::pair{c_[0] / c_[2], c_[1] / c_[2]};
    case Chart::X:
      if (c_[0].is_zero()) return std::nullopt;
      return std::pair{c_[1] / c_[0], c_[2] / c_[0]};
    case Chart::Y:
      if (c_[1].is_zero()) return std::nullopt;
      return std::pair{c_[0] / c_[1], c_[2] / c_[1]};
  }
  return std::nullopt;
}

Chart ProjPoint::preferred_chart() const {
  if (!c_[2].is_zero()) return Chart::Z;
  if (!c_[0].is_zero()) return Chart::X;
  return Chart::Y;
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }

std::string ProjPoint::to_string() const {
  if (is_affine()) return "(" + c_[0].to_string() + ", " + c_[1].to_string() + ")";
  return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + ")";
}

FieldElem evaluate(const BiPoly& f, const ProjPoint& p) {
  auto [x, y] = p.affine_coordinates();
  return f.evaluate(x, y);
}

BiPoly translate(const BiPoly& f, const ProjPoint& p) {
  auto [x, y] = p.affine_coordinates();
  return translate(f, x, y);
}

AffineMap AffineMap::identity(const FieldDescriptor& desc) {
  auto z = FieldElem::zero(desc), o = FieldElem::one(desc);
  return {o, z, z, o, z, z};
}

AffineMap AffineMap::inverse() const {
  FieldElem det = determinant();
  if (det.is_zero()) throw Error(ErrorKind::InvalidArgument, "affine map is not invertible");
  FieldElem ia = d / det, ib = -b / det, ic = -c / det, id = a / det;
  return {ia, ib, ic, id, -(ia * e + ib * f), -(ic * e + id * f)};
}

BiPoly pull_back(const BiPoly& g, const AffineMap& m) {
  const auto& ctx = g.context();
  auto x = BiPoly::x(ctx), y = BiPoly::y(ctx);
  BiPoly X = m.a * x + m.b * y + BiPoly::constant(ctx, m.e);
  BiPoly Y = m.c * x + m.d * y + BiPoly::constant(ctx, m.f);
  return compose(g, X, Y);
}

}  // namespace zlab
