#include "zlab/adjunction.hpp"

#include <algorithm>

namespace zlab {
namespace {

std::string power(const char* v, int e) { return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e); }

AdjunctionIdeal make(AdeType ade, int k, int d, int dim, bool contact) {
  AdjunctionIdeal I;
  I.ade = ade;
  I.k = k;
  I.d = d;
  I.along_contact = contact;
  const char* along = contact ? "u" : "v";
  const char* across = contact ? "v" : "u";
  if (dim == 0) {
    I.generators = {"1"};
    return I;
  }
  I.generators = {across, power(along, dim)};
  I.quotient_basis.push_back("1");
  for (int e = 1; e < dim; ++e) I.quotient_basis.push_back(power(along, e));
  return I;
}

// --- truncated series over an etale algebra ---

using Series = std::vector<AlgElem>;

Series mul(const Series& a, const Series& b, const AlgebraRef& alg) {
  Series r(a.size(), AlgElem::zero(alg));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_trivially_zero()) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// q(X(u), Y(u)) modulo u^n for a polynomial of low degree.
Series restrict(const AlgPoly& q, const Series& X, const Series& Y, const AlgebraRef& alg) {
  const std::size_t n = X.size();
  Series out(n, AlgElem::zero(alg));
  int dmax = std::max(q.degree_in(Var::x), q.degree_in(Var::y));
  std::vector<Series> xp{Series(n, AlgElem::zero(alg))}, yp{Series(n, AlgElem::zero(alg))};
  xp[0][0] = AlgElem::one(alg);
  yp[0][0] = AlgElem::one(alg);
  for (int e = 1; e <= dmax; ++e) {
    xp.push_back(mul(xp.back(), X, alg));
    yp.push_back(mul(yp.back(), Y, alg));
  }
  for (const auto& [m, c] : q.terms()) {
    Series t = mul(xp[static_cast<std::size_t>(m.i)], yp[static_cast<std::size_t>(m.j)], alg);
    for (std::size_t k = 0; k < n; ++k) out[k] += c * t[k];
  }
  return out;
}

// Coordinates of an algebra element in the basis 1, t, ..., t^(n-1).
std::vector<FieldElem> components(const AlgElem& e) {
  const auto& alg = e.context();
  UniPoly r = e.rep() % alg->modulus();
  std::vector<FieldElem> out;
  for (int i = 0; i < alg->degree(); ++i) out.push_back(r.coeff(i));
  return out;
}

// Quotient classes of each monomial at the points of one family.
std::vector<std::vector<AlgElem>> family_conditions(const Curve& c, const SingularPointRecord& rec,
                                                    const PointFamily& fam, int dim,
                                                    const std::vector<Monomial>& monomials, int degree) {
  const auto& alg = fam.algebra();
  const FieldDescriptor& F = c.field();
  std::vector<AlgPoly> local;
  for (const auto& m : monomials) local.push_back(fam.local_equation(BiPoly::term(F, FieldElem::one(F), m.i, m.j), degree));

  Series X(static_cast<std::size_t>(dim), AlgElem::zero(alg)), Y = X;
  if (dim >= 2) {
    AlgPoly L = fam.local_equation(c.f, c.degree);
    if (rec.ade.kind == AdeType::A) {
      ContactData cd = maximal_contact_local(L, rec.mu);
      Series& u = cd.axis == ContactAxis::y_of_x ? X : Y;
      Series& phi = cd.axis == ContactAxis::y_of_x ? Y : X;
      u[1] = AlgElem::one(alg);
      for (std::size_t k = 1; k < phi.size() && k <= cd.t.size(); ++k) phi[k] = cd.t[k - 1];
    } else {
      auto [dx, dy] = multiple_tangent_direction(L);
      X[1] = dx;
      Y[1] = dy;
    }
  }
  std::vector<std::vector<AlgElem>> out(static_cast<std::size_t>(dim), std::vector<AlgElem>(local.size(), AlgElem::zero(alg)));
  for (std::size_t k = 0; k < local.size(); ++k) {
    Series s = dim == 1 ? Series{local[k].coeff(0, 0)} : restrict(local[k], X, Y, alg);
    for (std::size_t r = 0; r < out.size(); ++r) out[r][k] = s[r];
  }
  return out;
}

[[noreturn]] void unsupported(AdeType ade, int k, int d) {
  throw Error(ErrorKind::UnsupportedTriple,
              "no adjunction ideal for (" + ade.to_string() + ", " + std::to_string(k) + ", " + std::to_string(d) + ")");
}

}  // namespace

AdjunctionIdeal adjunction_ideal(AdeType ade, int k, int d) {
  if (d == 6 && k == 5) {
    switch (ade.kind) {
      case AdeType::A:
        if (ade.index >= 1 && ade.index <= 19) return make(ade, k, d, (ade.index + 1) / 3, true);
        break;
      case AdeType::E:
        if (ade.index >= 6 && ade.index <= 8) return make(ade, k, d, 2, false);
        break;
      case AdeType::D:
        // D_n: dimension floor((2n+1)/6); only linear data along the double line is read.
        if (ade.index >= 4 && ade.index <= 8) return make(ade, k, d, (2 * ade.index + 1) / 6, false);
        break;
      case AdeType::NotSimple:
        break;
    }
    unsupported(ade, k, d);
  }
  if (d == 10 && ade == AdeType::a(4)) {
    if (k == 7 || k == 8) return make(ade, k, d, 1, true);
    if (k == 9) return make(ade, k, d, 2, true);
  }
  unsupported(ade, k, d);
}

std::vector<std::vector<FieldElem>> quotient_conditions(const Curve& c, const SingularPointRecord& rec,
                                                        const AdjunctionIdeal& ideal,
                                                        const std::vector<Monomial>& monomials, int degree) {
  const int dim = ideal.dimension();
  std::vector<std::vector<FieldElem>> rows;
  if (dim == 0) return rows;
  auto parts = split_apply(rec.point, [&](const PointFamily& fam) {
    // contact data of a split part is recomputed on that part
    if (fam.count() != rec.count()) return family_conditions(c, classify_family(c, fam).front(), fam, dim, monomials, degree);
    return family_conditions(c, rec, fam, dim, monomials, degree);
  });
  for (const auto& [fam, fs] : parts)
    for (const auto& f : fs) {
      std::vector<std::vector<FieldElem>> comp;
      for (const auto& e : f) comp.push_back(components(e));
      for (int i = 0; i < fam.count(); ++i) {
        std::vector<FieldElem> row;
        for (const auto& col : comp) row.push_back(col[static_cast<std::size_t>(i)]);
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

int rho5(AdeType ade, RhoLocus) {
  if (!ade.is_simple()) throw Error(ErrorKind::UnknownType, "rho(P,5) of a non-simple singularity");
  try {
    return adjunction_ideal(ade, 5, 6).dimension();
  } catch (const Error& e) {
    throw Error(ErrorKind::UnknownType, e.what());
  }
}

}  // namespace zlab
