#include "zlab/toruslab.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>

#include "zlab/adjunction.hpp"

namespace zlab {
namespace {

// conic coefficient order used for every linear system below
const std::array<Monomial, 6> kConic{{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}}};

FieldElem num(const FieldDescriptor& F, long n, long d = 1) { return FieldElem(make_rational(n, d), F); }

BiPoly conic_from(const std::vector<FieldElem>& v, const FieldDescriptor& F) {
  BiPoly p(F);
  for (std::size_t k = 0; k < kConic.size(); ++k) p.set_coeff(kConic[k].i, kConic[k].j, v[k]);
  return p;
}

int sign(const FieldElem& e) { return sgn(e.a()) != 0 ? sgn(e.a()) : sgn(e.b()); }

Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> n(-range, range), d(1, 4);
  for (;;) {
    Rational q(n(rng), d(rng));
    q.canonicalize();
    if (sgn(q) != 0) return q;
  }
}

std::string label(const SingularPointRecord& r) { return r.ade.to_string() + " at " + r.point.to_string(); }

// True when f and g share a component: after a shear making g monic in y,
// this is the vanishing of Res_y.
bool shares_component(const BiPoly& f, const BiPoly& g) {
  const FieldDescriptor& F = f.context();
  int dg = g.total_degree();
  if (dg <= 0) return false;
  for (long c = 0;; ++c) {
    AffineMap m = AffineMap::identity(F);
    m.b = num(F, c % 2 ? -(c + 1) / 2 : c / 2);
    BiPoly gs = pull_back(g, m);
    if (gs.degree_in(Var::y) != dg) continue;
    return resultant(pull_back(f, m), gs, Var::y).is_zero();
  }
}

ConicCheck check_conic(const Curve& c, const std::vector<const SingularPointRecord*>& subset, const BiPoly& j) {
  ConicCheck out;
  out.conic = j;
  out.passed = true;
  if (shares_component(c.f, j)) {
    out.passed = false;
    out.reason = "conic shares a component with the curve";
    return out;
  }
  for (const auto* r : subset) {
    for (auto& [part, I] : intersection_multiplicity(c.f, c.degree, j, 2, r->point)) {
      PointCheck pc;
      pc.point = part.to_string();
      pc.type = r->ade.to_string();
      pc.count = part.count();
      pc.rho = r->rho5;
      pc.intersection = I;
      pc.ok = I && *I == 2 * r->rho5;
      if (I) out.total += pc.count * *I;
      if (!pc.ok) out.passed = false;
      out.points.push_back(std::move(pc));
    }
  }
  if (!out.passed) {
    out.reason = "intersection number differs from 2 rho at some point";
  } else if (out.total != 2 * c.degree) {
    // the chosen points carry all 12 intersections only when nothing else is met
    out.passed = false;
    out.reason = "conic meets the curve outside the chosen points (total " + std::to_string(out.total) + ")";
  }
  return out;
}

}  // namespace

// --- decompositions ---------------------------------------------------------

BiPoly TorusDecomposition::polynomial() const { return scale * pow(f2, 3) + square_scale * pow(f3, 2); }

BiPoly SemiTorusDecomposition::polynomial() const {
  return pow(f2, static_cast<unsigned>(degree / 2)) + pow(g2, 2) * h2;
}

std::string_view to_string(TorusCertificate::Verdict v) {
  return v == TorusCertificate::Verdict::torus ? "torus" : "non-torus";
}

std::string_view to_string(Thm7Verdict::Kind k) {
  return k == Thm7Verdict::Kind::non_torus ? "non-torus" : "inconclusive";
}

// --- torus_decompose --------------------------------------------------------

namespace {

// Writes r = mu * q^2 with q over the field, if possible.
std::optional<std::pair<FieldElem, BiPoly>> square_root(const BiPoly& r) {
  const FieldDescriptor& F = r.context();
  auto terms = r.sorted_terms();
  if (terms.empty()) return std::nullopt;
  auto [m0, c0] = terms.front();
  if (m0.i % 2 || m0.j % 2) return std::nullopt;
  FieldElem mu = FieldElem::one(F), lead = FieldElem::one(F);
  if (auto s = c0.sqrt())
    lead = *s;
  else
    mu = c0;
  BiPoly target = mu.inverse() * r;
  Monomial mq{m0.i / 2, m0.j / 2};
  BiPoly q = BiPoly::term(F, lead, mq.i, mq.j);
  FieldElem two_lead = num(F, 2) * lead;
  for (int step = 0; step < 64; ++step) {
    BiPoly rest = target - q * q;
    auto rt = rest.sorted_terms();
    if (rt.empty()) return std::make_pair(mu, q);
    auto [m, c] = rt.front();
    Monomial e{m.i - mq.i, m.j - mq.j};
    if (e.i < 0 || e.j < 0 || !graded_lex_greater(mq, e)) return std::nullopt;
    q += BiPoly::term(F, c / two_lead, e.i, e.j);
  }
  return std::nullopt;
}

UniPoly on_line(const BiPoly& f, const FieldElem& a0, const FieldElem& a1, const FieldElem& b0, const FieldElem& b1) {
  const FieldDescriptor& F = f.context();
  BiPoly X = BiPoly::constant(F, a0) + a1 * BiPoly::x(F);
  BiPoly Y = BiPoly::constant(F, b0) + b1 * BiPoly::x(F);
  return compose(f, X, Y).coefficient_in(Var::y, 0);
}

// Scales lambda for which A - lambda B^3 (degree 6 in s) is a constant times a square.
std::vector<FieldElem> scale_candidates(const UniPoly& A, const UniPoly& B) {
  const FieldDescriptor& F = A.context();
  UniPoly B3 = B * B * B;
  auto p = [&](int k) { return UniPoly(F, {A.coeff(k), -B3.coeff(k)}); };
  auto k = [&](long v) { return UniPoly::constant(F, num(F, v)); };
  UniPoly mu = p(6);
  UniPoly Q2 = p(5);
  UniPoly Q1 = k(4) * p(4) * mu - Q2 * Q2;
  UniPoly Q0 = k(8) * p(3) * mu * mu - Q1 * Q2;
  UniPoly mu3 = mu * mu * mu;
  UniPoly E2 = k(64) * mu3 * p(2) - Q1 * Q1 - k(4) * Q0 * Q2;
  UniPoly E1 = k(64) * mu3 * mu * p(1) - Q0 * Q1;
  UniPoly E0 = k(256) * mu3 * mu * mu * p(0) - Q0 * Q0;
  UniPoly g(F);
  for (const UniPoly* e : {&E2, &E1, &E0})
    if (!e->is_zero()) g = g.is_zero() ? e->monic() : gcd(g, *e);
  std::vector<FieldElem> out;
  if (g.is_zero()) return out;
  if (g.degree() > 0) out = roots_in_field(g);
  if (!B3.coeff(6).is_zero()) out.push_back(A.coeff(6) / B3.coeff(6));  // leading term cancels
  return out;
}

}  // namespace

TorusDecomposition torus_decompose(const Curve& c, const BiPoly& j2, std::uint64_t seed) {
  const FieldDescriptor& F = c.field();
  if (c.degree != 6) throw Error(ErrorKind::UnsupportedDegree, "torus decomposition needs a sextic");
  if (j2.total_degree() < 0) throw Error(ErrorKind::NoDecomposition, "zero conic");
  std::mt19937_64 rng(seed);
  std::vector<FieldElem> tried;
  BiPoly j3 = pow(j2, 3);
  for (int attempt = 0; attempt < 8; ++attempt) {
    FieldElem a0(random_rational(rng), F), a1(random_rational(rng), F), b0(random_rational(rng), F),
        b1(random_rational(rng), F);
    UniPoly A = on_line(c.f, a0, a1, b0, b1), B = on_line(j2, a0, a1, b0, b1);
    if (A.degree() != 6 || B.degree() != 2) continue;
    for (const FieldElem& lambda : scale_candidates(A, B)) {
      if (std::find(tried.begin(), tried.end(), lambda) != tried.end()) continue;
      tried.push_back(lambda);
      BiPoly rest = c.f - lambda * j3;
      auto root = square_root(rest);
      if (!root) continue;
      auto [mu, f3] = *root;
      if (f3.total_degree() > 3) continue;
      auto lead = f3.sorted_terms();
      if (!lead.empty() && sign(lead.front().second) < 0) f3 = -f3;
      TorusDecomposition d{j2, f3, lambda, mu};
      if (!(d.polynomial() == c.f)) throw Error(ErrorKind::Internal, "torus identity does not re-verify");
      return d;
    }
    // one line in general position already lists every possible scale
    throw Error(ErrorKind::NoDecomposition, "no scale makes C - scale*j2^3 a square");
  }
  throw Error(ErrorKind::NoDecomposition, "no line in general position found");
}

// --- tokunaga_search --------------------------------------------------------

TorusCertificate tokunaga_search(const Curve& c, const std::vector<SingularPointRecord>& sings, std::uint64_t seed) {
  if (c.degree != 6) throw Error(ErrorKind::UnsupportedDegree, "the conic criterion is for sextics");
  const FieldDescriptor& F = c.field();
  std::vector<const SingularPointRecord*> pool;
  for (const auto& r : sings) {
    if (!r.ade.is_simple()) throw Error(ErrorKind::NotAllSimple, label(r) + " is not simple");
    if (r.rho5 > 0 && r.rho5 * r.count() <= 6) pool.push_back(&r);
  }
  std::mt19937_64 rng(seed);
  TorusCertificate cert;

  // functionals are computed once per record
  std::map<const SingularPointRecord*, std::vector<std::vector<FieldElem>>> rows_of;
  auto rows_for = [&](const SingularPointRecord* r) -> const std::vector<std::vector<FieldElem>>& {
    auto it = rows_of.find(r);
    if (it != rows_of.end()) return it->second;
    std::vector<Monomial> mons(kConic.begin(), kConic.end());
    auto rows = quotient_conditions(c, *r, adjunction_ideal(r->ade, 5, 6), mons, 2);
    return rows_of.emplace(r, std::move(rows)).first->second;
  };

  std::vector<const SingularPointRecord*> chosen;
  bool done = false;
  std::function<void(std::size_t, int)> visit = [&](std::size_t from, int weight) {
    if (done) return;
    if (weight == 6) {
      ++cert.subsets_tried;
      SubsetTrace tr;
      tr.conditions = Matrix<FieldElem>(F, 0, 6);
      for (const auto* r : chosen) {
        tr.points.push_back(label(*r));
        for (const auto& row : rows_for(r)) tr.conditions.append_row(row);
      }
      tr.rank = rank(tr.conditions);
      auto basis = nullspace(tr.conditions);
      std::vector<std::vector<FieldElem>> cands = basis;
      if (basis.size() >= 2)
        for (int draw = 0; draw < 3; ++draw) {
          std::vector<FieldElem> v(6, FieldElem::zero(F));
          for (const auto& b : basis) {
            FieldElem w(random_rational(rng), F);
            for (std::size_t k = 0; k < 6; ++k) v[k] += w * b[k];
          }
          cands.push_back(v);
        }
      for (const auto& v : cands) {
        ConicCheck chk = check_conic(c, chosen, conic_from(v, F));
        if (chk.passed) {
          cert.verdict = TorusCertificate::Verdict::torus;
          cert.witness = chk.conic;
          try {
            cert.decomposition = torus_decompose(c, chk.conic, seed);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoDecomposition) throw;
            chk.reason = "conic satisfies the criterion but no decomposition over the field was found";
          }
          tr.candidates.push_back(std::move(chk));
          done = true;
          break;
        }
        tr.candidates.push_back(std::move(chk));
      }
      cert.trace.push_back(std::move(tr));
      return;
    }
    for (std::size_t k = from; k < pool.size() && !done; ++k) {
      int w = pool[k]->rho5 * pool[k]->count();
      if (weight + w > 6) continue;
      chosen.push_back(pool[k]);
      visit(k + 1, weight + w);
      chosen.pop_back();
    }
  };
  visit(0, 0);
  return cert;
}

TorusCertificate tokunaga_search(const Curve& c, std::uint64_t seed) {
  return tokunaga_search(c, analyze_singularities(c), seed);
}

// --- semi-torus curves ------------------------------------------------------

const std::vector<Configuration>& sharp_list() {
  static const std::vector<Configuration> list = [] {
    std::vector<Configuration> v;
    for (const char* s : {"4A2", "A5+2A2", "E6+2A2", "2E6", "A8+A2", "A11"}) v.push_back(Configuration::parse(s));
    return v;
  }();
  return list;
}

SemiTorusReport semi_torus_verify(const Curve& c, const SemiTorusDecomposition& d) {
  const int gdeg = d.degree / 2 - 1;  // 2 for sextics, 4 for degree 10
  if (d.degree != 6 && d.degree != 10)
    throw Error(ErrorKind::UnsupportedDegree, "semi-torus forms exist here for degrees 6 and 10");
  if (d.f2.total_degree() != 2 || d.g2.total_degree() != gdeg || d.h2.total_degree() > 2)
    throw Error(ErrorKind::InvalidArgument, "semi-torus parts have the wrong degrees");
  SemiTorusReport rep;
  rep.identity = d.polynomial() == c.f && c.degree == d.degree;
  if (!rep.identity) throw Error(ErrorKind::IdentityFails, "the curve is not f2^" + std::to_string(d.degree / 2) + " + g^2 h2");
  const int power = d.degree / 2;

  struct Local {
    LocusLabel label;
    std::optional<int> iota;
    std::optional<AdeType> predicted;
  };
  for (const auto& rec : analyze_singularities(c)) {
    auto parts = split_apply(rec.point, [&](const PointFamily& fam) {
      Local l{LocusLabel::unlabeled, std::nullopt, std::nullopt};
      bool zf = fam.value(d.f2, 2).is_zero(), zg = fam.value(d.g2, gdeg).is_zero(), zh = fam.value(d.h2, 2).is_zero();
      if (zf && zg && zh) {
        l.label = LocusLabel::wild;
      } else if (zf && zg) {
        l.label = LocusLabel::inner;
        AlgPoly lg = fam.local_equation(d.g2, gdeg);
        l.iota = intersection_at_origin(fam.local_equation(d.f2, 2), lg);
        if (l.iota) {
          if (lg.order() == 1)
            l.predicted = AdeType::a(power * *l.iota - 1);
          else if (power == 3 && *l.iota == 2)
            l.predicted = AdeType::e(6);
        }
      } else if (!zf) {
        l.label = LocusLabel::outer;
      }
      return l;
    });
    for (auto& [fam, l] : parts) {
      SemiTorusPoint p{fam.count() == rec.count() ? rec : classify_family(c, fam).front(), std::nullopt, std::nullopt};
      p.record.point = fam;
      p.record.label = l.label;
      p.inner_iota = l.iota;
      p.predicted = l.predicted;
      int n = fam.count();
      rep.configuration.add(p.record.ade, n);
      switch (l.label) {
        case LocusLabel::inner:
          rep.inner.add(p.record.ade, n);
          if (l.predicted) {
            rep.predicted_inner.add(*l.predicted, n);
            if (*l.predicted != p.record.ade)
              rep.warnings.push_back("inner point " + fam.to_string() + " is " + p.record.ade.to_string() +
                                     " but the conic data predict " + l.predicted->to_string());
          } else {
            rep.warnings.push_back("no predicted type for inner point " + fam.to_string());
          }
          break;
        case LocusLabel::outer: rep.outer.add(p.record.ade, n); break;
        case LocusLabel::wild: rep.nice = false; break;
        case LocusLabel::unlabeled:
          rep.warnings.push_back("singular point " + fam.to_string() + " is neither inner, outer nor wild");
          break;
      }
      rep.points.push_back(std::move(p));
    }
  }
  if (d.degree == 6 && rep.nice) {
    const auto& list = sharp_list();
    rep.inner_in_sharp = std::find(list.begin(), list.end(), rep.inner) != list.end();
    if (!*rep.inner_in_sharp)
      rep.warnings.push_back("InnerConfigNotInSharp: inner configuration " + rep.inner.to_string() +
                             " is not among the possible ones");
  }
  return rep;
}

std::vector<OuterPointData> outer_points(const SemiTorusReport& r, const SemiTorusDecomposition& d) {
  std::vector<OuterPointData> out;
  for (const auto& p : r.points) {
    if (p.record.label != LocusLabel::outer) continue;
    auto P = p.record.point.rational_point();
    if (!P || !P->is_affine()) continue;
    out.push_back({*P, evaluate(d.f2, *P), evaluate(d.g2, *P)});
  }
  return out;
}

Thm7Verdict nontorus_check_thm7(const SemiTorusReport& r, const SemiTorusDecomposition& d,
                                const std::vector<OuterPointData>& outers) {
  if (!r.nice) throw Error(ErrorKind::WildPresent, "the curve has a wild singular point");
  if (d.degree != 6) throw Error(ErrorKind::UnsupportedDegree, "the pencil criterion is for sextics");
  Thm7Verdict v;
  auto zero_value = [&](const OuterPointData& o) { return o.t.is_zero() || o.s.is_zero(); };
  if (outers.size() == 2) {
    v.case_label = 'a';
    if (outers[0].P == outers[1].P) throw Error(ErrorKind::InvalidArgument, "the two outer points coincide");
    if (zero_value(outers[0]) || zero_value(outers[1])) {
      v.reason = "ZeroPencilValue: an outer point has f2 = 0 or g2 = 0";
      return v;
    }
    v.determinant = outers[0].t * outers[1].s - outers[1].t * outers[0].s;
    if (v.determinant->is_zero()) {
      v.reason = "t1 s2 - t2 s1 = 0: a pencil conic passes through both outer points";
      return v;
    }
    v.kind = Thm7Verdict::Kind::non_torus;
    v.reason = "no pencil conic passes through both outer points";
    return v;
  }
  if (outers.size() == 1) {
    v.case_label = 'b';
    const auto& o = outers[0];
    if (zero_value(o)) {
      v.reason = "ZeroPencilValue: the outer point has f2 = 0 or g2 = 0";
      return v;
    }
    if (!o.P.is_affine()) throw Error(ErrorKind::PointAtInfinity, "outer point at infinity");
    BiPoly j = o.s * d.f2 - o.t * d.g2;
    BiPoly lj = translate(j, o.P), lc = translate(d.polynomial(), o.P);
    FieldElem a = lj.coeff(1, 0), b = lj.coeff(0, 1);
    if (a.is_zero() && b.is_zero()) {
      v.reason = "the pencil conic through the outer point is singular there";
      return v;
    }
    if (lc.order() != 2) throw Error(ErrorKind::InvalidArgument, "the outer point is not a double point");
    // the cone Q = c L^2 contains the conic's tangent direction (b, -a) iff L is that tangent line
    FieldElem q = lc.coeff(2, 0) * b * b - lc.coeff(1, 1) * a * b + lc.coeff(0, 2) * a * a;
    if (q.is_zero()) {
      v.reason = "the tangent cone is the tangent line of the pencil conic";
      return v;
    }
    v.kind = Thm7Verdict::Kind::non_torus;
    v.reason = "the tangent cone differs from the tangent line of the pencil conic";
    return v;
  }
  throw Error(ErrorKind::InvalidArgument, "expected two outer points or one outer A5");
}

Thm7Verdict nontorus_check_thm7(const SemiTorusDecomposition& d, const std::vector<OuterPointData>& outers) {
  Curve c(d.polynomial());
  return nontorus_check_thm7(semi_torus_verify(c, d), d, outers);
}

BiPoly pencil_conic(const SemiTorusDecomposition& d, const ConicPencil& p) {
  if (p.t.is_zero() && p.s.is_zero()) throw Error(ErrorKind::ZeroPencilCoordinates, "(t, s) = (0, 0)");
  return p.t * d.f2 + p.s * d.g2;
}

// --- the two-cusp slice -----------------------------------------------------

namespace {

using Row = std::vector<FieldElem>;  // affine: coefficients of the unknowns, then the constant

Row affine(std::size_t n, const FieldDescriptor& F) { return Row(n + 1, FieldElem::zero(F)); }

// Solves one elimination stage; the rank must equal the number of unknowns.
std::vector<FieldElem> solve_stage(const std::vector<Row>& rows, std::size_t n, int& rank_sum) {
  const FieldDescriptor& F = rows.front().front().descriptor();
  Matrix<FieldElem> A(F, 0, static_cast<int>(n));
  std::vector<FieldElem> rhs;
  for (const auto& r : rows) {
    A.append_row(Row(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n)));
    rhs.push_back(-r[n]);
  }
  int rk = rank(A);
  rank_sum += rk;
  if (rk != static_cast<int>(n))
    throw Error(ErrorKind::RankDrop, "cusp conditions have rank " + std::to_string(rank_sum) + " so far");
  auto x = solve(A, rhs);
  if (!x) throw Error(ErrorKind::RankDrop, "cusp conditions are inconsistent");
  return *x;
}

}  // namespace

SixA2Family build_6a2_family(const SixA2Params& p) {
  const FieldDescriptor& F = p.t1.descriptor();
  if (p.s1.is_zero() || p.s2.is_zero()) throw Error(ErrorKind::ZeroPencilValue, "g2 vanishes at an outer point");
  const FieldElem one = FieldElem::one(F), half = num(F, 1, 2);
  const FieldElem two = num(F, 2), three = num(F, 3);
  // f2 = a20 x^2 + a11 xy + a02 y^2 + a10 x + a01 y + a00, likewise b.. for g2 and c.. for h2
  const FieldElem a20 = p.f2_xx, a02 = p.f2_yy, b11 = p.g2_xy, b10 = p.g2_x;
  const FieldElem a01 = half * (p.t1 - p.t2), b01 = half * (p.s1 - p.s2);
  struct At {
    FieldElem y, t, s, h;
  };
  std::array<At, 2> pts{At{one, p.t1, p.s1, -(p.t1 * p.t1 * p.t1) / (p.s1 * p.s1)},
                        At{-one, p.t2, p.s2, -(p.t2 * p.t2 * p.t2) / (p.s2 * p.s2)}};
  SixA2Family out;

  // stage 1: f(P) = 0 and f_y(P) = 0 in b02, c02, c01, c00 (h2(P) = -t^3/s^2 by the first)
  enum { B02, C02, C01, C00 };
  std::vector<Row> st1;
  for (const auto& P : pts) {
    Row e0 = affine(4, F);
    e0[C02] = one;
    e0[C01] = P.y;
    e0[C00] = one;
    e0[4] = -P.h;
    Row ey = affine(4, F);  // 3 t^2 f2_y + 2 s h g2_y + s^2 h2_y
    FieldElem q = two * a02 * P.y + a01;
    ey[B02] = two * P.s * P.h * two * P.y;
    ey[C02] = P.s * P.s * two * P.y;
    ey[C01] = P.s * P.s;
    ey[4] = three * P.t * P.t * q + two * P.s * P.h * b01;
    st1.push_back(e0);
    st1.push_back(ey);
  }
  auto x1 = solve_stage(st1, 4, out.rank);
  const FieldElem b02 = x1[B02], c02 = x1[C02], c01 = x1[C01], c00 = x1[C00];

  // stage 2: f_x(P) = 0 and f_xy(P) = 0 in a11, a10, c10, c11
  enum { A11, A10, C10, C11 };
  std::vector<Row> st2;
  for (const auto& P : pts) {
    const FieldElem q = two * a02 * P.y + a01, qg = two * b02 * P.y + b01, Hy = two * c02 * P.y + c01;
    const FieldElem gx = b10 + b11 * P.y;
    // f2_x = a10 + a11 y, h2_x = c10 + c11 y at P
    Row ex = affine(4, F);  // 3 t^2 f2_x + 2 s h g2_x + s^2 h2_x
    ex[A11] = three * P.t * P.t * P.y;
    ex[A10] = three * P.t * P.t;
    ex[C10] = P.s * P.s;
    ex[C11] = P.s * P.s * P.y;
    ex[4] = two * P.s * P.h * gx;
    // 6 F F_x F_y + 3 F^2 F_xy + 2 G_x G_y H + 2 G G_xy H + 2 G G_x H_y + 2 G G_y H_x + G^2 H_xy
    Row exy = affine(4, F);
    FieldElem k_fx = num(F, 6) * P.t * q;  // times f2_x
    FieldElem k_hx = two * P.s * qg;       // times h2_x
    exy[A11] = k_fx * P.y + three * P.t * P.t;
    exy[A10] = k_fx;
    exy[C10] = k_hx;
    exy[C11] = k_hx * P.y + P.s * P.s;
    exy[4] = (two * qg * P.h + two * P.s * Hy) * gx + two * P.s * P.h * b11;
    st2.push_back(ex);
    st2.push_back(exy);
  }
  auto x2 = solve_stage(st2, 4, out.rank);
  const FieldElem a11 = x2[A11], a10 = x2[A10], c10 = x2[C10], c11 = x2[C11];

  // stage 3: f_xx(P) = 0 in b20, c20
  enum { B20, C20 };
  std::vector<Row> st3;
  for (const auto& P : pts) {
    const FieldElem pf = a10 + a11 * P.y, pg = b10 + b11 * P.y, Hx = c10 + c11 * P.y;
    // 6 F F_x^2 + 3 F^2 F_xx + 2 G_x^2 H + 2 G G_xx H + 4 G G_x H_x + G^2 H_xx
    Row exx = affine(2, F);
    exx[B20] = num(F, 4) * P.s * P.h;
    exx[C20] = two * P.s * P.s;
    exx[2] = num(F, 6) * P.t * pf * pf + num(F, 6) * P.t * P.t * a20 + two * pg * pg * P.h +
             num(F, 4) * P.s * pg * Hx;
    st3.push_back(exx);
  }
  auto x3 = solve_stage(st3, 2, out.rank);

  BiPoly f2(F), g2(F), h2(F);
  auto put = [](BiPoly& b, std::array<FieldElem, 6> c) {
    for (std::size_t k = 0; k < 6; ++k) b.set_coeff(kConic[k].i, kConic[k].j, c[k]);
  };
  put(f2, {a20, a11, a02, a10, a01, half * (p.t1 + p.t2) - a02});
  put(g2, {x3[B20], b11, b02, b10, b01, half * (p.s1 + p.s2) - b02});
  put(h2, {x3[C20], c11, c02, c10, c01, c00});
  out.decomposition = SemiTorusDecomposition{f2, g2, h2, 6};
  out.curve = Curve(out.decomposition.polynomial());
  out.thm7_hypotheses = !p.t1.is_zero() && !p.t2.is_zero() && !(p.t1 * p.s2 - p.t2 * p.s1).is_zero();
  return out;
}

// --- Method 1 ---------------------------------------------------------------

TPoly TPoly::constant(const Rational& c) {
  TPoly p;
  p.add({}, c);
  return p;
}

TPoly TPoly::var(int index) {
  if (index < 2) throw Error(ErrorKind::InvalidArgument, "contact variables start at t2");
  std::vector<int> e(static_cast<std::size_t>(index - 1), 0);
  e.back() = 1;
  TPoly p;
  p.add(std::move(e), Rational(1));
  return p;
}

void TPoly::add(std::vector<int> e, const Rational& c) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (const auto& [e, c] : o.t_) add(e, c);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (const auto& [e, c] : o.t_) add(e, -c);
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      r.add(std::move(e), ca * cb);
    }
  return r;
}

TPoly operator*(const Rational& c, const TPoly& a) {
  TPoly r;
  for (const auto& [e, x] : a.t_) r.add(e, c * x);
  return r;
}

FieldElem TPoly::evaluate(const std::vector<FieldElem>& t, const FieldDescriptor& f) const {
  FieldElem r = FieldElem::zero(f);
  for (const auto& [e, c] : t_) {
    FieldElem term(c, f);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (k >= t.size()) throw Error(ErrorKind::InvalidArgument, "missing value for t" + std::to_string(k + 2));
      term *= pow(t[k], static_cast<unsigned>(e[k]));
    }
    r += term;
  }
  return r;
}

std::string TPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mon;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += "t" + std::to_string(k + 2);
      if (e[k] > 1) mon += "^" + std::to_string(e[k]);
    }
    Rational a = abs(c);
    std::string coef = zlab::to_string(a);
    std::string body = mon.empty() ? coef : (a == 1 ? mon : coef + "*" + mon);
    if (s.empty())
      s = (sgn(c) < 0 ? "-" : "") + body;
    else
      s += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return s;
}

namespace {

using TSeries = std::vector<TPoly>;

TSeries tmul(const TSeries& a, const TSeries& b) {
  TSeries r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// powers 0..e of phi = t2 u^2 + ... + t_tau u^tau, truncated to degree < n
std::vector<TSeries> contact_powers(int tau, int n, int e) {
  TSeries phi(static_cast<std::size_t>(n));
  for (int k = 2; k <= tau && k < n; ++k) phi[static_cast<std::size_t>(k)] = TPoly::var(k);
  std::vector<TSeries> out{TSeries(static_cast<std::size_t>(n))};
  out[0][0] = TPoly::constant(1);
  for (int k = 1; k <= e; ++k) out.push_back(tmul(out.back(), phi));
  return out;
}

}  // namespace

Method1System method1_system(int n, ContactAxis axis) {
  if (n < 1 || n > 17) throw Error(ErrorKind::InvalidArgument, "A_n with 1 <= n <= 17");
  Method1System sys;
  sys.target = AdeType::a(n);
  sys.tau = (n + 1) / 2;
  sys.axis = axis;
  const int d = 6;
  auto pw = contact_powers(sys.tau, n + 1, d);
  auto coef = [&](int e, int k) { return k < 0 ? TPoly() : pw[static_cast<std::size_t>(e)][static_cast<std::size_t>(k)]; };
  const bool xy = axis == ContactAxis::x_of_y;
  // in the x_of_y frame a_kl multiplies (x + phi(y))^k y^l; the other frame swaps the roles
  for (int order = 0; order <= 1; ++order) {
    int top = order == 0 ? n : sys.tau;
    for (int j = 0; j <= top; ++j) {
      Method1Condition cond;
      cond.label = xy ? "b_{" + std::to_string(order) + "," + std::to_string(j) + "}"
                      : "b_{" + std::to_string(j) + "," + std::to_string(order) + "}";
      for (int k = 0; k <= d; ++k)
        for (int l = 0; k + l <= d; ++l) {
          int e = xy ? k : l, other = xy ? l : k;  // e: power of the shifted variable
          if (e < order) continue;
          TPoly c = coef(e - order, j - other);
          if (order == 1) c = Rational(e) * c;
          if (!c.is_zero()) cond.form[Monomial{k, l}] = c;
        }
      sys.b_conditions.push_back(std::move(cond));
    }
  }
  if (n == 14) sys.obstruction = torus_obstruction_a14_poly();
  return sys;
}

std::vector<FieldElem> Method1System::evaluate(const BiPoly& g, const std::vector<FieldElem>& t) const {
  const FieldDescriptor& F = g.context();
  std::vector<FieldElem> out;
  for (const auto& cond : b_conditions) {
    FieldElem v = FieldElem::zero(F);
    for (const auto& [m, form] : cond.form) {
      FieldElem a = g.coeff(m.i, m.j);
      if (!a.is_zero()) v += a * form.evaluate(t, F);
    }
    out.push_back(v);
  }
  return out;
}

TPoly torus_obstruction_a14_poly() {
  TPoly t2 = TPoly::var(2), t3 = TPoly::var(3), t4 = TPoly::var(4), t5 = TPoly::var(5);
  return t3 * t4 + Rational(2) * (t2 * t2 * t3) - t5 * t2;
}

FieldElem torus_obstruction_a14(const FieldElem& t2, const FieldElem& t3, const FieldElem& t4, const FieldElem& t5) {
  return t3 * t4 + num(t2.descriptor(), 2) * t2 * t2 * t3 - t5 * t2;
}

std::vector<std::vector<TPoly>> a14_conic_system(const std::vector<int>& coeff_rows) {
  int top = 0;
  for (int r : coeff_rows) top = std::max(top, r);
  auto pw = contact_powers(5, top + 1, 2);
  std::vector<std::vector<TPoly>> m;
  std::vector<TPoly> at_p;  // h2(1, 0)
  for (const auto& mon : kConic) at_p.push_back(mon.j == 0 ? TPoly::constant(1) : TPoly());
  m.push_back(at_p);
  for (int r : coeff_rows) {
    std::vector<TPoly> row;
    for (const auto& mon : kConic)
      row.push_back(r - mon.j < 0 ? TPoly() : pw[static_cast<std::size_t>(mon.i)][static_cast<std::size_t>(r - mon.j)]);
    m.push_back(row);
  }
  return m;
}

TPoly determinant(const std::vector<std::vector<TPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return TPoly::constant(1);
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  TPoly r;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<TPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<TPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    TPoly t = m[0][j] * determinant(minor);
    if (j % 2) r -= t; else r += t;
  }
  return r;
}

}  // namespace zlab
