#include "zlab/singloc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <set>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include "zlab/adjunction.hpp"

namespace zlab {

// --- types and configurations ---------------------------------------------

std::string AdeType::to_string() const {
  switch (kind) {
    case A: return "A" + std::to_string(index);
    case D: return "D" + std::to_string(index);
    case E: return "E" + std::to_string(index);
    case NotSimple: return "NotSimple";
  }
  return "?";
}

AdeType AdeType::parse(std::string_view s) {
  if (s == "NotSimple") return not_simple();
  if (s.size() < 2) throw Error(ErrorKind::SyntaxError, "bad singularity type '" + std::string(s) + "'");
  int k = 0;
  for (char c : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::SyntaxError, "bad singularity type '" + std::string(s) + "'");
    k = 10 * k + (c - '0');
  }
  switch (s[0]) {
    case 'A':
      if (k >= 1) return a(k);
      break;
    case 'D':
      if (k >= 4) return d(k);
      break;
    case 'E':
      if (k >= 6 && k <= 8) return e(k);
      break;
    default:
      break;
  }
  throw Error(ErrorKind::SyntaxError, "bad singularity type '" + std::string(s) + "'");
}

void Configuration::add(AdeType t, int n) {
  if (n > 0) counts_[t] += n;
}

int Configuration::total() const {
  int n = 0;
  for (const auto& [t, c] : counts_) n += c;
  return n;
}

bool Configuration::all_simple() const { return !counts_.count(AdeType::not_simple()); }

std::string Configuration::to_string() const {
  std::vector<std::pair<AdeType, int>> v(counts_.begin(), counts_.end());
  // larger Milnor number first; E before D before A on ties
  std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) {
    if (p.first.index != q.first.index) return p.first.index > q.first.index;
    return p.first.kind > q.first.kind;
  });
  std::string s;
  for (const auto& [t, n] : v) {
    if (!s.empty()) s += "+";
    if (n > 1) s += std::to_string(n);
    s += t.to_string();
  }
  return s;
}

Configuration Configuration::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c == ',') s.push_back('+');
    else if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']') s.push_back(c);
  Configuration cfg;
  if (s.empty()) return cfg;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    std::string item = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t k = 0;
    int mult = 0;
    while (k < item.size() && std::isdigit(static_cast<unsigned char>(item[k]))) mult = 10 * mult + (item[k++] - '0');
    if (k == 0) mult = 1;
    cfg.add(AdeType::parse(item.substr(k)), mult);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return cfg;
}

Curve::Curve(BiPoly poly, std::string curve_name) : name(std::move(curve_name)), f(std::move(poly)) {
  degree = f.total_degree();
  if (degree < 0) throw Error(ErrorKind::ZeroPolynomial, "curve defined by the zero polynomial");
}

// --- point families -------------------------------------------------------

PointFamily::PointFamily(Chart chart, AlgElem x, AlgElem y) : chart_(chart), x_(std::move(x)), y_(std::move(y)) {}

std::optional<ProjPoint> PointFamily::rational_point() const {
  if (!is_rational()) return std::nullopt;
  FieldElem a = x_.rep().coeff(0), b = y_.rep().coeff(0);
  FieldElem one = FieldElem::one(algebra()->field());
  switch (chart_) {
    case Chart::Z: return ProjPoint(a, b, one);
    case Chart::X: return ProjPoint(one, a, b);
    case Chart::Y: return ProjPoint(a, one, b);
  }
  return std::nullopt;
}

PointFamily PointFamily::restrict_to(const AlgebraRef& sub) const {
  return PointFamily(chart_, x_.project(sub), y_.project(sub));
}

AlgPoly PointFamily::local_equation(const BiPoly& f, int degree) const {
  AlgPoly g = lift(chart_polynomial(f, degree, chart_), algebra());
  return translate(g, x_, y_);
}

AlgElem PointFamily::value(const BiPoly& f, int degree) const {
  return lift(chart_polynomial(f, degree, chart_), algebra()).evaluate(x_, y_);
}

std::string PointFamily::to_string() const {
  if (auto p = rational_point()) return p->to_string();
  std::string coords;
  switch (chart_) {
    case Chart::Z: coords = "(" + x_.to_string() + ", " + y_.to_string() + ")"; break;
    case Chart::X: coords = "(1 : " + x_.to_string() + " : " + y_.to_string() + ")"; break;
    case Chart::Y: coords = "(" + x_.to_string() + " : 1 : " + y_.to_string() + ")"; break;
  }
  return coords + " where " + algebra()->modulus().to_string("t") + " = 0";
}

std::pair<PointFamily, PointFamily> split(const PointFamily& fam, const UniPoly& factor) {
  const auto& alg = fam.algebra();
  UniPoly g = factor.monic();
  UniPoly h = (alg->modulus() / g).monic();
  if (g.degree() < 1 || h.degree() < 1) throw Error(ErrorKind::Internal, "improper split of a point family");
  return {fam.restrict_to(EtaleAlgebra::make(alg->field(), g)), fam.restrict_to(EtaleAlgebra::make(alg->field(), h))};
}

PointFamily family_of(const ProjPoint& p, const FieldDescriptor& f) {
  auto alg = EtaleAlgebra::make(f, UniPoly::variable(f));
  Chart ch = p.preferred_chart();
  auto [a, b] = *p.chart_coordinates(ch);
  return PointFamily(ch, AlgElem::from_field(alg, a), AlgElem::from_field(alg, b));
}

// --- roots in the base field ----------------------------------------------

namespace {

/// Continued-fraction convergents of v with bounded denominators.
std::vector<Rational> convergents(long double v) {
  std::vector<Rational> out;
  if (!std::isfinite(v) || std::fabs(v) > 1e15L) return out;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double r = v;
  for (int it = 0; it < 40; ++it) {
    long double fl = std::floor(r);
    Integer a(static_cast<double>(fl));
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > Integer(100000000)) break;
    out.emplace_back(p2, q2);
    out.back().canonicalize();
    long double frac = r - fl;
    if (frac < 1e-13L) break;
    r = 1.0L / frac;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return out;
}

std::vector<std::complex<long double>> numeric_roots(const std::vector<Rational>& coeffs) {
  // coefficients low to high, leading one nonzero
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::complex<long double>> out;
  if (n < 1) return out;
  if (n == 1) {
    out.emplace_back(static_cast<long double>(Rational(-coeffs[0] / coeffs[1]).get_d()), 0.0L);
    return out;
  }
  Eigen::Matrix<long double, Eigen::Dynamic, 1> c(n + 1);
  Rational lead = coeffs.back();
  for (int i = 0; i <= n; ++i) c(i) = static_cast<long double>(Rational(coeffs[static_cast<std::size_t>(i)] / lead).get_d());
  Eigen::PolynomialSolver<long double, Eigen::Dynamic> solver;
  solver.compute(c);
  for (int i = 0; i < solver.roots().size(); ++i) out.push_back(solver.roots()(i));
  return out;
}

}  // namespace

std::vector<FieldElem> roots_in_field(const UniPoly& p) {
  std::vector<FieldElem> roots;
  const auto& f = p.context();
  int n = p.degree();
  if (n < 1) return roots;
  auto add = [&](const FieldElem& r) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end() && p.evaluate(r).is_zero()) roots.push_back(r);
  };
  if (p.coeff(0).is_zero()) add(FieldElem::zero(f));
  if (f.is_rational_field()) {
    std::vector<Rational> c;
    for (int i = 0; i <= n; ++i) c.push_back(p.coeff(i).a());
    for (const auto& z : numeric_roots(c)) {
      if (std::fabs(z.imag()) > 1e-6L * std::max(1.0L, std::fabs(z.real()))) continue;
      for (const auto& q : convergents(z.real())) add(FieldElem(q, f));
    }
    return roots;
  }
  // Roots of p are among the roots of its norm p * conj(p), which has rational coefficients.
  std::vector<FieldElem> conj;
  for (int i = 0; i <= n; ++i) conj.push_back(p.coeff(i).conjugate());
  UniPoly norm = p * UniPoly(f, conj);
  std::vector<Rational> c;
  for (int i = 0; i <= norm.degree(); ++i) c.push_back(norm.coeff(i).a());
  auto zs = numeric_roots(c);
  const Rational& D = f.radicand();
  long double sd = std::sqrt(std::fabs(static_cast<long double>(D.get_d())));
  auto try_ab = [&](long double a, long double b) {
    auto ca = convergents(a), cb = convergents(b);
    if (std::fabs(b) < 1e-12L) cb = {Rational(0)};
    if (std::fabs(a) < 1e-12L) ca = {Rational(0)};
    // only the last few convergents are plausible
    std::size_t ka = ca.size() > 6 ? ca.size() - 6 : 0, kb = cb.size() > 6 ? cb.size() - 6 : 0;
    for (std::size_t i = ka; i < ca.size(); ++i)
      for (std::size_t j = kb; j < cb.size(); ++j) add(FieldElem(ca[i], cb[j], f));
  };
  if (sgn(D) < 0) {
    for (const auto& z : zs) try_ab(z.real(), z.imag() / sd);
  } else {
    std::vector<long double> real;
    for (const auto& z : zs)
      if (std::fabs(z.imag()) <= 1e-6L * std::max(1.0L, std::fabs(z.real()))) real.push_back(z.real());
    for (long double z1 : real)
      for (long double z2 : real) try_ab((z1 + z2) / 2, (z1 - z2) / (2 * sd));
  }
  return roots;
}

std::vector<PointFamily> separate_rational_points(const PointFamily& fam) {
  if (fam.is_rational()) return {fam};
  const auto& alg = fam.algebra();
  const auto& f = alg->field();
  std::vector<PointFamily> out;
  UniPoly rest = alg->modulus();
  for (const auto& r : roots_in_field(rest)) {
    UniPoly lin(f, {-r, FieldElem::one(f)});
    out.push_back(fam.restrict_to(EtaleAlgebra::make(f, lin)));
    rest = rest / lin;
  }
  if (rest.degree() >= 1) out.push_back(fam.restrict_to(EtaleAlgebra::make(f, rest)));
  return out;
}

// --- singular locus -------------------------------------------------------

namespace {

Univariate<AlgElem> at_x(const BiPoly& f, const AlgebraRef& alg, const AlgElem& x) {
  return lift(f, alg).restrict(Var::x, x);
}

/// Affine singular families for the shear x -> x - c y; nullopt if two singular
/// points share an abscissa in the sheared coordinates.
std::optional<std::vector<PointFamily>> affine_search(const BiPoly& f, int d, const FieldElem& c) {
  const auto& F = f.context();
  BiPoly fs = substitute(f, Var::x, BiPoly::x(F) - c * BiPoly::y(F));
  if (fs.coeff(0, d).is_zero()) return std::nullopt;  // leading coefficient in y must be constant
  BiPoly fx = partial(fs, Var::x), fy = partial(fs, Var::y);
  UniPoly disc = resultant(fs, fy, Var::y);
  if (disc.is_zero()) throw Error(ErrorKind::NonReducedCurve, "the curve has a multiple component");
  UniPoly m = disc;
  if (fx.degree_in(Var::y) >= 0 && fy.degree_in(Var::y) >= 0) {
    UniPoly r2 = resultant(fx, fy, Var::y);
    if (!r2.is_zero()) m = gcd(m, r2);
  } else if (fx.is_zero()) {
    // fs depends on y only; its singular points need fy = 0 as well.
  }
  m = squarefree_part(m);
  std::vector<PointFamily> out;
  if (m.degree() < 1) return out;
  // Where the first subresultant of fs, fy is a unit the fibre holds at most
  // one candidate, read off directly; elsewhere fall back to fibre gcds.
  const bool use_sub = d >= 2;
  UniPoly s1(F), s0(F);
  if (use_sub) std::tie(s1, s0) = subresultant1(fs, fy, Var::y);
  std::vector<std::pair<UniPoly, bool>> work{{m, use_sub}};
  while (!work.empty()) {
    auto [mi, fast] = work.back();
    work.pop_back();
    auto alg = EtaleAlgebra::make(F, mi);
    try {
      AlgElem t = AlgElem::generator(alg);
      if (fast) {
        AlgElem lead(alg, s1);
        if (!lead.is_zero()) {
          AlgElem y0 = -AlgElem(alg, s0) / lead;
          bool on = lift(fs, alg).evaluate(t, y0).is_zero() && lift(fx, alg).evaluate(t, y0).is_zero() &&
                    lift(fy, alg).evaluate(t, y0).is_zero();
          if (on) out.emplace_back(Chart::Z, t - AlgElem::from_field(alg, c) * y0, y0);
          continue;
        }
      }
      auto g = gcd(gcd(at_x(fs, alg, t), at_x(fx, alg, t)), at_x(fy, alg, t));
      if (g.degree() >= 2) g = g / gcd(g, g.derivative());  // y0 is a repeated root at non-nodal points
      int dg = g.degree();
      if (dg == 0) continue;
      if (dg >= 2) return std::nullopt;
      AlgElem y0 = -g.coeff(0) / g.coeff(1);
      out.emplace_back(Chart::Z, t - AlgElem::from_field(alg, c) * y0, y0);
    } catch (const SplitNeeded& s) {
      work.emplace_back(s.factor.monic(), fast);
      work.emplace_back((mi / s.factor).monic(), fast);
    }
  }
  return out;
}

std::vector<PointFamily> infinite_search(const BiPoly& f, int d) {
  const auto& F = f.context();
  std::vector<PointFamily> out;
  // chart Y = 1 at z = 0
  BiPoly g = chart_polynomial(f, d, Chart::Y);
  FieldElem zero = FieldElem::zero(F);
  UniPoly g0 = g.restrict(Var::y, zero);
  UniPoly gx = partial(g, Var::x).restrict(Var::y, zero);
  UniPoly gz = partial(g, Var::y).restrict(Var::y, zero);
  UniPoly c = gcd(gcd(g0, gx), gz);
  if (c.degree() >= 1) {
    auto alg = EtaleAlgebra::make(F, squarefree_part(c));
    out.emplace_back(Chart::Y, AlgElem::generator(alg), AlgElem::zero(alg));
  }
  // the point (1 : 0 : 0)
  BiPoly h = chart_polynomial(f, d, Chart::X);
  if (h.coeff(0, 0).is_zero() && h.coeff(1, 0).is_zero() && h.coeff(0, 1).is_zero()) {
    auto alg = EtaleAlgebra::make(F, UniPoly::variable(F));
    out.emplace_back(Chart::X, AlgElem::zero(alg), AlgElem::zero(alg));
  }
  return out;
}

}  // namespace

std::vector<SingularPoint> singular_points(const Curve& c) {
  const auto& F = c.field();
  std::vector<PointFamily> fams;
  bool done = false;
  for (int k = 0; k < 64 && !done; ++k) {
    long s = (k % 2 ? 1 : -1) * ((k + 1) / 2);  // 0, 1, -1, 2, -2, ...
    if (auto r = affine_search(c.f, c.degree, FieldElem(Rational(s), F))) {
      fams = std::move(*r);
      done = true;
    }
  }
  if (!done) throw Error(ErrorKind::Internal, "no separating shear found");
  for (auto& p : infinite_search(c.f, c.degree)) fams.push_back(std::move(p));
  std::vector<SingularPoint> out;
  for (const auto& fam : fams)
    for (auto& p : separate_rational_points(fam)) {
      for (auto& [q, mult] : split_apply(p, [&](const PointFamily& q) { return q.local_equation(c.f, c.degree).order(); }))
        out.push_back({q, mult});
    }
  return out;
}

// --- intersection numbers -------------------------------------------------

std::optional<int> intersection_multiplicity(const BiPoly& f, int deg_f, const BiPoly& g, int deg_g,
                                             const ProjPoint& p) {
  Chart ch = p.preferred_chart();
  auto [a, b] = *p.chart_coordinates(ch);
  return intersection_at_origin(translate(chart_polynomial(f, deg_f, ch), a, b),
                                translate(chart_polynomial(g, deg_g, ch), a, b));
}

std::optional<int> intersection_multiplicity(const BiPoly& f, const BiPoly& g, const ProjPoint& p) {
  auto [a, b] = p.affine_coordinates();
  return intersection_at_origin(translate(f, a, b), translate(g, a, b));
}

std::vector<std::pair<PointFamily, std::optional<int>>> intersection_multiplicity(const BiPoly& f, int deg_f,
                                                                                   const BiPoly& g, int deg_g,
                                                                                   const PointFamily& p) {
  return split_apply(p, [&](const PointFamily& q) {
    return intersection_at_origin(q.local_equation(f, deg_f), q.local_equation(g, deg_g));
  });
}

int milnor_number(const Curve& c, const ProjPoint& p) {
  Chart ch = p.preferred_chart();
  auto [a, b] = *p.chart_coordinates(ch);
  BiPoly l = translate(chart_polynomial(c.f, c.degree, ch), a, b);
  auto mu = intersection_at_origin(partial(l, Var::x), partial(l, Var::y));
  if (!mu) throw Error(ErrorKind::NonIsolated, "non-isolated singularity at " + p.to_string());
  return *mu;
}

// --- classification -------------------------------------------------------

namespace {

struct Cubic {
  AlgElem a, b, c, d;  // a x^3 + b x^2 y + c x y^2 + d y^3
};

Cubic tangent_cubic(const AlgPoly& local) {
  return {local.coeff(3, 0), local.coeff(2, 1), local.coeff(1, 2), local.coeff(0, 3)};
}

AlgElem q_(const AlgebraRef& alg, long v) { return AlgElem::from_rational(alg, Rational(v)); }

bool hessian_vanishes(const Cubic& k) {
  const auto& alg = k.a.context();
  return (k.b * k.b - q_(alg, 3) * k.a * k.c).is_zero() && (q_(alg, 9) * k.a * k.d - k.b * k.c).is_zero() &&
         (k.c * k.c - q_(alg, 3) * k.b * k.d).is_zero();
}

AlgElem discriminant(const Cubic& k) {
  const auto& alg = k.a.context();
  return k.b * k.b * k.c * k.c - q_(alg, 4) * k.a * k.c * k.c * k.c - q_(alg, 4) * k.b * k.b * k.b * k.d -
         q_(alg, 27) * k.a * k.a * k.d * k.d + q_(alg, 18) * k.a * k.b * k.c * k.d;
}

using Series = Univariate<AlgElem>;

Series mul_trunc(const Series& a, const Series& b, int n) {
  const auto& alg = a.context();
  int da = std::min(a.degree(), n - 1), db = std::min(b.degree(), n - 1);
  if (da < 0 || db < 0) return Series(alg);
  std::vector<AlgElem> out(static_cast<std::size_t>(std::min(da + db, n - 1) + 1), AlgElem::zero(alg));
  for (int i = 0; i <= da; ++i) {
    const AlgElem& ai = a.coeff(i);
    if (ai.is_trivially_zero()) continue;
    for (int j = 0; j <= db && i + j < n; ++j) out[static_cast<std::size_t>(i + j)] += ai * b.coeff(j);
  }
  return Series(alg, std::move(out));
}

// 1/u mod x^n for a series with unit constant term.
Series inverse_trunc(const Series& u, int n) {
  const auto& alg = u.context();
  AlgElem inv0 = u.coeff(0).inverse();
  std::vector<AlgElem> v{inv0};
  for (int k = 1; k < n; ++k) {
    AlgElem acc = AlgElem::zero(alg);
    for (int i = 1; i <= k && i <= u.degree(); ++i) acc += u.coeff(i) * v[static_cast<std::size_t>(k - i)];
    v.push_back(-acc * inv0);
  }
  return Series(alg, std::move(v));
}

/// L(x, phi(x)) modulo x^n.
Series restrict_to_curve(const AlgPoly& l, const Series& phi, int n) {
  const auto& alg = l.context();
  int dy = l.degree_in(Var::y);
  Series r(alg);
  for (int j = dy; j >= 0; --j) r = mul_trunc(r, phi, n) + l.coefficient_in(Var::y, j).truncated(n);
  return r;
}

AlgPoly swap_xy(const AlgPoly& l) {
  AlgPoly r(l.context());
  for (const auto& [m, c] : l.terms()) r.set_coeff(m.j, m.i, c);
  return r;
}

// Milnor number of a double point: the order of l along the solution of
// l_y = 0 is mu + 1. The solution is refined by Newton steps, doubling the
// precision each time. nullopt when no finite order shows up below the bound.
std::optional<int> double_point_milnor(const AlgPoly& local, int bound) {
  AlgPoly l = local;
  if (l.coeff(0, 2).is_zero()) {
    if (l.coeff(2, 0).is_zero()) return 1;  // x*y
    l = swap_xy(l);
  }
  const auto& alg = l.context();
  AlgElem a = l.coeff(2, 0), b = l.coeff(1, 1), c = l.coeff(0, 2);
  if (!(b * b - q_(alg, 4) * a * c).is_zero()) return 1;
  AlgPoly ly = partial(l, Var::y), lyy = partial(ly, Var::y);
  Series phi(alg);
  for (int P = 1; P <= 2 * bound + 4; P *= 2) {
    int n = 2 * P;
    Series g = restrict_to_curve(ly, phi, n);
    Series gy = restrict_to_curve(lyy, phi, n);
    phi = (phi - mul_trunc(g, inverse_trunc(gy, n), n)).truncated(n);
    Series s = restrict_to_curve(l, phi, 2 * n);
    for (int k = 0; k < 2 * n; ++k)
      if (!s.coeff(k).is_zero()) return k - 1;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ContactAxis a) { return a == ContactAxis::y_of_x ? "y-as-function-of-x" : "x-as-function-of-y"; }

std::string_view to_string(LocusLabel l) {
  switch (l) {
    case LocusLabel::inner: return "inner";
    case LocusLabel::outer: return "outer";
    case LocusLabel::wild: return "wild";
    case LocusLabel::unlabeled: return "unlabeled";
  }
  return "?";
}

AdeType classify_local(const AlgPoly& local, int mult, int mu) {
  if (mult == 2) return AdeType::a(mu);
  if (mult != 3) return AdeType::not_simple();
  Cubic k = tangent_cubic(local);
  if (!discriminant(k).is_zero()) return mu == 4 ? AdeType::d(4) : AdeType::not_simple();
  if (hessian_vanishes(k)) return (mu >= 6 && mu <= 8) ? AdeType::e(mu) : AdeType::not_simple();
  return mu >= 5 ? AdeType::d(mu) : AdeType::not_simple();
}

ContactData maximal_contact_local(const AlgPoly& local, int mu) {
  if (local.order() != 2) throw Error(ErrorKind::NotAType, "maximal contact needs a double point");
  if (mu < 2) throw Error(ErrorKind::NotAType, "maximal contact needs a cusp-like point (mu >= 2)");
  ContactData cd;
  cd.mu = mu;
  cd.iota = (mu + 1) % 3 == 0 ? (mu + 1) / 3 : 0;
  cd.tau = (mu + 1) / 2;
  AlgPoly l = local;
  if (l.coeff(0, 2).is_zero()) {
    if (l.coeff(2, 0).is_zero()) throw Error(ErrorKind::NotAType, "tangent cone is not a double line");
    l = swap_xy(l);
    cd.axis = ContactAxis::x_of_y;
  }
  const auto& alg = l.context();
  cd.a = l.coeff(0, 2);
  AlgElem two_a = q_(alg, 2) * cd.a;
  AlgPoly ly = partial(l, Var::y);
  Series phi(alg);
  for (int k = 1; k <= cd.tau; ++k) {
    Series s = restrict_to_curve(ly, phi, k + 1);
    AlgElem tk = -s.coeff(k) / two_a;
    cd.t.push_back(tk);
    phi += Series::monomial(alg, tk, k);
  }
  Series s = restrict_to_curve(l, phi, mu + 2);
  cd.order = s.order();
  if (cd.order != mu + 1)
    throw Error(ErrorKind::WrongType, "order along the contact curve is " + std::to_string(cd.order) + ", expected " +
                                          std::to_string(mu + 1));
  cd.b = s.coeff(mu + 1);
  return cd;
}

ContactData maximal_contact(const Curve& c, const ProjPoint& p, int iota) {
  PointFamily fam = family_of(p, c.field());
  AlgPoly l = fam.local_equation(c.f, c.degree);
  if (l.order() != 2) throw Error(ErrorKind::NotAType, "not an A singularity at " + p.to_string());
  auto mu = double_point_milnor(l, (c.degree - 1) * (c.degree - 1));
  if (!mu) throw Error(ErrorKind::NonIsolated, "non-isolated singularity at " + p.to_string());
  if (*mu != 3 * iota - 1)
    throw Error(ErrorKind::WrongType, "A" + std::to_string(*mu) + " at " + p.to_string() + " is not A" +
                                          std::to_string(3 * iota - 1));
  return maximal_contact_local(l, *mu);
}

std::pair<AlgElem, AlgElem> multiple_tangent_direction(const AlgPoly& local) {
  Cubic k = tangent_cubic(local);
  const auto& alg = k.a.context();
  AlgElem zero = AlgElem::zero(alg), one = AlgElem::one(alg);
  if (hessian_vanishes(k)) {
    if (k.a.is_zero()) return {one, zero};  // d y^3
    return {k.b / (q_(alg, 3) * k.a), -one};  // (x + r y)^3, r = b / 3a
  }
  if (!k.a.is_zero()) {
    // double root of a x^3 + b x^2 + c x + d
    Univariate<AlgElem> p(alg, {k.d, k.c, k.b, k.a});
    auto g = gcd(p, p.derivative());
    if (g.degree() != 1) throw Error(ErrorKind::Internal, "tangent cone has no double line");
    return {-g.coeff(0) / g.coeff(1), one};
  }
  if (k.b.is_zero()) return {one, zero};  // y^2 divides the cone
  return {k.c / (q_(alg, 2) * k.b), -one};
}

std::vector<SingularPointRecord> classify_family(const Curve& c, const PointFamily& fam) {
  auto parts = split_apply(fam, [&](const PointFamily& p) {
    AlgPoly l = p.local_equation(c.f, c.degree);
    int mult = l.order();
    if (mult < 2) throw Error(ErrorKind::InvalidArgument, "point " + p.to_string() + " is not singular");
    auto mu = mult == 2 ? double_point_milnor(l, (c.degree - 1) * (c.degree - 1))
                        : intersection_at_origin(partial(l, Var::x), partial(l, Var::y));
    if (!mu) throw Error(ErrorKind::NonIsolated, "non-isolated singularity at " + p.to_string());
    SingularPointRecord r{p, mult, *mu, classify_local(l, mult, *mu), 0, LocusLabel::unlabeled, std::nullopt};
    if (r.ade.kind == AdeType::A && r.mu >= 2) r.contact = maximal_contact_local(l, r.mu);
    try {
      r.rho5 = r.ade.is_simple() ? rho5(r.ade) : 0;
    } catch (const Error&) {
      r.rho5 = 0;
    }
    return r;
  });
  std::vector<SingularPointRecord> out;
  for (auto& [p, r] : parts) {
    r.point = p;
    out.push_back(std::move(r));
  }
  return out;
}

SingularPointRecord classify_ade(const Curve& c, const ProjPoint& p) {
  auto recs = classify_family(c, family_of(p, c.field()));
  return recs.front();
}

std::vector<SingularPointRecord> analyze_singularities(const Curve& c) {
  std::vector<SingularPointRecord> out;
  for (const auto& sp : singular_points(c))
    for (auto& r : classify_family(c, sp.family)) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const SingularPointRecord& a, const SingularPointRecord& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    if (a.point.chart() != b.point.chart()) return a.point.chart() < b.point.chart();
    return a.point.to_string() < b.point.to_string();
  });
  return out;
}

Configuration configuration(const std::vector<SingularPointRecord>& records) {
  Configuration cfg;
  for (const auto& r : records) cfg.add(r.ade, r.count());
  return cfg;
}

Configuration configuration(const Curve& c) { return configuration(analyze_singularities(c)); }

}  // namespace zlab
