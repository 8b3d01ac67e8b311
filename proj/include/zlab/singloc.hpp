#pragma once

// Local analysis of plane curves: singular locus, intersection numbers,
// Milnor numbers, ADE types and maximal contact curves.
//
// Singular points need not be rational over the coefficient field. A point
// family is a set of conjugate points (x(t), y(t)) with t running over the
// roots of a squarefree modulus; all local computations run over the algebra
// F[t]/(m) and split the family when a zero test separates its members.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zlab/etale.hpp"
#include "zlab/polyring.hpp"

namespace zlab {

struct AdeType {
  enum Kind { A, D, E, NotSimple };
  Kind kind = NotSimple;
  int index = 0;

  static AdeType a(int k) { return {A, k}; }
  static AdeType d(int k) { return {D, k}; }
  static AdeType e(int k) { return {E, k}; }
  static AdeType not_simple() { return {NotSimple, 0}; }

  bool is_simple() const { return kind != NotSimple; }
  /// Milnor number of the type.
  int milnor() const { return index; }
  std::string to_string() const;
  /// "A14", "D4", "E6", "NotSimple".
  static AdeType parse(std::string_view s);

  auto operator<=>(const AdeType&) const = default;
};

/// Multiset of singularity types.
class Configuration {
 public:
  void add(AdeType t, int n = 1);
  const std::map<AdeType, int>& counts() const { return counts_; }
  int total() const;
  bool all_simple() const;
  /// Canonical text, e.g. "A14+A2+A1" or "2E6+A5"; "" for the empty configuration.
  std::string to_string() const;
  /// Accepts "[2A5 + E6]", "A14+A2+A1", "10A4", "6 A2", "".
  static Configuration parse(std::string_view s);
  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::map<AdeType, int> counts_;
};

/// An affine plane curve together with the degree of its projective closure.
struct Curve {
  std::string name;
  BiPoly f;
  int degree = 0;

  Curve() = default;
  explicit Curve(BiPoly poly, std::string curve_name = {});
  const FieldDescriptor& field() const { return f.context(); }
};

class PointFamily {
 public:
  PointFamily(Chart chart, AlgElem x, AlgElem y);

  Chart chart() const { return chart_; }
  const AlgebraRef& algebra() const { return x_.context(); }
  const AlgElem& x() const { return x_; }
  const AlgElem& y() const { return y_; }
  int count() const { return algebra()->degree(); }
  bool is_rational() const { return count() == 1; }

  /// The point itself when the family has a single member.
  std::optional<ProjPoint> rational_point() const;
  PointFamily restrict_to(const AlgebraRef& sub) const;
  /// Equation of the closure of f (of the given degree) in this family's chart,
  /// translated so the family sits at the origin.
  AlgPoly local_equation(const BiPoly& f, int degree) const;
  /// Value of f (affine, of the given degree) at the family, in the family's chart.
  AlgElem value(const BiPoly& f, int degree) const;

  std::string to_string() const;

 private:
  Chart chart_;
  AlgElem x_;
  AlgElem y_;
};

/// Splits a family into two along a proper factor of its modulus.
std::pair<PointFamily, PointFamily> split(const PointFamily& fam, const UniPoly& factor);

/// Runs fn on the family, splitting it whenever fn hits a zero divisor.
template <class Fn>
auto split_apply(const PointFamily& fam, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, const PointFamily&>;
  std::vector<std::pair<PointFamily, R>> out;
  std::vector<PointFamily> work{fam};
  while (!work.empty()) {
    PointFamily cur = work.back();
    work.pop_back();
    try {
      R r = fn(cur);
      out.emplace_back(cur, std::move(r));
    } catch (const SplitNeeded& s) {
      auto [a, b] = split(cur, s.factor);
      work.push_back(b);
      work.push_back(a);
    }
  }
  return out;
}

/// Roots of p lying in its coefficient field.
std::vector<FieldElem> roots_in_field(const UniPoly& p);

/// Splits off every member of the family that is rational over the base field.
std::vector<PointFamily> separate_rational_points(const PointFamily& fam);

struct SingularPoint {
  PointFamily family;
  int mult = 0;
};

/// All singular points of the projective closure, as families. Complete: every
/// singular point over the algebraic closure belongs to exactly one family.
std::vector<SingularPoint> singular_points(const Curve& c);

/// Fulton's algorithm at the origin; nullopt when F and G share a component
/// through the origin.
template <class K>
std::optional<int> intersection_at_origin(Bivariate<K> f, Bivariate<K> g) {
  const auto& ctx = f.context();
  const K zero = K::zero(ctx);
  // acc + I(f, g) is invariant; a finite I is at most the Bezout bound, so
  // passing it means a common component that never reduces to y = 0
  const int bound = f.total_degree() * g.total_degree();
  int acc = 0;
  for (;;) {
    if (f.is_zero() || g.is_zero() || acc > bound) return std::nullopt;
    if (!f.coeff(0, 0).is_zero() || !g.coeff(0, 0).is_zero()) return acc;
    auto fr = f.restrict(Var::y, zero);
    auto gr = g.restrict(Var::y, zero);
    int r = fr.degree(), s = gr.degree();
    if (r < 0 && s < 0) return std::nullopt;
    if (r < 0) {
      acc += gr.order();
      f = f.unshifted(0, 1);
      continue;
    }
    if (s < 0) {
      acc += fr.order();
      g = g.unshifted(0, 1);
      continue;
    }
    if (r > s) {
      std::swap(f, g);
      std::swap(fr, gr);
      std::swap(r, s);
    }
    K c = gr.lc() / fr.lc();
    g -= c * f.shifted(s - r, 0);
  }
}

/// I(F, G; P) for affine polynomials of the given projective degrees.
std::optional<int> intersection_multiplicity(const BiPoly& f, const BiPoly& g, const ProjPoint& p);
std::optional<int> intersection_multiplicity(const BiPoly& f, int deg_f, const BiPoly& g, int deg_g,
                                             const ProjPoint& p);
/// Family version; the family may be split.
std::vector<std::pair<PointFamily, std::optional<int>>> intersection_multiplicity(const BiPoly& f, int deg_f,
                                                                                   const BiPoly& g, int deg_g,
                                                                                   const PointFamily& p);

int milnor_number(const Curve& c, const ProjPoint& p);

enum class ContactAxis { y_of_x, x_of_y };
std::string_view to_string(ContactAxis a);

/// Maximal contact data of an A_mu point (mu >= 2): the curve v = 0 with
/// v = y - (t1 x + ... + t_tau x^tau) (or x and y exchanged) on which the
/// local equation has order exactly mu + 1; a = coefficient of v^2 and
/// b = coefficient of u^(mu+1) of the equation restricted to the curve.
struct ContactData {
  int mu = 0;
  int iota = 0;  // (mu + 1) / 3 when 3 divides mu + 1, otherwise 0
  int tau = 0;
  ContactAxis axis = ContactAxis::y_of_x;
  std::vector<AlgElem> t;  // t1 .. t_tau
  AlgElem a;
  AlgElem b;
  int order = 0;  // order of the equation along the truncated contact curve
};

/// Local equation at the origin; mu is its Milnor number. Throws NotAType.
ContactData maximal_contact_local(const AlgPoly& local, int mu);
ContactData maximal_contact(const Curve& c, const ProjPoint& p, int iota);

enum class LocusLabel { inner, outer, wild, unlabeled };
std::string_view to_string(LocusLabel l);

struct SingularPointRecord {
  PointFamily point;
  int mult = 0;
  int mu = 0;
  AdeType ade;
  int rho5 = 0;
  LocusLabel label = LocusLabel::unlabeled;
  std::optional<ContactData> contact;

  int count() const { return point.count(); }
};

/// Type of an isolated singular point given by its local equation at the origin.
AdeType classify_local(const AlgPoly& local, int mult, int mu);

/// Classifies every member of the family (splitting it when members differ).
std::vector<SingularPointRecord> classify_family(const Curve& c, const PointFamily& fam);
SingularPointRecord classify_ade(const Curve& c, const ProjPoint& p);

/// Singular locus, classified; rational points are separated from irrational
/// families. Records are sorted for deterministic output.
std::vector<SingularPointRecord> analyze_singularities(const Curve& c);

Configuration configuration(const std::vector<SingularPointRecord>& records);
Configuration configuration(const Curve& c);

/// Direction vector of the reduced tangent line at a point of multiplicity 3
/// whose tangent cone has a multiple line (E types and D types).
std::pair<AlgElem, AlgElem> multiple_tangent_direction(const AlgPoly& local);

/// The family (or point) of C closest to the given one, for lookups by location.
PointFamily family_of(const ProjPoint& p, const FieldDescriptor& f);

}  // namespace zlab
