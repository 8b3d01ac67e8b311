#pragma once

// Torus and semi-torus structure of sextics.
//
// tokunaga_search decides whether a sextic is f2^3 + f3^2 by looking for a
// conic meeting it only at singular points with I(C, j2; P) = 2 rho(P, 5).
// Semi-torus curves f2^3 + g2^2 h2 come with checks for the pencil criterion
// and a constructor for the two-outer-cusp slice. The Method-1 helpers build
// the contact conditions of an A_n point symbolically in the contact
// coefficients.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zlab/linalg.hpp"
#include "zlab/singloc.hpp"

namespace zlab {

/// scale * f2^3 + square_scale * f3^2. square_scale is 1 unless the square
/// part needs a non-square constant of the field.
struct TorusDecomposition {
  BiPoly f2;
  BiPoly f3;
  FieldElem scale;
  FieldElem square_scale;

  BiPoly polynomial() const;
};

/// f2^3 + g2^2 h2 (degree 6), or f2^5 + g2^2 h2 with g2 of degree 4 (degree 10).
struct SemiTorusDecomposition {
  BiPoly f2;
  BiPoly g2;
  BiPoly h2;
  int degree = 6;

  BiPoly polynomial() const;
};

struct OuterPointData {
  ProjPoint P;
  FieldElem t;  // f2(P)
  FieldElem s;  // g2(P)
};

struct ConicPencil {
  FieldElem t;
  FieldElem s;
};

// --- conic search -----------------------------------------------------------

struct PointCheck {
  std::string point;
  std::string type;
  int count = 1;
  int rho = 0;
  std::optional<int> intersection;  // nullopt: common component
  bool ok = false;
};

struct ConicCheck {
  BiPoly conic;
  std::vector<PointCheck> points;
  int total = 0;  // sum of count * I over the chosen points
  bool passed = false;
  std::string reason;
};

/// One choice of singular points with total rho 6, its linear conditions and
/// the exact checks of every candidate conic.
struct SubsetTrace {
  std::vector<std::string> points;
  Matrix<FieldElem> conditions;
  int rank = 0;
  std::vector<ConicCheck> candidates;
};

struct TorusCertificate {
  enum class Verdict { torus, non_torus };
  Verdict verdict = Verdict::non_torus;
  std::optional<BiPoly> witness;
  std::optional<TorusDecomposition> decomposition;
  std::vector<SubsetTrace> trace;
  int subsets_tried = 0;
};

std::string_view to_string(TorusCertificate::Verdict v);

/// Sextics only. sings must be the complete classified locus.
TorusCertificate tokunaga_search(const Curve& c, const std::vector<SingularPointRecord>& sings,
                                 std::uint64_t seed = 0x5eedULL);
TorusCertificate tokunaga_search(const Curve& c, std::uint64_t seed = 0x5eedULL);

/// Finds scale and f3 with C = scale * j2^3 + square_scale * f3^2. Throws NoDecomposition.
TorusDecomposition torus_decompose(const Curve& c, const BiPoly& j2, std::uint64_t seed = 0x5eedULL);

// --- semi-torus curves ------------------------------------------------------

struct SemiTorusPoint {
  SingularPointRecord record;
  std::optional<int> inner_iota;     // I(f2, g2; P) at inner points
  std::optional<AdeType> predicted;  // inner type from the conic data
};

struct SemiTorusReport {
  bool identity = false;
  std::vector<SemiTorusPoint> points;
  bool nice = true;
  Configuration configuration;
  Configuration inner;
  Configuration outer;
  Configuration predicted_inner;
  std::optional<bool> inner_in_sharp;  // sextics only
  std::vector<std::string> warnings;
};

/// Throws IdentityFails when C differs from the decomposition.
SemiTorusReport semi_torus_verify(const Curve& c, const SemiTorusDecomposition& d);

/// The inner configurations a nice semi-torus sextic can have.
const std::vector<Configuration>& sharp_list();

/// Rational affine outer points of a verified semi-torus curve, with f2 and g2 values.
std::vector<OuterPointData> outer_points(const SemiTorusReport& r, const SemiTorusDecomposition& d);

struct Thm7Verdict {
  enum class Kind { non_torus, inconclusive };
  Kind kind = Kind::inconclusive;
  char case_label = '?';  // 'a' or 'b'
  std::optional<FieldElem> determinant;  // t1 s2 - t2 s1 in case (a)
  std::string reason;
};

std::string_view to_string(Thm7Verdict::Kind k);

/// Pencil criterion. Throws WildPresent when the report has a wild point.
Thm7Verdict nontorus_check_thm7(const SemiTorusReport& r, const SemiTorusDecomposition& d,
                                const std::vector<OuterPointData>& outers);
Thm7Verdict nontorus_check_thm7(const SemiTorusDecomposition& d, const std::vector<OuterPointData>& outers);

/// t f2 + s g2. Throws ZeroPencilCoordinates for (0, 0).
BiPoly pencil_conic(const SemiTorusDecomposition& d, const ConicPencil& p);

/// Parameters of the slice with outer cusps at (0, 1) and (0, -1) and tangent
/// cones y = 1 and y = -1. f2(P_i) = t_i and g2(P_i) = s_i fix four
/// coefficients; with the x^2 and y^2 coefficients of f2 and the x and xy
/// coefficients of g2 given, the cusp conditions determine the other ten in three linear
/// stages. The pencil values also fix both scalings of the decomposition.
struct SixA2Params {
  FieldElem t1, s1, t2, s2;
  FieldElem f2_xx, f2_yy, g2_x, g2_xy;
};

struct SixA2Family {
  Curve curve;
  SemiTorusDecomposition decomposition;
  int rank = 0;  // coefficients eliminated by the cusp conditions
  bool thm7_hypotheses = false;  // all pencil values nonzero and t1 s2 - t2 s1 != 0
};

/// Throws ZeroPencilValue when some s_i is zero and RankDrop when the cusp
/// conditions do not determine the remaining coefficients.
SixA2Family build_6a2_family(const SixA2Params& p);

// --- Method 1 ---------------------------------------------------------------

/// Polynomial over Q in the contact coefficients t_2, t_3, ...; exponent
/// vector entry k is the power of t_(k+2).
class TPoly {
 public:
  TPoly() = default;
  static TPoly constant(const Rational& c);
  static TPoly var(int index);  // t_index, index >= 2

  const std::map<std::vector<int>, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  FieldElem evaluate(const std::vector<FieldElem>& t, const FieldDescriptor& f) const;
  std::string to_string() const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const Rational& c, const TPoly& a);
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.t_ == b.t_; }

 private:
  void add(std::vector<int> e, const Rational& c);
  std::map<std::vector<int>, Rational> t_;
};

struct Method1Condition {
  std::string label;                // "b_{0,j}" or "b_{1,s}"
  std::map<Monomial, TPoly> form;   // coefficient of a_kl
};

struct Method1System {
  AdeType target;
  int tau = 0;
  ContactAxis axis = ContactAxis::x_of_y;
  std::vector<Method1Condition> b_conditions;
  std::optional<TPoly> obstruction;  // J for A14

  /// Values of all conditions for a sextic g and contact coefficients t_2..t_tau.
  std::vector<FieldElem> evaluate(const BiPoly& g, const std::vector<FieldElem>& t) const;
};

/// Conditions for an A_n point at the origin. x_of_y: tangent cone x = 0 and
/// contact curve x = t2 y^2 + ... (the variable in the conditions is h(x, y) =
/// g(x + phi(y), y)); y_of_x exchanges the roles.
Method1System method1_system(int n, ContactAxis axis = ContactAxis::x_of_y);

FieldElem torus_obstruction_a14(const FieldElem& t2, const FieldElem& t3, const FieldElem& t4, const FieldElem& t5);
TPoly torus_obstruction_a14_poly();

/// Rows: h2(1, 0) and the y^j coefficients (j in coeff_rows) of h2(t2 y^2 + ... + t5 y^5, y);
/// columns: the conic coefficients of x^2, xy, y^2, x, y, 1.
std::vector<std::vector<TPoly>> a14_conic_system(const std::vector<int>& coeff_rows);
TPoly determinant(const std::vector<std::vector<TPoly>>& m);

}  // namespace zlab
