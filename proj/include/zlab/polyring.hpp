#pragma once

// Resultants, homogenization, projective points, affine changes of
// coordinates and the polynomial text format.

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "zlab/linalg.hpp"
#include "zlab/polynomial.hpp"
#include "zlab/qfield.hpp"

namespace zlab {

using UniPoly = Univariate<FieldElem>;
using BiPoly = Bivariate<FieldElem>;

/// F as a polynomial in v whose coefficients are polynomials in the other variable.
template <class K>
std::vector<Univariate<K>> as_univariate_in(const Bivariate<K>& f, Var v) {
  int d = f.degree_in(v);
  std::vector<Univariate<K>> out;
  for (int k = 0; k <= d; ++k) out.push_back(f.coefficient_in(v, k));
  return out;
}

/// Sylvester resultant eliminating v. Res(y^2 - x, y; y) = -x.
template <class K>
Univariate<K> resultant(const Bivariate<K>& f, const Bivariate<K>& g, Var v) {
  using U = Univariate<K>;
  const auto& ctx = f.context();
  auto fc = as_univariate_in(f, v);
  auto gc = as_univariate_in(g, v);
  if (fc.empty() || gc.empty()) throw Error(ErrorKind::ZeroPolynomial, "resultant of a zero polynomial");
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  if (m + n == 0) return U::one(ctx);
  Matrix<U> s(ctx, m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = fc[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = gc[static_cast<std::size_t>(n - k)];
  return determinant(std::move(s));
}

/// First subresultant of f and g in v, as (s1, s0) with S1 = s1*v + s0.
/// Where the fibre gcd has degree exactly one, its root is -s0/s1.
template <class K>
std::pair<Univariate<K>, Univariate<K>> subresultant1(const Bivariate<K>& f, const Bivariate<K>& g, Var v) {
  using U = Univariate<K>;
  const auto& ctx = f.context();
  auto fc = as_univariate_in(f, v);
  auto gc = as_univariate_in(g, v);
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "subresultant needs positive degrees");
  // rows v^k f (k < n-1) and v^k g (k < m-1); columns are powers m+n-2 down to 0
  const int rows = m + n - 2, cols = m + n - 1;
  auto build = [&](int keep) {
    Matrix<U> s(ctx, rows, rows);
    auto put = [&](int r, const std::vector<U>& c, int deg, int shift) {
      for (int k = 0; k <= deg; ++k) {
        int power = k + shift, col = cols - 1 - power;
        if (col < rows - 1) s(r, col) = c[static_cast<std::size_t>(k)];
        else if (power == keep) s(r, rows - 1) = c[static_cast<std::size_t>(k)];
      }
    };
    for (int k = 0; k < n - 1; ++k) put(k, fc, m, k);
    for (int k = 0; k < m - 1; ++k) put(n - 1 + k, gc, n, k);
    return determinant(std::move(s));
  };
  return {build(1), build(0)};
}

// --- homogenization -------------------------------------------------------

/// Ternary form of a fixed degree, terms X^i Y^j Z^k with i + j + k = degree.
class TernaryForm {
 public:
  TernaryForm(FieldDescriptor desc, int degree) : desc_(std::move(desc)), degree_(degree) {}

  int degree() const { return degree_; }
  const FieldDescriptor& descriptor() const { return desc_; }
  const std::map<std::array<int, 3>, FieldElem>& terms() const { return t_; }
  void add(int i, int j, int k, const FieldElem& c);
  FieldElem evaluate(const FieldElem& X, const FieldElem& Y, const FieldElem& Z) const;

 private:
  FieldDescriptor desc_;
  int degree_;
  std::map<std::array<int, 3>, FieldElem> t_;
};

TernaryForm homogenize(const BiPoly& f, int degree);

/// Affine charts of P^2. Chart Z is (x, y) = (X/Z, Y/Z); chart X uses
/// (x, y) = (Y/X, Z/X); chart Y uses (x, y) = (X/Y, Z/Y).
enum class Chart { Z, X, Y };

std::string_view to_string(Chart c);

/// Dehomogenized equation of the degree-d closure of f in the given chart.
BiPoly chart_polynomial(const BiPoly& f, int degree, Chart chart);

// --- projective points ----------------------------------------------------

class ProjPoint {
 public:
  ProjPoint(FieldElem X, FieldElem Y, FieldElem Z);
  static ProjPoint affine(const FieldElem& x, const FieldElem& y) { return ProjPoint(x, y, FieldElem::one(x.descriptor())); }

  const FieldElem& X() const { return c_[0]; }
  const FieldElem& Y() const { return c_[1]; }
  const FieldElem& Z() const { return c_[2]; }
  bool is_affine() const { return !c_[2].is_zero(); }
  /// Affine coordinates; PointAtInfinity when Z = 0.
  std::pair<FieldElem, FieldElem> affine_coordinates() const;
  /// Coordinates in the given chart, if the point lies in it.
  std::optional<std::pair<FieldElem, FieldElem>> chart_coordinates(Chart chart) const;
  /// A chart containing the point, preferring Z, then X, then Y.
  Chart preferred_chart() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);
  std::string to_string() const;

 private:
  std::array<FieldElem, 3> c_;
};

FieldElem evaluate(const BiPoly& f, const ProjPoint& p);
BiPoly translate(const BiPoly& f, const ProjPoint& p);

// --- affine changes of coordinates ----------------------------------------

/// (x, y) -> (a x + b y + e, c x + d y + f), invertible.
struct AffineMap {
  FieldElem a, b, c, d, e, f;

  static AffineMap identity(const FieldDescriptor& desc);
  FieldElem determinant() const { return a * d - b * c; }
  AffineMap inverse() const;
  std::pair<FieldElem, FieldElem> apply(const FieldElem& x, const FieldElem& y) const {
    return {a * x + b * y + e, c * x + d * y + f};
  }
};

/// Pulls F back along the map: returns F(a x + b y + e, c x + d y + f).
/// Singular points of the result are the preimages of those of F.
BiPoly pull_back(const BiPoly& f, const AffineMap& m);

// --- text -----------------------------------------------------------------

/// Parses an expression in x, y with rational literals, sqrt(D), + - * / ^ and
/// parentheses. Division only by nonzero constants.
BiPoly parse_polynomial(std::string_view text, const FieldDescriptor& desc);

/// Graded lexicographic (x > y) canonical print, "c*x^i*y^j" terms.
std::string to_string(const BiPoly& f);

}  // namespace zlab
