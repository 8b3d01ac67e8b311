#include "zlab/alexlab.hpp"

namespace zlab {

SigmaMap sigma_matrix(const Curve& c, const std::vector<SingularPointRecord>& sings, int k) {
  if (c.degree != 6 && c.degree != 10) throw Error(ErrorKind::UnsupportedDegree, "sigma maps are for degrees 6 and 10");
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "k must be at least 3");
  SigmaMap s;
  s.k = k;
  s.d = c.degree;
  const int top = k - 3;
  for (int e = top; e >= 0; --e)
    for (int i = e; i >= 0; --i) s.columns.push_back({i, e - i});
  s.matrix = Matrix<FieldElem>(c.field(), 0, static_cast<int>(s.columns.size()));
  for (const auto& r : sings) {
    if (!r.ade.is_simple()) throw Error(ErrorKind::NotAllSimple, r.point.to_string() + " is not simple");
    AdjunctionIdeal ideal = adjunction_ideal(r.ade, k, c.degree);
    if (ideal.dimension() == 0) continue;
    auto rows = quotient_conditions(c, r, ideal, s.columns, top);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s.row_labels.push_back(r.ade.to_string() + " at " + r.point.to_string() + " [" + std::to_string(i) + "]");
      s.matrix.append_row(rows[i]);
    }
  }
  s.rank = rank(s.matrix);
  s.coker_dim = s.matrix.rows() - s.rank;
  return s;
}

SigmaMap sigma_matrix(const Curve& c, int k) { return sigma_matrix(c, analyze_singularities(c), k); }

std::vector<std::vector<FieldElem>> sigma_kernel(const SigmaMap& s) { return nullspace(s.matrix); }

AlexanderResult alexander_polynomial(const Curve& c, const std::vector<SingularPointRecord>& sings) {
  AlexanderResult r;
  r.degree_case = c.degree;
  if (c.degree == 6) {
    int e = sigma_matrix(c, sings, 5).coker_dim;
    r.exponent = e;
    r.trivial = e == 0;
    r.delta = e == 0 ? "1" : "(t^2-t+1)^" + std::to_string(e);
    return r;
  }
  if (c.degree == 10) {
    for (int k : {7, 8, 9}) r.coker.push_back(sigma_matrix(c, sings, k).coker_dim);
    r.trivial = r.coker == std::vector<int>{0, 0, 0};
    r.delta = r.trivial ? "1" : "nontrivial";
    r.notes.push_back("the A4 ideal for k = 9 is taken as <u^2, v>, for k = 7, 8 as <u, v>");
    return r;
  }
  throw Error(ErrorKind::UnsupportedDegree, "Alexander polynomials are computed for degrees 6 and 10");
}

AlexanderResult alexander_polynomial(const Curve& c) {
  if (c.degree != 6 && c.degree != 10)
    throw Error(ErrorKind::UnsupportedDegree, "Alexander polynomials are computed for degrees 6 and 10");
  return alexander_polynomial(c, analyze_singularities(c));
}

}  // namespace zlab
