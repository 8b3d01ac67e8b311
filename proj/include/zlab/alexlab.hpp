#pragma once

// Alexander polynomials from the cokernels of the maps sigma_k sending
// polynomials of degree k - 3 to the adjunction quotients at the singular
// points. Sextics get (t^2 - t + 1)^e with e = dim coker sigma_5; for degree
// 10 only triviality is decided, from sigma_7, sigma_8 and sigma_9.

#include <optional>
#include <string>
#include <vector>

#include "zlab/adjunction.hpp"
#include "zlab/linalg.hpp"

namespace zlab {

struct SigmaMap {
  int k = 0;
  int d = 0;
  std::vector<Monomial> columns;        // monomials of degree <= k - 3
  std::vector<std::string> row_labels;  // "A2 at (0, 1) [1]" style
  Matrix<FieldElem> matrix;
  int rank = 0;
  int coker_dim = 0;  // rows - rank
};

/// Throws IncompleteLocus / NotAllSimple from classification, UnsupportedDegree
/// for degrees other than 6 and 10, UnsupportedTriple for types off the table.
SigmaMap sigma_matrix(const Curve& c, int k);
SigmaMap sigma_matrix(const Curve& c, const std::vector<SingularPointRecord>& sings, int k);

struct AlexanderResult {
  int degree_case = 6;
  std::optional<int> exponent;  // degree 6
  std::vector<int> coker;       // degree 10: dims for k = 7, 8, 9
  bool trivial = true;
  std::string delta;  // "1", "(t^2-t+1)^e" or "nontrivial"
  std::vector<std::string> notes;
};

AlexanderResult alexander_polynomial(const Curve& c);
AlexanderResult alexander_polynomial(const Curve& c, const std::vector<SingularPointRecord>& sings);

/// Kernel vectors of sigma in the column order of the map.
std::vector<std::vector<FieldElem>> sigma_kernel(const SigmaMap& s);

}  // namespace zlab
