#pragma once

// Table of local adjunction ideals I(P, k, d) in normal-form coordinates (u, v).
//
// A types: u runs along the maximal contact curve, v = 0 is that curve; the
// ideal is <v, u^j> and the quotient basis is 1, u, ..., u^(j-1).
// D and E types: u = 0 is the multiple line of the tangent cone, v is a
// coordinate along it; the ideal is <u, v^j> with basis 1, v, ..., v^(j-1).

#include <string>
#include <vector>

#include "zlab/singloc.hpp"

namespace zlab {

struct AdjunctionIdeal {
  AdeType ade;
  int k = 0;
  int d = 0;
  std::vector<std::string> generators;     // e.g. {"v", "u^2"}
  std::vector<std::string> quotient_basis;  // e.g. {"1", "u"}
  /// True when the quotient is read along the maximal contact curve.
  bool along_contact = true;

  int dimension() const { return static_cast<int>(quotient_basis.size()); }
};

/// Throws UnsupportedTriple outside the table.
AdjunctionIdeal adjunction_ideal(AdeType ade, int k, int d);

/// Rows of the map from the span of the given monomials (as sections of
/// O(degree)) to O_P / I at every point of the record's family: one row per
/// quotient basis element and conjugate point, entries over the base field.
/// A family that splits is reclassified part by part.
std::vector<std::vector<FieldElem>> quotient_conditions(const Curve& c, const SingularPointRecord& rec,
                                                        const AdjunctionIdeal& ideal,
                                                        const std::vector<Monomial>& monomials, int degree);

/// Where a rho value comes from.
enum class RhoLocus { inner_a, inner_e6, generic };

/// dim O_P / I(P, 5, 6).
int rho5(AdeType ade, RhoLocus locus = RhoLocus::generic);

}  // namespace zlab
