#pragma once

#include <cstdlib>
#include <map>
#include <random>

#include "zlab/linalg.hpp"
#include "zlab/polyring.hpp"

namespace zt {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("ZLAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240601ULL;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

inline zlab::Rational small_rational(int range = 9, int den = 5) {
  std::uniform_int_distribution<int> n(-range, range), d(1, den);
  zlab::Rational q(n(rng()), d(rng()));
  q.canonicalize();
  return q;
}

inline zlab::FieldElem random_elem(const zlab::FieldDescriptor& f, int range = 9) {
  if (f.is_rational_field()) return zlab::FieldElem(small_rational(range), f);
  return zlab::FieldElem(small_rational(range), small_rational(range), f);
}

inline zlab::FieldElem nonzero_elem(const zlab::FieldDescriptor& f) {
  for (;;) {
    auto e = random_elem(f);
    if (!e.is_zero()) return e;
  }
}

/// Random polynomial of total degree <= d with about the given density.
inline zlab::BiPoly random_poly(const zlab::FieldDescriptor& f, int d, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  zlab::BiPoly p(f);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j)
      if (keep(rng())) p.set_coeff(i, j, random_elem(f, 5));
  return p;
}

inline zlab::AffineMap random_affine(const zlab::FieldDescriptor& f) {
  for (;;) {
    zlab::AffineMap m{random_elem(f, 3), random_elem(f, 3), random_elem(f, 3),
                      random_elem(f, 3), random_elem(f, 3), random_elem(f, 3)};
    if (!m.determinant().is_zero()) return m;
  }
}

// dim_Q Q[x,y] / (f, g, m^N) by linear algebra on monomials of degree < N.
inline int truncated_quotient_dim(const zlab::BiPoly& f, const zlab::BiPoly& g, int N) {
  std::vector<zlab::Monomial> mons;
  for (int d = 0; d < N; ++d)
    for (int i = d; i >= 0; --i) mons.push_back({i, d - i});
  std::map<zlab::Monomial, int> col;
  for (std::size_t k = 0; k < mons.size(); ++k) col[mons[k]] = static_cast<int>(k);
  zlab::Matrix<zlab::FieldElem> rows(f.context(), 0, static_cast<int>(mons.size()));
  for (const zlab::BiPoly* h : {&f, &g})
    for (const auto& m : mons) {
      std::vector<zlab::FieldElem> r(mons.size(), zlab::FieldElem::zero(f.context()));
      for (const auto& [t, c] : h->terms()) {
        zlab::Monomial s{t.i + m.i, t.j + m.j};
        if (s.degree() < N) r[static_cast<std::size_t>(col[s])] = c;
      }
      rows.append_row(r);
    }
  return static_cast<int>(mons.size()) - rank(rows);
}

}  // namespace zt
