// Determinants of polynomial matrices over Q(sqrt D), D an integer.
//
// Rows are scaled to integral entries a + b sqrt D. Modulo a prime where
// D = r^2, the determinant is computed by evaluation and interpolation
// under both embeddings; the integral parts of each coefficient follow by
// CRT once the modulus exceeds twice a Hadamard-type bound.

#include "modp.hpp"
#include "zlab/linalg.hpp"

namespace zlab {
namespace {

using namespace modp;

struct IntEntry {
  std::vector<mpz_class> a, b;  // coefficients by degree
};

u64 det_mod(std::vector<std::vector<u64>> m, u64 p) {
  const std::size_t n = m.size();
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = p - det == p ? 0 : p - det;
    }
    det = mulm(det, m[c][c], p);
    u64 inv = invm(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      u64 f = mulm(m[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) m[r][k] = subm(m[r][k], mulm(f, m[c][k], p), p);
    }
  }
  return det;
}

// Coefficients (low to high) of the determinant modulo p under sqrt D -> r.
std::vector<u64> poly_det_mod(const std::vector<std::vector<IntEntry>>& E, int bound, u64 r, u64 p) {
  const std::size_t n = E.size();
  std::vector<std::vector<std::vector<u64>>> img(n, std::vector<std::vector<u64>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = E[i][j];
      auto& out = img[i][j];
      out.resize(e.a.size());
      for (std::size_t k = 0; k < e.a.size(); ++k)
        out[k] = addm(mpz_mod(e.a[k], p), mulm(mpz_mod(e.b[k], p), r, p), p);
    }
  std::vector<u64> xs, c;
  std::vector<std::vector<u64>> m(n, std::vector<u64>(n));
  for (int t = 0; t <= bound; ++t) {
    u64 x = static_cast<u64>(t);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        u64 v = 0;
        const auto& q = img[i][j];
        for (std::size_t k = q.size(); k-- > 0;) v = addm(mulm(v, x, p), q[k], p);
        m[i][j] = v;
      }
    xs.push_back(x);
    c.push_back(det_mod(m, p));
  }
  for (int j = 1; j <= bound; ++j)
    for (int i = bound; i >= j; --i) {
      auto ii = static_cast<std::size_t>(i);
      c[ii] = mulm(subm(c[ii], c[ii - 1], p), invm(subm(xs[ii], xs[ii - static_cast<std::size_t>(j)], p), p), p);
    }
  std::vector<u64> poly{c[static_cast<std::size_t>(bound)]};
  for (int i = bound - 1; i >= 0; --i) {
    // poly = poly * (t - x_i) + c_i
    u64 xi = xs[static_cast<std::size_t>(i)];
    std::vector<u64> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = addm(next[k + 1], poly[k], p);
      next[k] = subm(next[k], mulm(poly[k], xi, p), p);
    }
    next[0] = addm(next[0], c[static_cast<std::size_t>(i)], p);
    poly = std::move(next);
  }
  return poly;
}

mpz_class symmetric(const mpz_class& x, const mpz_class& m) {
  mpz_class h = m / 2;
  return x > h ? x - m : x;
}

}  // namespace

Univariate<FieldElem> determinant(Matrix<Univariate<FieldElem>> m) {
  using U = Univariate<FieldElem>;
  const int n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::Internal, "determinant of a non-square matrix");
  const FieldDescriptor& F = m.context();
  const bool quad = !F.is_rational_field();
  if (n <= 2 || (quad && F.radicand().get_den() != 1)) return determinant<U>(std::move(m));
  const mpz_class D = quad ? F.radicand().get_num() : mpz_class(0);
  mpz_class rootD;  // ceil(sqrt |D|)
  if (quad) {
    mpz_class absD = abs(D);
    mpz_sqrt(rootD.get_mpz_t(), absD.get_mpz_t());
    if (rootD * rootD < absD) ++rootD;
  }

  std::vector<std::vector<IntEntry>> E(static_cast<std::size_t>(n), std::vector<IntEntry>(static_cast<std::size_t>(n)));
  mpz_class scale = 1, H = 1;
  int bound = 0;
  for (int i = 0; i < n; ++i) {
    mpz_class L = 1;
    int rd = -1;
    for (int j = 0; j < n; ++j) {
      const U& e = m(i, j);
      rd = std::max(rd, e.degree());
      for (int k = 0; k <= e.degree(); ++k) {
        const FieldElem& c = e.coeff(k);
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.a().get_den_mpz_t());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.b().get_den_mpz_t());
      }
    }
    if (rd < 0) return U(F);
    bound += rd;
    scale *= L;
    mpz_class rowsum = 0;
    for (int j = 0; j < n; ++j) {
      const U& e = m(i, j);
      auto& out = E[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k <= e.degree(); ++k) {
        const FieldElem& c = e.coeff(k);
        mpz_class a = c.a().get_num() * (L / c.a().get_den());
        mpz_class b = c.b().get_num() * (L / c.b().get_den());
        rowsum += abs(a) + abs(b) * rootD;
        out.a.push_back(a);
        out.b.push_back(b);
      }
    }
    H *= rowsum;
  }
  // every coefficient's rational and sqrt parts are bounded by H
  const mpz_class need = 2 * H + 1;

  std::vector<mpz_class> ra(static_cast<std::size_t>(bound + 1), 0), rb = ra;
  mpz_class M = 1, cursor;
  while (M <= need) {
    u64 p = next_prime(cursor);
    u64 r = 0;
    if (quad) {
      u64 d = mpz_mod(D, p);
      auto s = sqrt_mod(d, p);
      if (!s) continue;
      r = *s;
    }
    auto g1 = poly_det_mod(E, bound, r, p);
    if (quad) {
      auto g2 = poly_det_mod(E, bound, p - r, p);
      u64 inv2 = invm(2, p), inv2r = invm(mulm(2, r, p), p);
      for (std::size_t k = 0; k < ra.size(); ++k) {
        crt(ra[k], M, mulm(addm(g1[k], g2[k], p), inv2, p), p);
        crt(rb[k], M, mulm(subm(g1[k], g2[k], p), inv2r, p), p);
      }
    } else {
      for (std::size_t k = 0; k < ra.size(); ++k) crt(ra[k], M, g1[k], p);
    }
    M *= to_mpz(p);
  }
  std::vector<FieldElem> coeffs;
  for (std::size_t k = 0; k < ra.size(); ++k) {
    Rational a(symmetric(ra[k], M), scale), b(symmetric(rb[k], M), scale);
    a.canonicalize();
    b.canonicalize();
    coeffs.push_back(quad ? FieldElem(a, b, F) : FieldElem(a, F));
  }
  return U(F, std::move(coeffs));
}

}  // namespace zlab
