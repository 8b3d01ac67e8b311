// Univariate gcd over Q(sqrt D) through prime fields.
//
// For a prime p where D is a nonzero square r^2, the two embeddings
// sqrt D -> r and sqrt D -> -r give monic gcds G+ and G- over F_p; the
// coefficient a + b sqrt D of the true gcd reduces to (G+ + G-)/2 and
// (G+ - G-)/(2r). Residues are combined by CRT, lifted by rational
// reconstruction and the candidate is accepted once it divides both inputs.

#include <climits>
#include <cstdint>
#include <optional>

#include "modp.hpp"
#include "zlab/polynomial.hpp"

namespace zlab {
namespace {

using namespace modp;
using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly rem(ModPoly a, const ModPoly& b, u64 p) {
  u64 inv = invm(b.back(), p);
  std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    u64 f = mulm(a.back(), inv, p);
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = subm(a[shift + i], mulm(f, b[i], p), p);
    a.pop_back();
    trim(a);
  }
  return a;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  u64 inv = invm(a.back(), p);
  for (auto& c : a) c = mulm(c, inv, p);
  return a;
}

// Image under sqrt D -> r; nullopt if a denominator vanishes or the degree drops.
std::optional<ModPoly> image(const Univariate<FieldElem>& f, u64 r, u64 p) {
  int d = f.degree();
  ModPoly out(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    const FieldElem& c = f.coeff(i);
    auto a = reduce(c.a(), p);
    if (!a) return std::nullopt;
    u64 v = *a;
    if (sgn(c.b()) != 0) {
      auto b = reduce(c.b(), p);
      if (!b) return std::nullopt;
      v = addm(v, mulm(*b, r, p), p);
    }
    out[static_cast<std::size_t>(i)] = v;
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

// r/s with |r|, |s| <= sqrt(m/2) and r = s*u mod m.
std::optional<Rational> reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, s1);
  q.canonicalize();
  return q;
}

bool divides(const Univariate<FieldElem>& g, const Univariate<FieldElem>& f) {
  return f.divmod(g).second.is_zero();
}

}  // namespace

Univariate<FieldElem> gcd(const Univariate<FieldElem>& a, const Univariate<FieldElem>& b) {
  const FieldDescriptor& F = a.context();
  if (b.is_zero()) return a.monic();
  if (a.is_zero()) return b.monic();
  if (std::min(a.degree(), b.degree()) <= 2) {
    Univariate<FieldElem> x = a, y = b;
    while (!y.is_zero()) {
      auto r = x % y;
      x = std::move(y);
      y = std::move(r);
    }
    return x.monic();
  }
  const bool quad = !F.is_rational_field();
  const Rational D = quad ? F.radicand() : Rational(0);

  int best = INT_MAX;
  mpz_class M = 1;
  std::vector<mpz_class> ra, rb;  // residues of rational and sqrt parts
  std::optional<Univariate<FieldElem>> last;
  int primes_since_check = 0, check_every = 1;

  mpz_class prime = mpz_class(1) << 61;
  for (int iter = 0; iter < 100000; ++iter) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    u64 p = prime.get_ui();
    u64 r = 0;
    if (quad) {
      auto d = reduce(D, p);
      if (!d) continue;
      auto s = sqrt_mod(*d, p);
      if (!s) continue;
      r = *s;
    }
    auto a1 = image(a, r, p), b1 = image(b, r, p);
    if (!a1 || !b1) continue;
    ModPoly g1 = gcd_mod(*a1, *b1, p), g2;
    if (quad) {
      auto a2 = image(a, p - r, p), b2 = image(b, p - r, p);
      if (!a2 || !b2) continue;
      g2 = gcd_mod(*a2, *b2, p);
      if (g2.size() != g1.size()) continue;
    }
    int d = static_cast<int>(g1.size()) - 1;
    if (d == 0) return Univariate<FieldElem>::constant(F, FieldElem::one(F));
    if (d > best) continue;
    if (d < best) {
      best = d;
      M = 1;
      ra.assign(static_cast<std::size_t>(d + 1), 0);
      rb.assign(static_cast<std::size_t>(d + 1), 0);
      last.reset();
      primes_since_check = 0;
      check_every = 1;
    }
    u64 inv2 = invm(2, p), inv2r = quad ? invm(mulm(2, r, p), p) : 0;
    for (std::size_t i = 0; i < g1.size(); ++i) {
      if (quad) {
        crt(ra[i], M, mulm(addm(g1[i], g2[i], p), inv2, p), p);
        crt(rb[i], M, mulm(subm(g1[i], g2[i], p), inv2r, p), p);
      } else {
        crt(ra[i], M, g1[i], p);
      }
    }
    M *= prime;
    if (++primes_since_check < check_every) continue;
    primes_since_check = 0;
    check_every = std::min(check_every * 2, 16);

    std::vector<FieldElem> coeffs;
    bool ok = true;
    for (std::size_t i = 0; i < ra.size() && ok; ++i) {
      auto x = reconstruct(ra[i], M);
      std::optional<Rational> y = quad ? reconstruct(rb[i], M) : std::optional<Rational>(Rational(0));
      if (!x || !y) {
        ok = false;
        break;
      }
      coeffs.push_back(quad ? FieldElem(*x, *y, F) : FieldElem(*x, F));
    }
    if (!ok) continue;
    Univariate<FieldElem> cand(F, std::move(coeffs));
    // accept once two consecutive reconstructions agree and the candidate divides both
    if (last && *last == cand && divides(cand, a) && divides(cand, b)) return cand;
    last = std::move(cand);
  }
  throw Error(ErrorKind::Internal, "modular gcd did not converge");
}

}  // namespace zlab
