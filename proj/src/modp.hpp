#pragma once

// Word-size prime field helpers shared by the multimodular routines.

#include <cstdint>
#include <optional>

#include "zlab/qfield.hpp"

namespace zlab::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

inline u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 addm(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

inline u64 mpz_mod(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

inline std::optional<u64> reduce(const Rational& q, u64 p) {
  u64 d = mpz_mod(q.get_den(), p);
  if (d == 0) return std::nullopt;
  return mulm(mpz_mod(q.get_num(), p), invm(d, p), p);
}

// Tonelli-Shanks.
inline std::optional<u64> sqrt_mod(u64 a, u64 p) {
  if (a == 0) return std::nullopt;
  if (powm(a, (p - 1) / 2, p) != 1) return std::nullopt;
  u64 q = p - 1;
  int s = 0;
  while (!(q & 1)) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s), c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulm(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mulm(b, b, p);
    m = i;
    c = mulm(b, b, p);
    t = mulm(t, c, p);
    r = mulm(r, b, p);
  }
  return r;
}

inline void crt(mpz_class& x, const mpz_class& m, u64 r, u64 p) {
  // x' = x + m * ((r - x) / m mod p)
  u64 xm = mpz_mod(x, p), mm = mpz_mod(m, p);
  u64 k = mulm(subm(r, xm, p), invm(mm, p), p);
  mpz_class kk;
  mpz_import(kk.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &k);
  x += m * kk;
}

/// Primes in (2^61, 2^62), in increasing order.
inline u64 next_prime(mpz_class& cursor) {
  if (cursor < (mpz_class(1) << 61)) cursor = mpz_class(1) << 61;
  mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
  return cursor.get_ui();
}

inline mpz_class to_mpz(u64 v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
  return z;
}

}  // namespace zlab::modp
