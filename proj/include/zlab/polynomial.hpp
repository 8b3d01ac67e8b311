#pragma once

// Univariate and bivariate polynomials over an exact coefficient ring K.
//
// K provides a Context (the field descriptor or algebra handle that every
// coefficient shares), K::zero(ctx), K::one(ctx), K::from_rational(ctx, q),
// ring operators, is_zero() (semantic; may raise SplitNeeded for algebra
// elements) and is_trivially_zero() (representation is zero).

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zlab/error.hpp"
#include "zlab/qfield.hpp"

namespace zlab {

enum class Var { x, y };

inline Var other(Var v) { return v == Var::x ? Var::y : Var::x; }

template <class K>
class Univariate {
 public:
  using Scalar = K;
  using Context = typename K::Context;

  Univariate() = default;
  explicit Univariate(Context ctx) : ctx_(std::move(ctx)) {}
  Univariate(Context ctx, std::vector<K> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

  static Univariate zero(const Context& ctx) { return Univariate(ctx); }
  static Univariate one(const Context& ctx) { return constant(ctx, K::one(ctx)); }
  static Univariate constant(const Context& ctx, const K& c) { return Univariate(ctx, {c}); }
  static Univariate monomial(const Context& ctx, const K& c, int e) {
    std::vector<K> v(static_cast<std::size_t>(e) + 1, K::zero(ctx));
    v.back() = c;
    return Univariate(ctx, std::move(v));
  }
  static Univariate variable(const Context& ctx) { return monomial(ctx, K::one(ctx), 1); }

  const Context& context() const { return ctx_; }
  const std::vector<K>& coefficients() const { return c_; }

  /// Degree with semantically zero leading coefficients dropped; -1 for 0.
  int degree() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
      if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
  }
  bool is_zero() const { return degree() < 0; }
  bool is_trivially_zero() const { return c_.empty(); }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K::zero(ctx_);
    return c_[static_cast<std::size_t>(i)];
  }
  K lc() const {
    int d = degree();
    return d < 0 ? K::zero(ctx_) : c_[static_cast<std::size_t>(d)];
  }

  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  K evaluate(const K& t) const {
    K r = K::zero(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  Univariate derivative() const {
    std::vector<K> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * K::from_rational(ctx_, Rational(static_cast<long>(i))));
    return Univariate(ctx_, std::move(d));
  }

  Univariate operator-() const {
    Univariate r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Univariate& operator+=(const Univariate& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Univariate& operator-=(const Univariate& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Univariate operator+(Univariate a, const Univariate& b) { return a += b; }
  friend Univariate operator-(Univariate a, const Univariate& b) { return a -= b; }
  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.c_.empty() || b.c_.empty()) return Univariate(a.ctx_);
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_trivially_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Univariate(a.ctx_, std::move(r));
  }
  friend Univariate operator*(const K& s, Univariate a) {
    for (auto& c : a.c_) c = s * c;
    a.trim();
    return a;
  }

  /// Division with remainder; the leading coefficient of d must be a unit.
  std::pair<Univariate, Univariate> divmod(const Univariate& d) const {
    int dd = d.degree();
    if (dd < 0) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    K inv = K::one(ctx_) / d.c_[static_cast<std::size_t>(dd)];
    std::vector<K> rem = c_;
    int dr = degree();
    if (dr < dd) return {Univariate(ctx_), Univariate(ctx_, rem)};
    std::vector<K> q(static_cast<std::size_t>(dr - dd) + 1, K::zero(ctx_));
    for (int k = dr; k >= dd; --k) {
      const K& top = rem[static_cast<std::size_t>(k)];
      if (top.is_trivially_zero()) continue;
      K f = top * inv;
      q[static_cast<std::size_t>(k - dd)] = f;
      for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= f * d.c_[static_cast<std::size_t>(i)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Univariate(ctx_, std::move(q)), Univariate(ctx_, std::move(rem))};
  }
  Univariate operator%(const Univariate& d) const { return divmod(d).second; }
  Univariate operator/(const Univariate& d) const { return divmod(d).first; }

  Univariate monic() const {
    int d = degree();
    if (d < 0) return *this;
    return (K::one(ctx_) / c_[static_cast<std::size_t>(d)]) * truncated(d + 1);
  }

  /// Keeps the coefficients of degree < n.
  Univariate truncated(int n) const {
    std::vector<K> v(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(c_.size())));
    return Univariate(ctx_, std::move(v));
  }

  template <class Fn>
  auto map(Fn&& fn, const typename std::invoke_result_t<Fn, const K&>::Context& ctx) const {
    using L = std::invoke_result_t<Fn, const K&>;
    std::vector<L> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(fn(c));
    return Univariate<L>(ctx, std::move(v));
  }

  std::string to_string(const std::string& var = "t") const {
    std::string s;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
      const K& c = c_[static_cast<std::size_t>(i)];
      if (c.is_trivially_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const Univariate& a, const Univariate& b) { return (a - b).is_zero(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_trivially_zero()) c_.pop_back();
  }

  Context ctx_{};
  std::vector<K> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <class K>
Univariate<K> gcd(Univariate<K> a, Univariate<K> b) {
  while (!b.is_zero()) {
    Univariate<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic gcd over Q(sqrt D): modular images, CRT and rational reconstruction,
/// checked by exact division. Preferred over the template by overload resolution.
Univariate<FieldElem> gcd(const Univariate<FieldElem>& a, const Univariate<FieldElem>& b);

/// Returns (g, s) with g = gcd(a, m) monic and s*a = g mod m.
template <class K>
std::pair<Univariate<K>, Univariate<K>> gcd_with_cofactor(const Univariate<K>& a, const Univariate<K>& m) {
  const auto& ctx = m.context();
  Univariate<K> r0 = m, r1 = a;
  Univariate<K> s0(ctx), s1 = Univariate<K>::constant(ctx, K::one(ctx));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Univariate<K> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  K inv = K::one(ctx) / r0.lc();
  return {inv * r0, inv * s0};
}

template <class K>
Univariate<K> pow(Univariate<K> p, unsigned e) {
  auto r = Univariate<K>::constant(p.context(), K::one(p.context()));
  while (e) {
    if (e & 1u) r = r * p;
    e >>= 1u;
    if (e) p = p * p;
  }
  return r;
}

/// P / gcd(P, P'), monic. Characteristic zero.
template <class K>
Univariate<K> squarefree_part(const Univariate<K>& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

// ---------------------------------------------------------------------------

struct Monomial {
  int i = 0;  // exponent of x
  int j = 0;  // exponent of y
  int degree() const { return i + j; }
  auto operator<=>(const Monomial&) const = default;
};

/// Graded lexicographic comparison with x > y: true if a comes before b.
inline bool graded_lex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.i > b.i;
}

template <class K>
class Bivariate {
 public:
  using Scalar = K;
  using Context = typename K::Context;
  using Terms = std::map<Monomial, K>;

  Bivariate() = default;
  explicit Bivariate(Context ctx) : ctx_(std::move(ctx)) {}

  static Bivariate zero(const Context& ctx) { return Bivariate(ctx); }
  static Bivariate one(const Context& ctx) { return constant(ctx, K::one(ctx)); }
  static Bivariate constant(const Context& ctx, const K& c) { return term(ctx, c, 0, 0); }
  static Bivariate term(const Context& ctx, const K& c, int i, int j) {
    Bivariate p(ctx);
    if (!c.is_trivially_zero()) p.t_.emplace(Monomial{i, j}, c);
    return p;
  }
  static Bivariate x(const Context& ctx) { return term(ctx, K::one(ctx), 1, 0); }
  static Bivariate y(const Context& ctx) { return term(ctx, K::one(ctx), 0, 1); }
  static Bivariate variable(const Context& ctx, Var v) { return v == Var::x ? x(ctx) : y(ctx); }

  const Context& context() const { return ctx_; }
  const Terms& terms() const { return t_; }

  bool is_trivially_zero() const { return t_.empty(); }
  bool is_zero() const {
    for (const auto& [m, c] : t_)
      if (!c.is_zero()) return false;
    return true;
  }

  K coeff(int i, int j) const {
    auto it = t_.find(Monomial{i, j});
    return it == t_.end() ? K::zero(ctx_) : it->second;
  }
  void set_coeff(int i, int j, const K& c) {
    if (c.is_trivially_zero())
      t_.erase(Monomial{i, j});
    else
      t_[Monomial{i, j}] = c;
  }

  /// Total degree (semantic); -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_)
      if (m.degree() > d && !c.is_zero()) d = m.degree();
    return d;
  }
  int degree_in(Var v) const {
    int d = -1;
    for (const auto& [m, c] : t_) {
      int e = v == Var::x ? m.i : m.j;
      if (e > d && !c.is_zero()) d = e;
    }
    return d;
  }
  /// Lowest total degree of a nonzero term (the local multiplicity at the origin).
  int order() const {
    int d = -1;
    for (const auto& [m, c] : t_)
      if ((d < 0 || m.degree() < d) && !c.is_zero()) d = m.degree();
    return d;
  }

  Bivariate homogeneous_part(int k) const {
    Bivariate r(ctx_);
    for (const auto& [m, c] : t_)
      if (m.degree() == k) r.t_.emplace(m, c);
    return r;
  }

  /// Coefficient of v^k as a univariate polynomial in the other variable.
  Univariate<K> coefficient_in(Var v, int k) const {
    std::vector<K> out;
    for (const auto& [m, c] : t_) {
      int e = v == Var::x ? m.i : m.j;
      if (e != k) continue;
      int o = v == Var::x ? m.j : m.i;
      if (static_cast<int>(out.size()) <= o) out.resize(static_cast<std::size_t>(o) + 1, K::zero(ctx_));
      out[static_cast<std::size_t>(o)] += c;
    }
    return Univariate<K>(ctx_, std::move(out));
  }

  /// F restricted to v = value, as a polynomial in the other variable.
  Univariate<K> restrict(Var v, const K& value) const {
    std::vector<K> out;
    for (const auto& [m, c] : t_) {
      int e = v == Var::x ? m.i : m.j;
      int o = v == Var::x ? m.j : m.i;
      if (static_cast<int>(out.size()) <= o) out.resize(static_cast<std::size_t>(o) + 1, K::zero(ctx_));
      K term = c;
      for (int k = 0; k < e; ++k) term *= value;
      out[static_cast<std::size_t>(o)] += term;
    }
    return Univariate<K>(ctx_, std::move(out));
  }

  K evaluate(const K& x0, const K& y0) const {
    K r = K::zero(ctx_);
    // Horner in y over Horner in x keeps the operation count small.
    int dy = -1;
    for (const auto& [m, c] : t_) dy = std::max(dy, m.j);
    for (int j = dy; j >= 0; --j) {
      K row = K::zero(ctx_);
      int dx = -1;
      for (const auto& [m, c] : t_)
        if (m.j == j) dx = std::max(dx, m.i);
      for (int i = dx; i >= 0; --i) {
        row *= x0;
        auto it = t_.find(Monomial{i, j});
        if (it != t_.end()) row += it->second;
      }
      r = r * y0 + row;
    }
    return r;
  }

  Bivariate operator-() const {
    Bivariate r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  Bivariate& operator+=(const Bivariate& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Bivariate& operator-=(const Bivariate& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
  friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }
  friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
    Bivariate r(a.ctx_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(Monomial{ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return r;
  }
  Bivariate& operator*=(const Bivariate& o) { return *this = *this * o; }
  friend Bivariate operator*(const K& s, const Bivariate& a) {
    Bivariate r(a.ctx_);
    for (const auto& [m, c] : a.t_) r.add_term(m, s * c);
    return r;
  }

  /// Multiplies by x^i y^j.
  Bivariate shifted(int i, int j) const {
    Bivariate r(ctx_);
    for (const auto& [m, c] : t_) r.t_.emplace(Monomial{m.i + i, m.j + j}, c);
    return r;
  }

  /// Exact division by x^i y^j; every term must be divisible.
  Bivariate unshifted(int i, int j) const {
    Bivariate r(ctx_);
    for (const auto& [m, c] : t_) {
      if (m.i < i || m.j < j) throw Error(ErrorKind::Internal, "monomial division is not exact");
      r.t_.emplace(Monomial{m.i - i, m.j - j}, c);
    }
    return r;
  }

  /// Drops terms of total degree >= n.
  Bivariate truncated(int n) const {
    Bivariate r(ctx_);
    for (const auto& [m, c] : t_)
      if (m.degree() < n) r.t_.emplace(m, c);
    return r;
  }

  template <class Fn>
  auto map(Fn&& fn, const typename std::invoke_result_t<Fn, const K&>::Context& ctx) const {
    using L = std::invoke_result_t<Fn, const K&>;
    Bivariate<L> r(ctx);
    for (const auto& [m, c] : t_) r.set_coeff(m.i, m.j, fn(c));
    return r;
  }

  /// Terms in graded lexicographic order (x > y), highest first.
  std::vector<std::pair<Monomial, K>> sorted_terms() const {
    std::vector<std::pair<Monomial, K>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return graded_lex_greater(a.first, b.first); });
    return v;
  }

  friend bool operator==(const Bivariate& a, const Bivariate& b) { return (a - b).is_zero(); }

 private:
  void add_term(const Monomial& m, const K& c) {
    if (c.is_trivially_zero()) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_trivially_zero()) t_.erase(it);
    }
  }

  Context ctx_{};
  Terms t_;
};

template <class K>
Bivariate<K> pow(Bivariate<K> p, unsigned e) {
  auto r = Bivariate<K>::constant(p.context(), K::one(p.context()));
  while (e) {
    if (e & 1u) r = r * p;
    e >>= 1u;
    if (e) p = p * p;
  }
  return r;
}

template <class K>
Bivariate<K> partial(const Bivariate<K>& f, Var v) {
  Bivariate<K> r(f.context());
  for (const auto& [m, c] : f.terms()) {
    int e = v == Var::x ? m.i : m.j;
    if (e == 0) continue;
    K k = c * K::from_rational(f.context(), Rational(e));
    if (v == Var::x)
      r.set_coeff(m.i - 1, m.j, r.coeff(m.i - 1, m.j) + k);
    else
      r.set_coeff(m.i, m.j - 1, r.coeff(m.i, m.j - 1) + k);
  }
  return r;
}

/// F with the variable v replaced by S (Horner scheme in v).
template <class K>
Bivariate<K> substitute(const Bivariate<K>& f, Var v, const Bivariate<K>& s) {
  const auto& ctx = f.context();
  int d = f.degree_in(v);
  if (d < 0) return Bivariate<K>(ctx);
  std::vector<Bivariate<K>> rows(static_cast<std::size_t>(d) + 1, Bivariate<K>(ctx));
  for (const auto& [m, c] : f.terms()) {
    int e = v == Var::x ? m.i : m.j;
    if (e > d) continue;  // semantically zero coefficient
    rows[static_cast<std::size_t>(e)] += v == Var::x ? Bivariate<K>::term(ctx, c, 0, m.j)
                                                     : Bivariate<K>::term(ctx, c, m.i, 0);
  }
  Bivariate<K> r = rows.back();
  for (int e = d - 1; e >= 0; --e) r = r * s + rows[static_cast<std::size_t>(e)];
  return r;
}

/// Simultaneous substitution x -> X, y -> Y.
template <class K>
Bivariate<K> compose(const Bivariate<K>& f, const Bivariate<K>& X, const Bivariate<K>& Y) {
  const auto& ctx = f.context();
  int dx = f.degree_in(Var::x), dy = f.degree_in(Var::y);
  std::vector<Bivariate<K>> xp{Bivariate<K>::constant(ctx, K::one(ctx))}, yp{Bivariate<K>::constant(ctx, K::one(ctx))};
  for (int k = 0; k < dx; ++k) xp.push_back(xp.back() * X);
  for (int k = 0; k < dy; ++k) yp.push_back(yp.back() * Y);
  Bivariate<K> r(ctx);
  for (const auto& [m, c] : f.terms()) {
    if (m.i > dx || m.j > dy) continue;
    r += c * (xp[static_cast<std::size_t>(m.i)] * yp[static_cast<std::size_t>(m.j)]);
  }
  return r;
}

/// F(x + px, y + py).
template <class K>
Bivariate<K> translate(const Bivariate<K>& f, const K& px, const K& py) {
  const auto& ctx = f.context();
  auto X = Bivariate<K>::x(ctx) + Bivariate<K>::constant(ctx, px);
  auto Y = Bivariate<K>::y(ctx) + Bivariate<K>::constant(ctx, py);
  return compose(f, X, Y);
}

}  // namespace zlab
