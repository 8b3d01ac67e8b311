#pragma once

// Dense exact matrices: row reduction over fields, fraction-free determinants
// over integral domains.

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "zlab/error.hpp"
#include "zlab/polynomial.hpp"

namespace zlab {

template <class K>
class Matrix {
 public:
  using Context = typename K::Context;

  Matrix() = default;
  Matrix(Context ctx, int rows, int cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, K::zero(ctx_)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Context& context() const { return ctx_; }

  K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  void append_row(const std::vector<K>& row) {
    if (static_cast<int>(row.size()) != cols_) throw Error(ErrorKind::Internal, "row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }
  std::vector<K> row(int i) const {
    return std::vector<K>(a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                          a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
  }

  Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix m(ctx_, static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
    return m;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    std::vector<K> out(static_cast<std::size_t>(rows_), K::zero(ctx_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
  }

 private:
  Context ctx_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<K> a_;
};

/// Reduced row echelon form in place over a field; returns pivot columns.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    K inv = K::one(m.context()) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_trivially_zero()) continue;
      K f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank(Matrix<K> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of the right kernel, one vector per free column.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<K>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<K> v(static_cast<std::size_t>(m.cols()), K::zero(m.context()));
    v[static_cast<std::size_t>(f)] = K::one(m.context());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of A x = b, if one exists.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
  Matrix<K> aug(a.context(), a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<K> x(static_cast<std::size_t>(a.cols()), K::zero(a.context()));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = aug(static_cast<int>(r), a.cols());
  return x;
}

/// Exact quotient in an integral domain; the division must be exact.
inline FieldElem exact_quotient(const FieldElem& a, const FieldElem& b) { return a / b; }

template <class K>
Univariate<K> exact_quotient(const Univariate<K>& a, const Univariate<K>& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return q;
}

/// Bareiss fraction-free determinant over an integral domain.
template <class K>
K determinant(Matrix<K> m) {
  const int n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::Internal, "determinant of a non-square matrix");
  const auto& ctx = m.context();
  if (n == 0) return K::one(ctx);
  K prev = K::one(ctx);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return K::zero(ctx);
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = K::zero(ctx);
    }
    prev = m(k, k);
  }
  K d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// Determinant of a polynomial matrix over Q(sqrt D) by evaluation at
/// integer points and interpolation. Preferred over the Bareiss template.
Univariate<FieldElem> determinant(Matrix<Univariate<FieldElem>> m);

/// Division-free determinant by Laplace expansion over column subsets.
/// Works over any commutative ring; cost O(2^n n).
template <class K>
K determinant_expansion(const Matrix<K>& m) {
  const int n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::Internal, "determinant of a non-square matrix");
  if (n > 20) throw Error(ErrorKind::Internal, "matrix too large for expansion");
  const auto& ctx = m.context();
  // minors[S] = det of rows 0..|S|-1 and columns S.
  std::unordered_map<std::uint32_t, K> minors;
  minors.emplace(0u, K::one(ctx));
  std::vector<std::uint32_t> layer{0u};
  for (int r = 0; r < n; ++r) {
    std::unordered_map<std::uint32_t, K> next;
    for (std::uint32_t s : layer) {
      const K& base = minors.at(s);
      if (base.is_trivially_zero()) continue;
      for (int c = 0; c < n; ++c) {
        if (s & (1u << c)) continue;
        if (m(r, c).is_trivially_zero()) continue;
        // sign from the number of chosen columns after c
        int above = std::popcount(s >> (c + 1));
        K term = m(r, c) * base;
        if (above % 2) term = -term;
        auto t = s | (1u << c);
        auto it = next.find(t);
        if (it == next.end())
          next.emplace(t, term);
        else
          it->second += term;
      }
    }
    minors = std::move(next);
    layer.clear();
    for (const auto& [s, v] : minors) layer.push_back(s);
  }
  auto it = minors.find((n == 32 ? 0u : (1u << n) - 1u));
  return it == minors.end() ? K::zero(ctx) : it->second;
}

}  // namespace zlab
