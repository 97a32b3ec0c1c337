#pragma once

// Exact dense linear algebra on Eigen matrices over the library's scalar
// types. Pivoting picks the first nonzero entry (there is no rounding, so no
// numerical pivoting is needed). Rational inputs go through a fraction-free
// Bareiss elimination on cleared-denominator integer rows, which keeps the
// intermediate entries polynomially bounded.

#include <optional>
#include <utility>
#include <vector>

#include "skewrank/fields.hpp"

namespace skewrank {

namespace detail {

// Plain exact Gaussian elimination to row echelon form (in place).
// Returns the pivot columns.
template <class S>
std::vector<Eigen::Index> echelon_in_place(DenseMatrix<S>& m) {
  using FT = field_traits<S>;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!FT::is_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const S inv = FT::inverse(m(r, c));
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || FT::is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Clears denominators row by row and divides out the content, giving an
// integer matrix with the same row space.
inline std::vector<std::vector<BigInt>> integer_rows(const DenseMatrix<Rational>& m) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt lcm_den = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      lcm_den = boost::multiprecision::lcm(lcm_den, m(i, j).denominator());
    BigInt content = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      BigInt v = m(i, j).numerator() * (lcm_den / m(i, j).denominator());
      out[i][static_cast<std::size_t>(j)] = v;
      content = boost::multiprecision::gcd(content, v);
    }
    if (content > 1) {
      for (auto& v : out[i]) v /= content;
    }
  }
  return out;
}

// Bareiss fraction-free elimination to upper echelon. Returns pivot columns;
// rows beyond the returned count are zero.
inline std::vector<Eigen::Index> bareiss_echelon(std::vector<std::vector<BigInt>>& m,
                                                 Eigen::Index cols) {
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rows = static_cast<Eigen::Index>(m.size());
  BigInt prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) std::swap(m[piv], m[r]);
    const BigInt& pv = m[r][c];
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      // Every row below the pivot is updated, including those with a zero in
      // the pivot column: the scaling keeps later divisions by `prev` exact.
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m[i][j] = (pv * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = pv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class S>
Eigen::Index rank_of(DenseMatrix<S> m) {
  return static_cast<Eigen::Index>(detail::echelon_in_place(m).size());
}

inline Eigen::Index rank_of(const DenseMatrix<Rational>& m) {
  auto rows = detail::integer_rows(m);
  return static_cast<Eigen::Index>(detail::bareiss_echelon(rows, m.cols()).size());
}

// Nullspace basis, one column per free variable. The context is needed to
// materialise 0/1 entries for fields whose elements carry their field.
template <class S>
DenseMatrix<S> kernel_basis(DenseMatrix<S> m, const typename field_traits<S>::context_type& F) {
  using FT = field_traits<S>;
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots = detail::echelon_in_place(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const Eigen::Index nullity = cols - static_cast<Eigen::Index>(pivots.size());
  DenseMatrix<S> basis(cols, nullity);
  basis.setConstant(FT::zero(F));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = FT::one(F);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      // reduced echelon: row i has 1 at pivots[i]
      basis(pivots[i], k) = -m(static_cast<Eigen::Index>(i), f);
    }
    ++k;
  }
  return basis;
}

// Rational kernel via Bareiss; basis vectors are scaled to coprime integers.
inline DenseMatrix<Rational> kernel_basis(const DenseMatrix<Rational>& m, const RationalField&) {
  const Eigen::Index cols = m.cols();
  auto rows = detail::integer_rows(m);
  std::vector<Eigen::Index> pivots = detail::bareiss_echelon(rows, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const Eigen::Index rank = static_cast<Eigen::Index>(pivots.size());
  const Eigen::Index nullity = cols - rank;
  DenseMatrix<Rational> basis(cols, nullity);
  basis.setConstant(Rational(0));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (Eigen::Index i = rank - 1; i >= 0; --i) {
      // solve row i for its pivot variable by back-substitution
      Rational acc(0);
      for (Eigen::Index j = pivots[static_cast<std::size_t>(i)] + 1; j < cols; ++j) {
        if (!v[static_cast<std::size_t>(j)].is_zero() && rows[i][j] != 0)
          acc += Rational(rows[i][j]) * v[static_cast<std::size_t>(j)];
      }
      v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] =
          -acc / Rational(rows[i][pivots[static_cast<std::size_t>(i)]]);
    }
    // scale to coprime integers
    BigInt lcm_den = 1;
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, x.denominator());
    BigInt content = 0;
    std::vector<BigInt> iv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      iv[i] = v[i].numerator() * (lcm_den / v[i].denominator());
      content = boost::multiprecision::gcd(content, iv[i]);
    }
    if (content == 0) content = 1;
    for (Eigen::Index i = 0; i < cols; ++i)
      basis(i, k) = Rational(iv[static_cast<std::size_t>(i)] / content);
    ++k;
  }
  return basis;
}

template <class S>
bool is_invertible(const DenseMatrix<S>& m) {
  return m.rows() == m.cols() && rank_of(m) == m.rows();
}

// Inverse by [M | I] reduction; std::nullopt when singular.
template <class S>
std::optional<DenseMatrix<S>> inverse_of(const DenseMatrix<S>& m,
                                         const typename field_traits<S>::context_type& F) {
  using FT = field_traits<S>;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  DenseMatrix<S> aug(n, 2 * n);
  aug.setConstant(FT::zero(F));
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = FT::one(F);
  std::vector<Eigen::Index> pivots = detail::echelon_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n)
    return std::nullopt;
  return DenseMatrix<S>(aug.rightCols(n));
}

template <class S>
S determinant_of(DenseMatrix<S> m, const typename field_traits<S>::context_type& F) {
  using FT = field_traits<S>;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  S det = FT::one(F);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i) {
      if (!FT::is_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return FT::zero(F);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    const S inv = FT::inverse(m(c, c));
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (FT::is_zero(m(i, c))) continue;
      const S f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

}  // namespace skewrank
