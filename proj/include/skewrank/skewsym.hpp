#pragma once

// Skew-symmetrization: given a square pencil B of linear forms, find an
// invertible scalar matrix Delta with Delta*B skew. The solutions of the
// linear system Delta*B_i + B_i^T*Delta^T = 0 form a vector space; a random
// element of it is invertible whenever any invertible element exists, so a
// few draws settle the generic case and a symbolic determinant test settles
// small solution spaces deterministically.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "skewrank/linalg.hpp"
#include "skewrank/linear_matrix.hpp"
#include "skewrank/multipoly.hpp"
#include "skewrank/random.hpp"

namespace skewrank {

// det of a matrix of linear forms as a polynomial, by first-row expansion
// memoized on column subsets.
template <class S>
MultiPoly<S> determinant_poly(const LinearMatrix<S>& A) {
  if (A.n > 20) throw TooLarge("symbolic determinant limited to n <= 20");
  const std::size_t nv = static_cast<std::size_t>(A.d);
  std::vector<MultiPoly<S>> entries(static_cast<std::size_t>(A.n * A.n));
  for (Eigen::Index i = 0; i < A.n; ++i)
    for (Eigen::Index j = 0; j < A.n; ++j)
      entries[static_cast<std::size_t>(i * A.n + j)] = A.entry_poly(i, j);

  std::unordered_map<std::uint32_t, MultiPoly<S>> memo;
  auto det = [&](auto&& self, std::uint32_t mask) -> const MultiPoly<S>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MultiPoly<S> acc(nv);
    if (mask == 0) {
      acc = MultiPoly<S>::constant(nv, field_traits<S>::one(A.field));
    } else {
      int popcount = 0;
      for (Eigen::Index i = 0; i < A.n; ++i)
        if (mask >> i & 1u) ++popcount;
      const Eigen::Index row = A.n - popcount;
      int t = 0;
      for (Eigen::Index j = 0; j < A.n; ++j) {
        if (!(mask >> j & 1u)) continue;
        const MultiPoly<S>& entry = entries[static_cast<std::size_t>(row * A.n + j)];
        if (!entry.is_zero()) {
          const MultiPoly<S>& sub = self(self, mask & ~(1u << j));
          if (!sub.is_zero()) {
            MultiPoly<S> term = entry * sub;
            acc = (t % 2 == 0) ? acc + term : acc - term;
          }
        }
        ++t;
      }
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  return det(det, (1u << A.n) - 1u);
}

template <class S>
struct Skewifier {
  DenseMatrix<S> delta;      // invertible, delta * B is skew
  LinearMatrix<S> result;    // delta * B, coefficient-wise
  Eigen::Index solution_dim = 0;
};

namespace detail {

template <class S>
LinearMatrix<S> left_multiply(const DenseMatrix<S>& delta, const LinearMatrix<S>& B) {
  std::vector<DenseMatrix<S>> cs;
  cs.reserve(B.coeffs.size());
  for (const auto& m : B.coeffs) cs.push_back(delta * m);
  return LinearMatrix<S>(B.field, B.n, std::move(cs));
}

template <class S>
DenseMatrix<S> combine_columns(const DenseMatrix<S>& ker, const std::vector<S>& lambda,
                               Eigen::Index n, const typename field_traits<S>::context_type& F) {
  using FT = field_traits<S>;
  DenseMatrix<S> delta(n, n);
  delta.setConstant(FT::zero(F));
  for (Eigen::Index c = 0; c < ker.cols(); ++c) {
    if (FT::is_zero(lambda[static_cast<std::size_t>(c)])) continue;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        delta(i, j) = delta(i, j) + lambda[static_cast<std::size_t>(c)] * ker(i * n + j, c);
  }
  return delta;
}

// Deterministic sweep over coefficient tuples once random draws have failed:
// exhaustive for small finite fields, growing integer boxes over Q. Returns
// an invertible combination or nothing (the latter is conclusive for finite
// fields; over Q the caller only sweeps when the determinant polynomial is
// nonzero, so the sweep terminates).
template <class S>
std::optional<DenseMatrix<S>> deterministic_sweep(const DenseMatrix<S>& ker, Eigen::Index n,
                                                  const typename field_traits<S>::context_type& F,
                                                  bool det_poly_nonzero) {
  using FT = field_traits<S>;
  const Eigen::Index m = ker.cols();
  if constexpr (FT::finite) {
    const std::uint64_t q = FT::element_count(F);
    std::uint64_t total = 1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (total > 2000000 / q) return std::nullopt;  // sweep too large, give up
      total *= q;
    }
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::vector<S> lambda;
      std::uint64_t rest = idx;
      for (Eigen::Index i = 0; i < m; ++i) {
        lambda.push_back(FT::element_at(F, rest % q));
        rest /= q;
      }
      DenseMatrix<S> delta = combine_columns(ker, lambda, n, F);
      if (is_invertible(delta)) return delta;
    }
    return std::nullopt;
  } else {
    if (!det_poly_nonzero) return std::nullopt;
    for (long long box = 1; box <= 64; box *= 2) {
      // iterate lattice points with coordinates in [-box, box]
      const long long side = 2 * box + 1;
      std::uint64_t total = 1;
      for (Eigen::Index i = 0; i < m; ++i) total *= static_cast<std::uint64_t>(side);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<S> lambda;
        std::uint64_t rest = idx;
        bool all_zero = true;
        for (Eigen::Index i = 0; i < m; ++i) {
          long long v = static_cast<long long>(rest % static_cast<std::uint64_t>(side)) - box;
          rest /= static_cast<std::uint64_t>(side);
          if (v != 0) all_zero = false;
          lambda.push_back(FT::make(F, v));
        }
        if (all_zero) continue;
        DenseMatrix<S> delta = combine_columns(ker, lambda, n, F);
        if (is_invertible(delta)) return delta;
      }
    }
    return std::nullopt;  // a nonzero determinant polynomial has a nonvanishing
                          // integer point in a small box in practice
  }
}

}  // namespace detail

// Finds invertible Delta with Delta*B skew, or throws NoSkewifier.
template <class S>
Skewifier<S> skew_symmetrize(const LinearMatrix<S>& B, SeededRng& rng, int max_retries = 20) {
  using FT = field_traits<S>;
  const Eigen::Index n = B.n;
  if (n == 0) throw DimensionMismatch("empty matrix");

  // Linear system: for each variable v and each (a <= b),
  //   sum_k Delta[a,k] Bv[k,b] + Delta[b,k] Bv[k,a] = 0.
  const Eigen::Index unknowns = n * n;
  const Eigen::Index equations = B.d * n * (n + 1) / 2;
  DenseMatrix<S> sys(equations, unknowns);
  sys.setConstant(FT::zero(B.field));
  Eigen::Index row = 0;
  for (Eigen::Index v = 0; v < B.d; ++v) {
    const DenseMatrix<S>& Bv = B.coeffs[static_cast<std::size_t>(v)];
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = a; b < n; ++b) {
        for (Eigen::Index k = 0; k < n; ++k) {
          sys(row, a * n + k) = sys(row, a * n + k) + Bv(k, b);
          sys(row, b * n + k) = sys(row, b * n + k) + Bv(k, a);
        }
        ++row;
      }
    }
  }

  const DenseMatrix<S> ker = kernel_basis(sys, B.field);
  const Eigen::Index dim = ker.cols();
  if (dim == 0) throw NoSkewifier();

  auto finish = [&](DenseMatrix<S> delta) {
    Skewifier<S> out;
    out.result = detail::left_multiply(delta, B);
    out.delta = std::move(delta);
    out.solution_dim = dim;
    if (!out.result.is_skew()) throw Error("internal: solution of the skewifier system not skew");
    return out;
  };

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<S> lambda;
    bool all_zero = true;
    for (Eigen::Index c = 0; c < dim; ++c) {
      lambda.push_back(FT::random(B.field, rng));
      if (!FT::is_zero(lambda.back())) all_zero = false;
    }
    if (all_zero) continue;
    DenseMatrix<S> delta = detail::combine_columns(ker, lambda, n, B.field);
    if (is_invertible(delta)) return finish(std::move(delta));
  }

  if (dim > 4) throw NoSkewifier();  // random draws settle the generic case

  // Deterministic finish: the determinant of a symbolic combination of the
  // basis elements vanishes identically iff no invertible element exists
  // over the closure.
  std::vector<DenseMatrix<S>> basis_mats;
  for (Eigen::Index c = 0; c < dim; ++c) {
    std::vector<S> unit(static_cast<std::size_t>(dim), FT::zero(B.field));
    unit[static_cast<std::size_t>(c)] = FT::one(B.field);
    basis_mats.push_back(detail::combine_columns(ker, unit, n, B.field));
  }
  LinearMatrix<S> pencil(B.field, n, std::move(basis_mats));
  const MultiPoly<S> det = determinant_poly(pencil);
  if (det.is_zero()) throw NoSkewifier();
  auto swept = detail::deterministic_sweep(ker, n, B.field, true);
  if (!swept) throw NoSkewifier();
  return finish(std::move(*swept));
}

// Symmetry bookkeeping for the middle map/term of a self-dual length-(k+2)
// complex, by the residue of k mod 4; a skew pairing class flips every
// outcome symmetric <-> skew.
enum class BetaKind { symmetric, skew };

enum class SymmetryType {
  middle_map_symmetric,
  middle_term_skew_duality,
  middle_map_skew,
  middle_term_symmetric_duality,
};

inline SymmetryType symmetry_type(int k, BetaKind beta) {
  if (k < 0) throw OutOfRange("k must be non-negative");
  const int m = k % 4;
  SymmetryType base;
  switch (m) {
    case 0: base = SymmetryType::middle_map_symmetric; break;
    case 1: base = SymmetryType::middle_term_skew_duality; break;
    case 2: base = SymmetryType::middle_map_skew; break;
    default: base = SymmetryType::middle_term_symmetric_duality; break;
  }
  if (beta == BetaKind::skew) {
    switch (base) {
      case SymmetryType::middle_map_symmetric: return SymmetryType::middle_map_skew;
      case SymmetryType::middle_map_skew: return SymmetryType::middle_map_symmetric;
      case SymmetryType::middle_term_skew_duality:
        return SymmetryType::middle_term_symmetric_duality;
      case SymmetryType::middle_term_symmetric_duality:
        return SymmetryType::middle_term_skew_duality;
    }
  }
  return base;
}

}  // namespace skewrank
