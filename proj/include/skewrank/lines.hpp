#pragma once

// Restriction of a pencil to a projective line and the Kronecker minimal
// (column) indices of the restricted binary pencil. For a constant-rank skew
// pencil these indices are the splitting type of the kernel bundle on the
// line, which is how jumping lines are detected.

#include <algorithm>
#include <vector>

#include "skewrank/linalg.hpp"
#include "skewrank/linear_matrix.hpp"

namespace skewrank {

template <class S>
struct Line {
  DenseMatrix<S> basis;  // d x 2, full column rank; points are s*col0 + t*col1

  explicit Line(DenseMatrix<S> b) : basis(std::move(b)) {
    if (basis.cols() != 2) throw DimensionMismatch("line basis must have two columns");
    if (rank_of(basis) != 2) throw DegenerateLine();
  }
};

template <class S>
struct BinaryPencil {
  Eigen::Index n = 0;
  DenseMatrix<S> p0, p1;  // value at (s,t) is s*p0 + t*p1
  typename field_traits<S>::context_type field{};
};

struct SplittingProfile {
  std::vector<int> indices;  // sorted non-decreasing

  int sum() const {
    int s = 0;
    for (int e : indices) s += e;
    return s;
  }
  friend bool operator==(const SplittingProfile&, const SplittingProfile&) = default;
};

template <class S>
BinaryPencil<S> restrict_to_line(const LinearMatrix<S>& A, const Line<S>& L) {
  if (L.basis.rows() != A.d) throw DimensionMismatch("line lives in the wrong space");
  BinaryPencil<S> P;
  P.n = A.n;
  P.field = A.field;
  P.p0 = evaluate_affine<S>(A, L.basis.col(0));
  P.p1 = evaluate_affine<S>(A, L.basis.col(1));
  return P;
}

namespace detail {

// Ranks of P(s,t) at n+1 distinct points of P^1. A rank drop is cut out by
// binary forms of degree <= n, so n+1 points with equal rank pin the generic
// rank; any disagreement proves the rank is not constant. Finite base fields
// smaller than n get lifted into an extension to supply enough points.
template <class S2>
std::pair<Eigen::Index, bool> scan_pencil_points(const DenseMatrix<S2>& p0,
                                                 const DenseMatrix<S2>& p1,
                                                 const typename field_traits<S2>::context_type& F,
                                                 Eigen::Index n) {
  using FT = field_traits<S2>;
  Eigen::Index rmax = 0;
  std::vector<Eigen::Index> ranks;
  for (Eigen::Index i = 0; i <= n; ++i) {
    DenseMatrix<S2> m(n, n);
    if (i < n) {
      S2 t;
      if constexpr (FT::finite) {
        t = FT::element_at(F, static_cast<std::uint64_t>(i));
      } else {
        t = FT::make(F, i);
      }
      m = p0;
      for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) m(a, b) = m(a, b) + t * p1(a, b);
    } else {
      m = p1;  // the point (0:1)
    }
    Eigen::Index r = rank_of(m);
    ranks.push_back(r);
    rmax = std::max(rmax, r);
  }
  bool constant = true;
  for (Eigen::Index r : ranks)
    if (r != rmax) constant = false;
  return {rmax, constant};
}

template <class S>
std::pair<Eigen::Index, bool> pencil_generic_rank(const BinaryPencil<S>& P) {
  using FT = field_traits<S>;
  if constexpr (FT::finite) {
    if (FT::element_count(P.field) < static_cast<std::uint64_t>(P.n)) {
      if constexpr (FT::kind == FieldKind::prime) {
        // too few points in P^1(F_p): lift into F_{p^e} with p^e >= n
        const std::uint32_t p = P.field.p;
        std::uint32_t e = 1;
        std::uint64_t q = p;
        while (q < static_cast<std::uint64_t>(P.n)) q *= p, ++e;
        ExtensionHandle F = make_extension(p, e);
        DenseMatrix<Fq> p0(P.n, P.n), p1(P.n, P.n);
        for (Eigen::Index i = 0; i < P.n; ++i) {
          for (Eigen::Index j = 0; j < P.n; ++j) {
            p0(i, j) = lift_to(F, P.p0(i, j));
            p1(i, j) = lift_to(F, P.p1(i, j));
          }
        }
        return scan_pencil_points<Fq>(p0, p1, F, P.n);
      } else {
        throw TooLarge("base field too small to validate constant rank on the line");
      }
    }
  }
  return scan_pencil_points<S>(P.p0, P.p1, P.field, P.n);
}

}  // namespace detail

// Dimension of the space of homogeneous degree-e vector solutions v(s,t)
// of P(s,t) v(s,t) = 0: a linear system in n(e+1) unknowns.
template <class S>
Eigen::Index kernel_dimension_at_degree(const BinaryPencil<S>& P, Eigen::Index e) {
  using FT = field_traits<S>;
  const Eigen::Index n = P.n;
  const Eigen::Index cols = n * (e + 1);
  const Eigen::Index rows = n * (e + 2);
  DenseMatrix<S> m(rows, cols);
  m.setConstant(FT::zero(P.field));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index a = 0; a <= e; ++a) {
        const Eigen::Index col = j * (e + 1) + a;
        // s*P0 pushes s^a t^(e-a) to s^(a+1) t^(e-a); t*P1 keeps the s-degree
        m(i * (e + 2) + (a + 1), col) = m(i * (e + 2) + (a + 1), col) + P.p0(i, j);
        m(i * (e + 2) + a, col) = m(i * (e + 2) + a, col) + P.p1(i, j);
      }
    }
  }
  return cols - rank_of(m);
}

// Kronecker minimal indices of the kernel of the pencil. With
// d_e = kernel_dimension_at_degree and Delta_e = d_e - d_{e-1}, the
// multiplicity of index e is Delta_e - Delta_{e-1}; the total count is the
// corank at a generic point.
template <class S>
SplittingProfile minimal_indices(const BinaryPencil<S>& P) {
  auto [generic_rank, constant] = detail::pencil_generic_rank(P);
  if (!constant) throw NonConstantRankOnLine();
  const Eigen::Index corank = P.n - generic_rank;
  SplittingProfile profile;
  if (corank == 0) return profile;
  Eigen::Index d_prev = 0, delta_prev = 0;
  for (Eigen::Index e = 0; e <= P.n; ++e) {
    const Eigen::Index d_e = kernel_dimension_at_degree(P, e);
    const Eigen::Index delta = d_e - d_prev;
    const Eigen::Index mult = delta - delta_prev;
    for (Eigen::Index c = 0; c < mult; ++c) profile.indices.push_back(static_cast<int>(e));
    d_prev = d_e;
    delta_prev = delta;
    if (static_cast<Eigen::Index>(profile.indices.size()) == corank) return profile;
  }
  throw NonConstantRankOnLine();  // minimal indices of an n x n pencil never exceed n
}

template <class S>
SplittingProfile minimal_indices(const LinearMatrix<S>& A, const Line<S>& L) {
  return minimal_indices(restrict_to_line(A, L));
}

// Jumping order of a corank-2 constant-rank pencil on a line:
// j = (eps_2 - eps_1)/2. An odd gap means the kernel is not of the expected
// kernel-bundle form (c_1 even), which is reported rather than rounded.
template <class S>
int jumping_order(const LinearMatrix<S>& A, const Line<S>& L) {
  SplittingProfile prof = minimal_indices(A, L);
  if (prof.indices.size() != 2)
    throw DimensionMismatch("jumping order needs a corank-2 pencil, got corank " +
                            std::to_string(prof.indices.size()));
  const int gap = prof.indices[1] - prof.indices[0];
  if (gap % 2 != 0) throw OddIndexGap();
  return gap / 2;
}

template <class S>
Line<S> random_line(const typename field_traits<S>::context_type& F, Eigen::Index d,
                    SeededRng& rng) {
  using FT = field_traits<S>;
  for (;;) {
    DenseMatrix<S> b(d, 2);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < 2; ++j) b(i, j) = FT::random(F, rng);
    if (rank_of(b) == 2) return Line<S>(std::move(b));
  }
}

}  // namespace skewrank
