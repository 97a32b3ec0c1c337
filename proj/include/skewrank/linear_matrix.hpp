#pragma once

// Matrices of linear forms A(x) = sum_i x_i A_i, stored as d scalar n-by-n
// coefficient matrices, plus projective points and the SL(n) x SL(d) actions.

#include <string>
#include <utility>
#include <vector>

#include "skewrank/fields.hpp"
#include "skewrank/linalg.hpp"
#include "skewrank/multipoly.hpp"
#include "skewrank/random.hpp"

namespace skewrank {

template <class S>
struct ProjectivePoint {
  DenseVector<S> coords;

  explicit ProjectivePoint(DenseVector<S> c) : coords(std::move(c)) {
    bool nonzero = false;
    for (Eigen::Index i = 0; i < coords.size(); ++i)
      if (!field_traits<S>::is_zero(coords(i))) nonzero = true;
    if (!nonzero) throw Error("projective point must have a nonzero coordinate");
  }

  Eigen::Index dim() const { return coords.size(); }

  // Representative with the first nonzero coordinate scaled to 1.
  ProjectivePoint canonical() const {
    for (Eigen::Index i = 0; i < coords.size(); ++i) {
      if (!field_traits<S>::is_zero(coords(i))) {
        const S inv = field_traits<S>::inverse(coords(i));
        DenseVector<S> c = coords;
        for (Eigen::Index j = 0; j < c.size(); ++j) c(j) = c(j) * inv;
        return ProjectivePoint(std::move(c));
      }
    }
    throw Error("zero vector");  // unreachable: invariant checked at construction
  }
};

template <class S>
ProjectivePoint<S> random_projective_point(const typename field_traits<S>::context_type& F,
                                           Eigen::Index d, SeededRng& rng) {
  using FT = field_traits<S>;
  for (;;) {
    DenseVector<S> c(d);
    bool nonzero = false;
    for (Eigen::Index i = 0; i < d; ++i) {
      c(i) = FT::random(F, rng);
      if (!FT::is_zero(c(i))) nonzero = true;
    }
    if (nonzero) return ProjectivePoint<S>(std::move(c));
  }
}

template <class S>
struct LinearMatrix {
  using FT = field_traits<S>;
  using Context = typename FT::context_type;

  Context field{};
  Eigen::Index n = 0;  // matrix size
  Eigen::Index d = 0;  // number of variables
  std::vector<DenseMatrix<S>> coeffs;

  LinearMatrix() = default;
  LinearMatrix(Context F, Eigen::Index n_, std::vector<DenseMatrix<S>> coeffs_)
      : field(std::move(F)), n(n_), d(static_cast<Eigen::Index>(coeffs_.size())),
        coeffs(std::move(coeffs_)) {
    for (const auto& m : coeffs)
      if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch("coefficient matrices must be n x n");
  }

  static LinearMatrix zeros(Context F, Eigen::Index n, Eigen::Index d) {
    std::vector<DenseMatrix<S>> cs(static_cast<std::size_t>(d));
    for (auto& m : cs) {
      m.resize(n, n);
      m.setConstant(FT::zero(F));
    }
    return LinearMatrix(std::move(F), n, std::move(cs));
  }

  bool is_skew() const {
    for (const auto& m : coeffs) {
      for (Eigen::Index i = 0; i < n; ++i) {
        if (!FT::is_zero(m(i, i))) return false;
        for (Eigen::Index j = i + 1; j < n; ++j) {
          if (m(i, j) != -m(j, i)) return false;
        }
      }
    }
    return true;
  }

  // Entry (i,j) as a linear form in the d variables.
  MultiPoly<S> entry_poly(Eigen::Index i, Eigen::Index j) const {
    MultiPoly<S> out(static_cast<std::size_t>(d));
    for (Eigen::Index v = 0; v < d; ++v) {
      if (FT::is_zero(coeffs[static_cast<std::size_t>(v)](i, j))) continue;
      out += MultiPoly<S>::term(
          Monomial::variable(static_cast<std::size_t>(d), static_cast<std::size_t>(v)),
          coeffs[static_cast<std::size_t>(v)](i, j));
    }
    return out;
  }

  friend bool operator==(const LinearMatrix& a, const LinearMatrix& b) {
    if (a.n != b.n || a.d != b.d) return false;
    for (std::size_t v = 0; v < a.coeffs.size(); ++v)
      if (a.coeffs[v] != b.coeffs[v]) return false;
    return true;
  }
};

// A(x) for a raw coordinate vector (used linearly, no projective scaling).
template <class S>
DenseMatrix<S> evaluate_affine(const LinearMatrix<S>& A, const DenseVector<S>& x) {
  using FT = field_traits<S>;
  if (x.size() != A.d) throw DimensionMismatch("point has wrong number of coordinates");
  DenseMatrix<S> out(A.n, A.n);
  out.setConstant(FT::zero(A.field));
  for (Eigen::Index v = 0; v < A.d; ++v) {
    if (FT::is_zero(x(v))) continue;
    out += x(v) * A.coeffs[static_cast<std::size_t>(v)];
  }
  return out;
}

template <class S>
DenseMatrix<S> evaluate(const LinearMatrix<S>& A, const ProjectivePoint<S>& x) {
  return evaluate_affine(A, x.coords);
}

template <class S>
Eigen::Index rank_at(const LinearMatrix<S>& A, const ProjectivePoint<S>& x) {
  return rank_of(evaluate(A, x));
}

// Nullspace basis of A evaluated at x; kernel_at(A,x).cols() == n - rank.
template <class S>
DenseMatrix<S> kernel_at(const LinearMatrix<S>& A, const ProjectivePoint<S>& x) {
  return kernel_basis(evaluate(A, x), A.field);
}

// Congruence A_i -> G^T A_i G. Preserves skewness and the rank at every point.
template <class S>
LinearMatrix<S> congruence_action(const LinearMatrix<S>& A, const DenseMatrix<S>& G) {
  if (G.rows() != A.n || G.cols() != A.n) throw DimensionMismatch("congruence matrix size");
  if (!is_invertible(G)) throw SingularTransform();
  std::vector<DenseMatrix<S>> cs;
  cs.reserve(A.coeffs.size());
  const DenseMatrix<S> Gt = G.transpose();
  for (const auto& m : A.coeffs) cs.push_back(Gt * m * G);
  return LinearMatrix<S>(A.field, A.n, std::move(cs));
}

// Substitution x -> Hx: the new coefficients are A'_j = sum_i H_ij A_i, so
// evaluate(variable_action(A,H), x) == evaluate(A, Hx).
template <class S>
LinearMatrix<S> variable_action(const LinearMatrix<S>& A, const DenseMatrix<S>& H) {
  using FT = field_traits<S>;
  if (H.rows() != A.d || H.cols() != A.d) throw DimensionMismatch("variable matrix size");
  if (!is_invertible(H)) throw SingularTransform();
  std::vector<DenseMatrix<S>> cs(static_cast<std::size_t>(A.d));
  for (Eigen::Index j = 0; j < A.d; ++j) {
    DenseMatrix<S> m(A.n, A.n);
    m.setConstant(FT::zero(A.field));
    for (Eigen::Index i = 0; i < A.d; ++i) {
      if (FT::is_zero(H(i, j))) continue;
      m += H(i, j) * A.coeffs[static_cast<std::size_t>(i)];
    }
    cs[static_cast<std::size_t>(j)] = std::move(m);
  }
  return LinearMatrix<S>(A.field, A.n, std::move(cs));
}

// Random invertible scalar matrix with entries drawn from the field.
template <class S>
DenseMatrix<S> random_invertible(const typename field_traits<S>::context_type& F, Eigen::Index n,
                                 SeededRng& rng) {
  using FT = field_traits<S>;
  for (;;) {
    DenseMatrix<S> g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) g(i, j) = FT::random(F, rng);
    if (is_invertible(g)) return g;
  }
}

// Random SL(n) element: a random invertible matrix with one row scaled so the
// determinant becomes 1.
template <class S>
DenseMatrix<S> random_special_linear(const typename field_traits<S>::context_type& F,
                                     Eigen::Index n, SeededRng& rng) {
  DenseMatrix<S> g = random_invertible<S>(F, n, rng);
  const S det = determinant_of(g, F);
  const S inv = field_traits<S>::inverse(det);
  for (Eigen::Index j = 0; j < n; ++j) g(0, j) = g(0, j) * inv;
  return g;
}

// Coefficient-wise lift of an F_p pencil into an extension of F_p.
inline LinearMatrix<Fq> lift_matrix(const ExtensionHandle& F, const LinearMatrix<Fp>& A) {
  std::vector<DenseMatrix<Fq>> cs(A.coeffs.size());
  for (std::size_t v = 0; v < A.coeffs.size(); ++v) {
    cs[v].resize(A.n, A.n);
    for (Eigen::Index i = 0; i < A.n; ++i)
      for (Eigen::Index j = 0; j < A.n; ++j) cs[v](i, j) = lift_to(F, A.coeffs[v](i, j));
  }
  return LinearMatrix<Fq>(F, A.n, std::move(cs));
}

// FNV-1a 64-bit, used for content addresses of matrices and bases.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

// Stable content hash of a pencil: field name, shape, and all coefficient
// entries in row-major order.
template <class S>
std::string content_hash(const LinearMatrix<S>& A) {
  using FT = field_traits<S>;
  std::string sig = FT::name(A.field) + ";" + std::to_string(A.n) + ";" + std::to_string(A.d);
  for (const auto& m : A.coeffs)
    for (Eigen::Index i = 0; i < A.n; ++i)
      for (Eigen::Index j = 0; j < A.n; ++j) sig += "," + FT::to_string(m(i, j));
  return hex64(fnv1a64(sig));
}

// Reduction of a rational pencil mod p; throws on denominator collision.
inline LinearMatrix<Fp> reduce_matrix(const PrimeField& F, const LinearMatrix<Rational>& A) {
  std::vector<DenseMatrix<Fp>> cs(A.coeffs.size());
  for (std::size_t v = 0; v < A.coeffs.size(); ++v) {
    cs[v].resize(A.n, A.n);
    for (Eigen::Index i = 0; i < A.n; ++i)
      for (Eigen::Index j = 0; j < A.n; ++j) cs[v](i, j) = reduce_mod(F, A.coeffs[v](i, j));
  }
  return LinearMatrix<Fp>(F, A.n, std::move(cs));
}

}  // namespace skewrank
