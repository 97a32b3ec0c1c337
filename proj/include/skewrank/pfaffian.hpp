#pragma once

// Pfaffians of skew matrices, scalar and symbolic. The sign convention is
// Pf([[0,1],[-1,0]]) = 1, with the recursive first-row expansion
//   Pf(M) = sum_{j>=2} (-1)^j m_{1j} Pf(M with rows/cols 1,j removed),
// so Pf(M)^2 = det(M). Symbolic sub-Pfaffians of a pencil are memoized on
// index subsets: the binomial(n,2m) principal minors share almost all of
// their subproblems.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "skewrank/linear_matrix.hpp"
#include "skewrank/multipoly.hpp"

namespace skewrank {

namespace detail {

template <class S>
void require_skew_matrix(const DenseMatrix<S>& m) {
  using FT = field_traits<S>;
  if (m.rows() != m.cols()) throw DimensionMismatch("Pfaffian of non-square matrix");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!FT::is_zero(m(i, i))) throw NotSkew();
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) throw NotSkew();
  }
}

}  // namespace detail

// Pfaffian of a scalar skew matrix.
template <class S>
S pfaffian(const DenseMatrix<S>& m, const typename field_traits<S>::context_type& F) {
  using FT = field_traits<S>;
  detail::require_skew_matrix(m);
  const Eigen::Index n = m.rows();
  if (n % 2 != 0) throw OddSize();
  if (n == 0) return FT::one(F);

  std::unordered_map<std::uint32_t, S> memo;
  auto pf = [&](auto&& self, std::uint32_t mask) -> S {
    if (mask == 0) return FT::one(F);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    const Eigen::Index first = idx[0];
    S acc = FT::zero(F);
    for (std::size_t t = 1; t < idx.size(); ++t) {
      const Eigen::Index j = idx[t];
      if (FT::is_zero(m(first, j))) continue;
      const std::uint32_t sub = mask & ~(1u << first) & ~(1u << j);
      const S rest = self(self, sub);
      acc = (t % 2 == 1) ? S(acc + m(first, j) * rest) : S(acc - m(first, j) * rest);
    }
    memo.emplace(mask, acc);
    return acc;
  };
  if (n > 30) throw TooLarge("Pfaffian expansion limited to n <= 30");
  return pf(pf, (1u << n) - 1u);
}

// Matrix with polynomial entries, row-major.
template <class S>
using PolyMatrix = std::vector<std::vector<MultiPoly<S>>>;

// Pfaffian of a skew matrix of polynomials, same convention and expansion as
// the scalar version.
template <class S>
MultiPoly<S> pfaffian(const PolyMatrix<S>& m,
                      const typename field_traits<S>::context_type& F) {
  using FT = field_traits<S>;
  const Eigen::Index n = static_cast<Eigen::Index>(m.size());
  std::size_t nvars = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(m[static_cast<std::size_t>(i)].size()) != n)
      throw DimensionMismatch("Pfaffian of non-square matrix");
    if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].is_zero()) throw NotSkew();
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      nvars = std::max(nvars, e.nvars());
      if (e != -m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) throw NotSkew();
    }
  }
  if (n % 2 != 0) throw OddSize();
  if (n > 30) throw TooLarge("Pfaffian expansion limited to n <= 30");
  if (n == 0) return MultiPoly<S>::constant(nvars, FT::one(F));

  std::unordered_map<std::uint32_t, MultiPoly<S>> memo;
  auto pf = [&](auto&& self, std::uint32_t mask) -> const MultiPoly<S>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MultiPoly<S> acc(nvars);
    if (mask == 0) {
      acc = MultiPoly<S>::constant(nvars, FT::one(F));
    } else {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < n; ++i)
        if (mask >> i & 1u) idx.push_back(i);
      const Eigen::Index first = idx[0];
      for (std::size_t t = 1; t < idx.size(); ++t) {
        const Eigen::Index j = idx[t];
        const auto& entry = m[static_cast<std::size_t>(first)][static_cast<std::size_t>(j)];
        if (entry.is_zero()) continue;
        const MultiPoly<S>& rest = self(self, mask & ~(1u << first) & ~(1u << j));
        if (rest.is_zero()) continue;
        MultiPoly<S> term = entry * rest;
        acc = (t % 2 == 1) ? acc + term : acc - term;
      }
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  return pf(pf, (1u << n) - 1u);
}

// Memoized symbolic Pfaffians of all principal submatrices of a skew pencil.
// pf(mask) is the Pfaffian of A restricted to the index subset `mask`, a
// homogeneous polynomial of degree popcount(mask)/2 in the d variables.
template <class S>
class PfaffianTable {
 public:
  explicit PfaffianTable(const LinearMatrix<S>& A) : A_(A) {
    if (A.n > 30) throw TooLarge("Pfaffian table limited to n <= 30");
    for (Eigen::Index v = 0; v < A.d; ++v) {
      for (Eigen::Index i = 0; i < A.n; ++i) {
        if (!field_traits<S>::is_zero(A.coeffs[static_cast<std::size_t>(v)](i, i)))
          throw NotSkew();
        for (Eigen::Index j = i + 1; j < A.n; ++j)
          if (A.coeffs[static_cast<std::size_t>(v)](i, j) !=
              -A.coeffs[static_cast<std::size_t>(v)](j, i))
            throw NotSkew();
      }
    }
    entries_.resize(static_cast<std::size_t>(A.n * A.n));
    for (Eigen::Index i = 0; i < A.n; ++i)
      for (Eigen::Index j = 0; j < A.n; ++j)
        entries_[static_cast<std::size_t>(i * A.n + j)] = A.entry_poly(i, j);
  }

  const LinearMatrix<S>& source() const { return A_; }

  const MultiPoly<S>& pf(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    MultiPoly<S> value = compute(mask);
    return memo_.emplace(mask, std::move(value)).first->second;
  }

  // Pfaffian of the whole matrix (n even).
  const MultiPoly<S>& full() {
    if (A_.n % 2 != 0) throw OddSize();
    return pf((1u << A_.n) - 1u);
  }

 private:
  MultiPoly<S> compute(std::uint32_t mask) {
    const std::size_t nv = static_cast<std::size_t>(A_.d);
    if (mask == 0) return MultiPoly<S>::constant(nv, field_traits<S>::one(A_.field));
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < A_.n; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    if (idx.size() % 2 != 0) return MultiPoly<S>::zero(nv);
    const Eigen::Index first = idx[0];
    MultiPoly<S> acc(nv);
    for (std::size_t t = 1; t < idx.size(); ++t) {
      const Eigen::Index j = idx[t];
      const MultiPoly<S>& entry = entries_[static_cast<std::size_t>(first * A_.n + j)];
      if (entry.is_zero()) continue;
      const std::uint32_t sub = mask & ~(1u << first) & ~(1u << j);
      const MultiPoly<S>& rest = pf(sub);
      if (rest.is_zero()) continue;
      MultiPoly<S> term = entry * rest;
      acc = (t % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
  }

  LinearMatrix<S> A_;
  std::vector<MultiPoly<S>> entries_;
  std::unordered_map<std::uint32_t, MultiPoly<S>> memo_;
};

// All principal sub-Pfaffians of even size 2m, one per size-2m subset of the
// row/column indices, in lexicographic subset order.
template <class S>
struct SubPfaffianSystem {
  Eigen::Index size = 0;  // 2m
  std::vector<std::vector<Eigen::Index>> subsets;
  std::vector<MultiPoly<S>> polys;  // homogeneous of degree m
};

namespace detail {

inline void enumerate_subsets(Eigen::Index n, Eigen::Index k,
                              std::vector<std::vector<Eigen::Index>>& out) {
  std::vector<Eigen::Index> cur(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  for (;;) {
    out.push_back(cur);
    Eigen::Index i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

template <class S>
SubPfaffianSystem<S> principal_subpfaffians(PfaffianTable<S>& table, Eigen::Index size) {
  const LinearMatrix<S>& A = table.source();
  if (size % 2 != 0) throw OddSize();
  if (size > A.n) throw DimensionMismatch("sub-Pfaffian size exceeds matrix size");
  SubPfaffianSystem<S> sys;
  sys.size = size;
  detail::enumerate_subsets(A.n, size, sys.subsets);
  sys.polys.reserve(sys.subsets.size());
  for (const auto& sub : sys.subsets) {
    std::uint32_t mask = 0;
    for (Eigen::Index i : sub) mask |= 1u << i;
    sys.polys.push_back(table.pf(mask));
  }
  return sys;
}

template <class S>
SubPfaffianSystem<S> principal_subpfaffians(const LinearMatrix<S>& A, Eigen::Index size) {
  PfaffianTable<S> table(A);
  return principal_subpfaffians(table, size);
}

// Largest even 2m such that some principal 2m-sub-Pfaffian is nonzero as a
// polynomial; equals the maximum of rank_at over all points of the closure.
template <class S>
Eigen::Index symbolic_rank_upper_bound(PfaffianTable<S>& table) {
  const Eigen::Index n = table.source().n;
  for (Eigen::Index size = n - (n % 2); size >= 2; size -= 2) {
    auto sys = principal_subpfaffians(table, size);
    for (const auto& p : sys.polys)
      if (!p.is_zero()) return size;
  }
  return 0;
}

template <class S>
Eigen::Index symbolic_rank_upper_bound(const LinearMatrix<S>& A) {
  PfaffianTable<S> table(A);
  return symbolic_rank_upper_bound(table);
}

}  // namespace skewrank
