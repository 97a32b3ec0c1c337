#pragma once

// Bundled verification corpus: the 10x10 pencil of constant rank 8 over Q
// ("westwick10") and the 14x14 pencil of constant rank 12 over F_7
// ("appendix14"). Both are checked for size and skewness on load.

#include <string>

#include "skewrank/linear_matrix.hpp"

namespace skewrank {
namespace corpus_data {

// x0,...,x3 coefficient matrices; entries in {-1,0,1}.
inline constexpr int kWestwick[4][10][10] = {
    {
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
        {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    },
    {
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
        {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    },
    {
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    },
    {
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    },
};

// x0,...,x3 coefficient matrices over F_7; printed entries in {-3,...,3}.
inline constexpr int kAppendix[4][14][14] = {
    {
        {0, -2, -1, -3, 3, 3, 3, 3, 1, -3, 1, 1, 1, -3},
        {2, 0, -1, -2, 3, 0, -3, -2, 0, 3, 0, 0, -2, 0},
        {1, 1, 0, 3, -3, 2, -3, -2, -3, -3, -2, -2, -3, -3},
        {3, 2, -3, 0, 2, -3, 1, 0, 2, 1, 3, -1, 0, 1},
        {-3, -3, 3, -2, 0, -2, -3, 3, -3, -2, -1, 2, 2, 1},
        {-3, 0, -2, 3, 2, 0, 3, -3, -3, 1, 3, -1, -3, 1},
        {-3, 3, 3, -1, 3, -3, 0, 1, 3, -1, 3, -2, -1, -2},
        {-3, 2, 2, 0, -3, 3, -1, 0, 3, 3, 2, -3, -1, 0},
        {-1, 0, 3, -2, 3, 3, -3, -3, 0, -1, 3, -2, -3, -3},
        {3, -3, 3, -1, 2, -1, 1, -3, 1, 0, -1, -2, 2, -1},
        {-1, 0, 2, -3, 1, -3, -3, -2, -3, 1, 0, 1, -3, -1},
        {-1, 0, 2, 1, -2, 1, 2, 3, 2, 2, -1, 0, 3, -2},
        {-1, 2, 3, 0, -2, 3, 1, 1, 3, -2, 3, -3, 0, 1},
        {3, 0, 3, -1, -1, -1, 2, 0, 3, 1, 1, 2, -1, 0},
    },
    {
        {0, -2, -2, 3, -3, 0, -2, -3, 3, -1, 2, 0, 2, -3},
        {2, 0, 3, -1, 1, 2, -3, -1, -2, -1, -1, -3, 1, 2},
        {2, -3, 0, -2, 1, 1, 1, -1, 2, -3, 0, -3, 2, -3},
        {-3, 1, 2, 0, 2, -1, 1, -2, -1, -2, 1, 2, 2, -3},
        {3, -1, -1, -2, 0, 1, -1, 1, -2, 0, -1, 2, 0, 0},
        {0, -2, -1, 1, -1, 0, 3, 0, -2, 2, 2, -3, -3, 1},
        {2, 3, -1, -1, 1, -3, 0, -3, 2, 3, -1, -2, -2, 3},
        {3, 1, 1, 2, -1, 0, 3, 0, 1, 1, 3, 0, 3, -1},
        {-3, 2, -2, 1, 2, 2, -2, -1, 0, 2, -1, -3, 1, 2},
        {1, 1, 3, 2, 0, -2, -3, -1, -2, 0, -1, 1, 3, -1},
        {-2, 1, 0, -1, 1, -2, 1, -3, 1, 1, 0, -3, 2, -3},
        {0, 3, 3, -2, -2, 3, 2, 0, 3, -1, 3, 0, 3, -1},
        {-2, -1, -2, -2, 0, 3, 2, -3, -1, -3, -2, -3, 0, 0},
        {3, -2, 3, 3, 0, -1, -3, 1, -2, 1, 3, 1, 0, 0},
    },
    {
        {0, 2, 2, -3, 3, 2, -1, -1, 1, 1, 0, 2, -3, -2},
        {-2, 0, -2, 3, 3, -1, 1, -1, -3, -2, 1, -3, -2, -2},
        {-2, 2, 0, 1, 3, 1, 3, 2, 2, 3, 2, 1, 0, -3},
        {3, -3, -1, 0, -3, -1, 1, -3, 3, -1, -3, 2, -3, 1},
        {-3, -3, -3, 3, 0, 3, -2, -3, 3, 1, -3, -1, 0, 2},
        {-2, 1, -1, 1, -3, 0, 3, -2, 0, -2, 0, -2, -2, -2},
        {1, -1, -3, -1, 2, -3, 0, 0, 2, -1, -2, -3, 2, -2},
        {1, 1, -2, 3, 3, 2, 0, 0, -2, 0, 2, -2, 0, 3},
        {-1, 3, -2, -3, -3, 0, -2, 2, 0, -1, -1, -1, 0, -1},
        {-1, 2, -3, 1, -1, 2, 1, 0, 1, 0, -2, 3, -2, 3},
        {0, -1, -2, 3, 3, 0, 2, -2, 1, 2, 0, -3, 3, -1},
        {-2, 3, -1, -2, 1, 2, 3, 2, 1, -3, 3, 0, 0, -1},
        {3, 2, 0, 3, 0, 2, -2, 0, 0, 2, -3, 0, 0, 3},
        {2, 2, 3, -1, -2, 2, 2, -3, 1, -3, 1, 1, -3, 0},
    },
    {
        {0, -3, 2, -3, -1, -1, 3, -2, 3, 3, 3, 0, -3, -3},
        {3, 0, -3, 1, 1, 2, -1, -3, -1, 0, 3, -3, 0, -1},
        {-2, 3, 0, 1, -1, 0, -1, -2, 3, 0, -1, -2, 1, -2},
        {3, -1, -1, 0, 3, 2, -1, 0, 1, -3, -3, -1, -1, 3},
        {1, -1, 1, -3, 0, 3, 3, 0, 0, -3, -3, 3, 2, 3},
        {1, -2, 0, -2, -3, 0, -3, 3, 3, -3, -3, -2, 1, 1},
        {-3, 1, 1, 1, -3, 3, 0, 0, 3, 2, 0, -3, 2, 0},
        {2, 3, 2, 0, 0, -3, 0, 0, 0, 1, -1, -2, 1, 1},
        {-3, 1, -3, -1, 0, -3, -3, 0, 0, 3, 2, -3, -1, -1},
        {-3, 0, 0, 3, 3, 3, -2, -1, -3, 0, -2, -2, -3, -2},
        {-3, -3, 1, 3, 3, 3, 0, 1, -2, 2, 0, 1, 2, -3},
        {0, 3, 2, 1, -3, 2, 3, 2, 3, 2, -1, 0, 2, -2},
        {3, 0, -1, 1, -2, -1, -2, -1, 1, 3, -2, -2, 0, -3},
        {3, 1, 2, -3, -3, -1, 0, -1, 1, 2, 3, 2, 3, 0},
    },
};

}  // namespace corpus_data

namespace detail {

template <class S, class Table>
LinearMatrix<S> load_corpus_table(const typename field_traits<S>::context_type& F,
                                  Eigen::Index n, const Table& table, const char* name) {
  using FT = field_traits<S>;
  std::vector<DenseMatrix<S>> cs(4);
  for (int v = 0; v < 4; ++v) {
    cs[static_cast<std::size_t>(v)].resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        cs[static_cast<std::size_t>(v)](i, j) = FT::make(F, table[v][i][j]);
  }
  LinearMatrix<S> A(F, n, std::move(cs));
  if (!A.is_skew()) throw CorpusCorrupt(std::string(name) + " is not skew");
  return A;
}

}  // namespace detail

// The rank-8 pencil, over Q (integer entries, reducible mod any odd prime).
inline LinearMatrix<Rational> westwick10() {
  return detail::load_corpus_table<Rational>(RationalField{}, 10, corpus_data::kWestwick,
                                             "westwick10");
}

// The rank-12 pencil over F_7.
inline LinearMatrix<Fp> appendix14() {
  return detail::load_corpus_table<Fp>(PrimeField(7), 14, corpus_data::kAppendix, "appendix14");
}

}  // namespace skewrank
