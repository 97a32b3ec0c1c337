#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewrank/corpus.hpp"
#include "skewrank/pfaffian.hpp"

using namespace skewrank;

namespace {

template <class S>
DenseMatrix<S> random_skew(const typename field_traits<S>::context_type& F, Eigen::Index n,
                           SeededRng& rng) {
  using FT = field_traits<S>;
  DenseMatrix<S> m(n, n);
  m.setConstant(FT::zero(F));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      m(i, j) = FT::random(F, rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

// skew matrix whose strict upper triangle is filled with independent
// variables; its Pfaffian is the generic one
LinearMatrix<Fp> generic_skew_symbolic(Eigen::Index n, const PrimeField& F) {
  const Eigen::Index d = n * (n - 1) / 2;
  auto A = LinearMatrix<Fp>::zeros(F, n, d);
  Eigen::Index v = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      A.coeffs[static_cast<std::size_t>(v)](i, j) = Fp(F, 1);
      A.coeffs[static_cast<std::size_t>(v)](j, i) = Fp(F, -1);
      ++v;
    }
  return A;
}

}  // namespace

TEST_CASE("pfaffian sign convention") {
  PrimeField F7(7);
  DenseMatrix<Fp> m(2, 2);
  m << Fp(F7, 0), Fp(F7, 3), Fp(F7, -3), Fp(F7, 0);
  CHECK(pfaffian(m, F7) == Fp(F7, 3));  // Pf([[0,a],[-a,0]]) = a

  DenseMatrix<Fp> not_skew(2, 2);
  not_skew << Fp(F7, 0), Fp(F7, 1), Fp(F7, 1), Fp(F7, 0);
  CHECK_THROWS_AS(pfaffian(not_skew, F7), NotSkew);

  DenseMatrix<Fp> odd(3, 3);
  odd.setConstant(Fp(F7, 0));
  CHECK_THROWS_AS(pfaffian(odd, F7), OddSize);
}

TEST_CASE("4x4 symbolic pfaffian is m12*m34 - m13*m24 + m14*m23") {
  PrimeField F7(7);
  auto A = generic_skew_symbolic(4, F7);
  // variables in order: m01, m02, m03, m12, m13, m23 (0-based entries)
  PfaffianTable<Fp> table(A);
  const auto& pf = table.full();
  CHECK(pf.size() == 3);
  // m01*m23 - m02*m13 + m03*m12: variable indices (0,5), (1,4), (2,3)
  auto term = [&](std::size_t a, std::size_t b, long long c) {
    std::vector<std::uint16_t> e(6, 0);
    e[a] = 1;
    e[b] = 1;
    return MultiPoly<Fp>::term(Monomial(std::move(e)), Fp(F7, c));
  };
  MultiPoly<Fp> expect = term(0, 5, 1) + term(1, 4, -1) + term(2, 3, 1);
  CHECK(pf == expect);
}

TEST_CASE("Pf(M)^2 = det(M) for random skew matrices up to size 12") {
  PrimeField F101(101);
  SeededRng rng(2);
  for (Eigen::Index n : {2, 4, 6, 8, 10, 12}) {
    for (int it = 0; it < 5; ++it) {
      auto m = random_skew<Fp>(F101, n, rng);
      Fp pf = pfaffian(m, F101);
      CHECK(pf * pf == determinant_of(m, F101));
    }
  }
  RationalField Q{4};
  for (Eigen::Index n : {2, 4, 6}) {
    for (int it = 0; it < 3; ++it) {
      auto m = random_skew<Rational>(Q, n, rng);
      Rational pf = pfaffian(m, Q);
      CHECK(pf * pf == determinant_of(m, Q));
    }
  }
}

TEST_CASE("Pf(G^T M G) = det(G) Pf(M)") {
  PrimeField F101(101);
  SeededRng rng(14);
  for (int it = 0; it < 10; ++it) {
    auto m = random_skew<Fp>(F101, 6, rng);
    DenseMatrix<Fp> g(6, 6);
    for (Eigen::Index i = 0; i < 6; ++i)
      for (Eigen::Index j = 0; j < 6; ++j) g(i, j) = field_traits<Fp>::random(F101, rng);
    DenseMatrix<Fp> conj = g.transpose() * m * g;
    CHECK(pfaffian(conj, F101) == determinant_of(g, F101) * pfaffian(m, F101));
  }
}

TEST_CASE("westwick pencil: Pf10 vanishes, 45 quartic sub-pfaffians do not") {
  auto W = westwick10();
  PfaffianTable<Rational> table(W);
  CHECK(table.full().is_zero());

  auto sys = principal_subpfaffians(table, 8);
  CHECK(sys.polys.size() == 45);
  int nonzero = 0;
  for (const auto& p : sys.polys) {
    if (!p.is_zero()) {
      ++nonzero;
      CHECK(p.is_homogeneous());
      CHECK(p.total_degree() == 4);
    }
  }
  CHECK(nonzero == 43);  // two principal 8x8 blocks happen to degenerate

  CHECK(symbolic_rank_upper_bound(table) == 8);
}

TEST_CASE("the table rejects non-skew pencils") {
  PrimeField F7(7);
  auto B = LinearMatrix<Fp>::zeros(F7, 2, 1);
  B.coeffs[0](0, 1) = Fp(F7, 1);  // transpose entry missing
  CHECK_THROWS_AS(PfaffianTable<Fp>{B}, NotSkew);
}

TEST_CASE("appendix pencil: Pf14 vanishes, all 91 sextic sub-pfaffians survive") {
  auto A = appendix14();
  PfaffianTable<Fp> table(A);
  CHECK(table.full().is_zero());
  auto top = principal_subpfaffians(table, 14);
  CHECK(top.polys.size() == 1);
  CHECK(top.polys[0].is_zero());

  auto sys = principal_subpfaffians(table, 12);
  CHECK(sys.polys.size() == 91);
  for (const auto& p : sys.polys) {
    CHECK(!p.is_zero());
    CHECK(p.is_homogeneous());
    CHECK(p.total_degree() == 6);
  }
  CHECK(symbolic_rank_upper_bound(table) == 12);
}

TEST_CASE("pfaffian of a matrix with polynomial entries") {
  PrimeField F7(7);
  // entries of degree 2: pf([[0, q], [-q, 0]]) = q
  auto x0 = MultiPoly<Fp>::term(Monomial::variable(2, 0), Fp(F7, 1));
  auto x1 = MultiPoly<Fp>::term(Monomial::variable(2, 1), Fp(F7, 1));
  auto q = x0 * x0 + x1 * x1;
  PolyMatrix<Fp> m(2, std::vector<MultiPoly<Fp>>(2, MultiPoly<Fp>::zero(2)));
  m[0][1] = q;
  m[1][0] = -q;
  CHECK(pfaffian(m, F7) == q);

  // agreement with the pencil table on a linear instance
  auto A = appendix14();
  PolyMatrix<Fp> entries(14, std::vector<MultiPoly<Fp>>(14));
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        A.entry_poly(i, j);
  PfaffianTable<Fp> table(A);
  CHECK(pfaffian(entries, A.field) == table.full());

  // specialization commutes for quadratic entries: Pf(M)(x) = Pf(M(x))
  PolyMatrix<Fp> m4(4, std::vector<MultiPoly<Fp>>(4, MultiPoly<Fp>::zero(2)));
  SeededRng rng(3);
  auto rand_poly = [&]() {
    MultiPoly<Fp> p(2);
    for (int t = 0; t < 3; ++t) {
      std::vector<std::uint16_t> e(2, 0);
      e[rng.below(2)] += 1;
      e[rng.below(2)] += 1;
      p += MultiPoly<Fp>::term(Monomial(std::move(e)), Fp(F7, static_cast<long long>(rng.below(7))));
    }
    return p;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto p = rand_poly();
      m4[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p;
      m4[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -p;
    }
  auto pf4 = pfaffian(m4, F7);
  for (int it = 0; it < 10; ++it) {
    DenseVector<Fp> x(2);
    x << Fp(F7, static_cast<long long>(rng.below(7))), Fp(F7, static_cast<long long>(rng.below(7)));
    DenseMatrix<Fp> at(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        at(i, j) = m4[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].evaluate(x);
    CHECK(pfaffian(at, F7) == pf4.evaluate(x));
  }
}

TEST_CASE("zero matrix has symbolic rank bound 0") {
  auto Z = LinearMatrix<Fp>::zeros(PrimeField(7), 6, 4);
  CHECK(symbolic_rank_upper_bound(Z) == 0);
}

TEST_CASE("specialization commutes: evaluate-then-Pf equals Pf-then-evaluate") {
  auto A = appendix14();
  PfaffianTable<Fp> table(A);
  auto sys = principal_subpfaffians(table, 12);
  SeededRng rng(44);
  for (int it = 0; it < 5; ++it) {
    auto x = random_projective_point<Fp>(A.field, 4, rng);
    // pick a subset, evaluate the scalar matrix, compare
    const auto& sub = sys.subsets[static_cast<std::size_t>(rng.below(sys.subsets.size()))];
    DenseMatrix<Fp> scalar = evaluate(A, x);
    DenseMatrix<Fp> block(12, 12);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j)
        block(i, j) = scalar(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)]);
    std::size_t index = 0;
    for (std::size_t s = 0; s < sys.subsets.size(); ++s)
      if (sys.subsets[s] == sub) index = s;
    CHECK(pfaffian(block, A.field) == sys.polys[index].evaluate(x.coords));
  }
}

TEST_CASE("rank at a point equals the largest nonvanishing principal sub-pfaffian") {
  auto A = appendix14();
  PfaffianTable<Fp> table(A);
  SeededRng rng(55);
  for (int it = 0; it < 3; ++it) {
    auto x = random_projective_point<Fp>(A.field, 4, rng);
    const Eigen::Index rk = rank_at(A, x);
    Eigen::Index largest = 0;
    for (Eigen::Index size = 2; size <= A.n; size += 2) {
      auto sys = principal_subpfaffians(table, size);
      for (const auto& p : sys.polys) {
        if (!p.evaluate(x.coords).is_zero()) {
          largest = std::max(largest, size);
          break;
        }
      }
    }
    CHECK(rk == largest);
  }
}
