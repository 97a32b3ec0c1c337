#pragma once

// Buchberger Groebner-basis engine over F_p in degrevlex order, sized for
// deciding projective emptiness of sub-Pfaffian ideals. Pair selection is the
// normal strategy (smallest lcm degree first); the coprime-leading-term and
// chain criteria prune pairs at pop time. The output basis is reduced: monic
// generators, pairwise non-divisible leading terms, fully tail-reduced.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewrank/linear_matrix.hpp"
#include "skewrank/multipoly.hpp"

namespace skewrank {

template <class S>
struct GroebnerBasis {
  static_assert(field_traits<S>::kind == FieldKind::prime,
                "Groebner bases are computed over prime fields only; reduce mod p first");
  std::vector<MultiPoly<S>> generators;  // monic, inter-reduced, sorted by leading term
  MonomialOrder order;
  std::uint32_t ideal_degree_bound = 0;  // max total degree seen during completion
};

// Remainder of f on division by the polynomials in B (full normal form:
// every term of the remainder is reducible by no leading term of B).
// Divisors are tried in list order, so the result is deterministic.
template <class S>
MultiPoly<S> normal_form(const MultiPoly<S>& f, const std::vector<MultiPoly<S>>& divisors) {
  MultiPoly<S> rem(f.nvars());
  MultiPoly<S> h = f;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(h.leading_monomial())) {
        const Monomial q = g.leading_monomial().divide_into(h.leading_monomial());
        const S c = h.leading_coeff() / g.leading_coeff();
        h = h - g.times_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem += MultiPoly<S>::term(h.leading_monomial(), h.leading_coeff());
      h = h - MultiPoly<S>::term(h.leading_monomial(), h.leading_coeff());
    }
  }
  return rem;
}

template <class S>
MultiPoly<S> normal_form(const MultiPoly<S>& f, const GroebnerBasis<S>& B) {
  return normal_form(f, B.generators);
}

namespace detail {

template <class S>
MultiPoly<S> s_polynomial(const MultiPoly<S>& f, const MultiPoly<S>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Monomial qf = f.leading_monomial().divide_into(l);
  const Monomial qg = g.leading_monomial().divide_into(l);
  using FT = field_traits<S>;
  return f.times_term(qf, FT::inverse(f.leading_coeff())) -
         g.times_term(qg, FT::inverse(g.leading_coeff()));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm_mono;
};

}  // namespace detail

// Reduced Groebner basis of the ideal generated by `gens`, deterministic for
// a given generator order. Throws DegreeCapExceeded if completion needs
// S-polynomials above `degree_cap`.
template <class S>
GroebnerBasis<S> buchberger(const std::vector<MultiPoly<S>>& gens, MonomialOrder order = {},
                            std::uint32_t degree_cap = 40) {
  static_assert(field_traits<S>::kind == FieldKind::prime,
                "Groebner bases are computed over prime fields only; reduce mod p first");

  GroebnerBasis<S> out;
  out.order = order;

  std::vector<MultiPoly<S>> basis;
  std::vector<detail::Pair> pairs;
  std::uint32_t maxdeg = 0;

  auto add_generator = [&](MultiPoly<S> h) {
    h = h.monic();
    maxdeg = std::max(maxdeg, h.total_degree());
    const std::size_t t = basis.size();
    for (std::size_t i = 0; i < t; ++i) {
      if (basis[i].is_zero()) continue;
      pairs.push_back({i, t, lcm(basis[i].leading_monomial(), h.leading_monomial())});
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    MultiPoly<S> r = normal_form(g, basis);
    if (!r.is_zero()) add_generator(std::move(r));
  }

  auto pair_before = [](const detail::Pair& a, const detail::Pair& b) {
    if (a.lcm_mono.degree() != b.lcm_mono.degree())
      return a.lcm_mono.degree() < b.lcm_mono.degree();
    if (a.lcm_mono != b.lcm_mono) return degrevlex_less(a.lcm_mono, b.lcm_mono);
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_before);
    detail::Pair pr = *best;
    pairs.erase(best);

    const MultiPoly<S>& f = basis[pr.i];
    const MultiPoly<S>& g = basis[pr.j];

    // Buchberger's first criterion: coprime leading terms.
    if (coprime(f.leading_monomial(), g.leading_monomial())) continue;

    // Chain criterion: some k with LT(k) | lcm(i,j) and both pairs (i,k),
    // (j,k) already handled (i.e. no longer queued).
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j || basis[k].is_zero()) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm_mono)) continue;
      bool queued = false;
      for (const auto& q : pairs) {
        if ((q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) ||
            (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k))) {
          queued = true;
          break;
        }
      }
      if (!queued) chained = true;
    }
    if (chained) continue;

    if (pr.lcm_mono.degree() > degree_cap) throw DegreeCapExceeded(static_cast<int>(degree_cap));

    MultiPoly<S> s = detail::s_polynomial(f, g);
    MultiPoly<S> r = normal_form(s, basis);
    if (r.is_zero()) continue;
    if (r.total_degree() > degree_cap) throw DegreeCapExceeded(static_cast<int>(degree_cap));
    add_generator(std::move(r));
  }

  // Minimalize: drop generators whose leading term is divisible by another's.
  std::vector<MultiPoly<S>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = basis[i].leading_monomial(), &mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each survivor against the others.
  std::vector<MultiPoly<S>> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly<S>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = normal_form(minimal[i], others).monic();
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly<S>& a, const MultiPoly<S>& b) {
    return degrevlex_less(a.leading_monomial(), b.leading_monomial());
  });

  out.generators = std::move(reduced);
  out.ideal_degree_bound = maxdeg;
  return out;
}

// ---------------------------------------------------------------------------
// Projective emptiness
// ---------------------------------------------------------------------------

enum class Emptiness { empty, nonempty_witnessed, undecided };

template <class S>
struct EmptinessResult {
  Emptiness verdict = Emptiness::undecided;
  // For `empty`: one pure-power leading term per variable, in variable order.
  std::vector<Monomial> pure_power_witnesses;
  // For `nonempty_witnessed`: a common zero over F_{p^e}, e <= 3.
  std::vector<Fq> witness_point;
  std::uint32_t witness_extension_degree = 0;
};

// Decides whether the projective zero locus of the homogeneous ideal, over
// the algebraic closure of F_p, is empty. A reduced basis whose leading terms
// include a pure power of every variable forces the only affine zero to be
// the origin (finitely many standard monomials), hence an empty projective
// locus; this criterion is exact for Groebner bases. When it fails, a common
// zero exists over the closure and an exhaustive search over P^{d-1}(F_{p^e})
// for e <= 3 looks for a witness.
template <class S>
EmptinessResult<S> projective_emptiness(const GroebnerBasis<S>& B,
                                        std::uint64_t point_budget = 2000000) {
  static_assert(field_traits<S>::kind == FieldKind::prime);
  EmptinessResult<S> res;
  std::vector<const MultiPoly<S>*> gens;
  for (const auto& g : B.generators) {
    if (!g.is_homogeneous()) throw NonHomogeneousInput();
    if (!g.is_zero()) gens.push_back(&g);
  }
  if (gens.empty()) {
    res.verdict = Emptiness::undecided;  // zero ideal: whole space, but no point to report
    return res;
  }
  const std::size_t nvars = gens.front()->nvars();
  const std::uint32_t p = static_cast<std::uint32_t>(gens.front()->leading_coeff().modulus());

  // Unit ideal: empty locus with no variable witnesses needed.
  for (const auto* g : gens) {
    if (g->leading_monomial().is_one()) {
      res.verdict = Emptiness::empty;
      return res;
    }
  }

  std::vector<Monomial> witnesses;
  bool all_covered = true;
  for (std::size_t v = 0; v < nvars && all_covered; ++v) {
    bool found = false;
    for (const auto* g : gens) {
      if (g->leading_monomial().is_pure_power(v)) {
        witnesses.push_back(g->leading_monomial());
        found = true;
        break;
      }
    }
    if (!found) all_covered = false;
  }
  if (all_covered) {
    res.verdict = Emptiness::empty;
    res.pure_power_witnesses = std::move(witnesses);
    return res;
  }

  // The locus is nonempty over the closure; look for a small-field witness.
  for (std::uint32_t e = 1; e <= 3; ++e) {
    ExtensionHandle F = make_extension(p, e);
    const std::uint64_t q = field_traits<Fq>::element_count(F);
    // points of P^{d-1}(F_q): sum_{lead} q^(nvars-1-lead)
    std::uint64_t total = 0, power = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
      total += power;
      power *= q;
    }
    if (total > point_budget) break;
    // canonical representatives: first nonzero coordinate equals 1
    for (std::size_t lead = 0; lead < nvars; ++lead) {
      std::uint64_t tail_count = 1;
      for (std::size_t i = lead + 1; i < nvars; ++i) tail_count *= q;
      for (std::uint64_t idx = 0; idx < tail_count; ++idx) {
        DenseVector<Fq> x(static_cast<Eigen::Index>(nvars));
        for (std::size_t i = 0; i < lead; ++i) x(static_cast<Eigen::Index>(i)) = Fq(F, 0);
        x(static_cast<Eigen::Index>(lead)) = Fq(F, 1);
        std::uint64_t rest = idx;
        for (std::size_t i = lead + 1; i < nvars; ++i) {
          x(static_cast<Eigen::Index>(i)) = field_traits<Fq>::element_at(F, rest % q);
          rest /= q;
        }
        bool zero_everywhere = true;
        for (const auto* g : gens) {
          Fq val = g->template evaluate<Fq>(x, [&](const S& c) { return lift_to(F, c); });
          if (!val.is_zero()) {
            zero_everywhere = false;
            break;
          }
        }
        if (zero_everywhere) {
          res.verdict = Emptiness::nonempty_witnessed;
          res.witness_point.assign(x.data(), x.data() + x.size());
          res.witness_extension_degree = e;
          return res;
        }
      }
    }
  }
  res.verdict = Emptiness::undecided;
  return res;
}

}  // namespace skewrank
