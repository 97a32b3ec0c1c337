#pragma once

// Sparse multivariate polynomials over an exact field. Terms are kept sorted
// in descending degrevlex order (x0 > x1 > ... > x_{d-1}), so the leading
// term is always front(). This is the one monomial order the library uses.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "skewrank/fields.hpp"

namespace skewrank {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> exponents) : e_(std::move(exponents)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), 0u);
  }
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint16_t>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i, std::uint16_t power = 1) {
    std::vector<std::uint16_t> e(nvars, 0);
    e[i] = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t degree() const { return deg_; }
  std::uint16_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint16_t> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& b) const {
    if (e_.size() != b.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > b.e_[i]) return false;
    return true;
  }

  // b / *this, defined when *this divides b
  Monomial divide_into(const Monomial& b) const {
    std::vector<std::uint16_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = static_cast<std::uint16_t>(b.e_[i] - e_[i]);
    return Monomial(std::move(e));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint16_t> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  // True when the monomial is a pure power of variable i.
  bool is_pure_power(std::size_t i) const {
    for (std::size_t j = 0; j < e_.size(); ++j)
      if (j != i && e_[j]) return false;
    return e_[i] > 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string str() const {
    if (deg_ == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (!e_[i]) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i);
      if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
  }

 private:
  std::vector<std::uint16_t> e_;
  std::uint32_t deg_ = 0;
};

// a < b in degrevlex: smaller total degree, or (equal degree) the last
// differing exponent of a exceeds that of b.
inline bool degrevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

// Tag mirroring the (single) supported monomial order.
struct MonomialOrder {
  enum Kind { degrevlex } kind = degrevlex;
};

template <class S>
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    S coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly zero(std::size_t nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(std::size_t nvars, S c) {
    MultiPoly p(nvars);
    if (!field_traits<S>::is_zero(c)) p.terms_.push_back({Monomial::one(nvars), std::move(c)});
    return p;
  }
  static MultiPoly term(Monomial m, S c) {
    MultiPoly p(m.nvars());
    if (!field_traits<S>::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const S& leading_coeff() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint32_t d = terms_.front().mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merged(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merged(a, b, true); }
  MultiPoly operator-() const {
    MultiPoly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }

  // *this * (c * m), fused since it is the inner loop of division and of the
  // Pfaffian expansion.
  MultiPoly times_term(const Monomial& m, const S& c) const {
    MultiPoly out(nvars_);
    if (field_traits<S>::is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
  }

  MultiPoly times_scalar(const S& c) const { return times_term(Monomial::one(nvars_), c); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    std::map<Monomial, S, DegRevLexGreater> acc;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Monomial m = ta.mono * tb.mono;
        S c = ta.coeff * tb.coeff;
        auto it = acc.find(m);
        if (it == acc.end()) {
          if (!field_traits<S>::is_zero(c)) acc.emplace(std::move(m), std::move(c));
        } else {
          it->second += c;
          if (field_traits<S>::is_zero(it->second)) acc.erase(it);
        }
      }
    }
    MultiPoly out(a.nvars_);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) out.terms_.push_back({m, c});
    return out;
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return times_scalar(field_traits<S>::inverse(leading_coeff()));
  }

  // Evaluation at a point whose scalars may live in an extension of the
  // coefficient field; `lift` converts coefficients into the point's field.
  template <class S2, class Lift>
  S2 evaluate(const DenseVector<S2>& x, Lift lift) const {
    S2 acc{};  // raw zero, adopts the field on first accumulate
    for (const auto& t : terms_) {
      S2 v = lift(t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (std::uint16_t k = 0; k < t.mono[i]; ++k) v = v * x(static_cast<Eigen::Index>(i));
      }
      acc = acc + v;
    }
    return acc;
  }

  S evaluate(const DenseVector<S>& x) const {
    return evaluate<S>(x, [](const S& c) { return c; });
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Plain-text form, e.g. "x0^2*x1 - 2*x0*x3^2 + 3": terms in descending
  // degrevlex order, "*" between factors, "^" for powers.
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = field_traits<S>::to_string(t.coeff);
      bool neg = !c.empty() && c[0] == '-';
      if (first) {
        if (neg) s += "-", c = c.substr(1);
      } else {
        s += neg ? " - " : " + ";
        if (neg) c = c.substr(1);
      }
      first = false;
      if (t.mono.is_one()) {
        s += c;
      } else if (c == "1") {
        s += t.mono.str();
      } else {
        s += c + "*" + t.mono.str();
      }
    }
    return s;
  }

  // Direct term construction for callers that produce sorted unique terms.
  static MultiPoly from_sorted_terms(std::size_t nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  static MultiPoly merged(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly out(a.nvars_ ? a.nvars_ : b.nvars_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const Monomial &ma = a.terms_[i].mono, &mb = b.terms_[j].mono;
      if (ma == mb) {
        S c = subtract ? S(a.terms_[i].coeff - b.terms_[j].coeff)
                       : S(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!field_traits<S>::is_zero(c)) out.terms_.push_back({ma, std::move(c)});
        ++i, ++j;
      } else if (degrevlex_less(mb, ma)) {
        out.terms_.push_back(a.terms_[i]);
        ++i;
      } else {
        out.terms_.push_back({mb, subtract ? -b.terms_[j].coeff : b.terms_[j].coeff});
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j)
      out.terms_.push_back({b.terms_[j].mono, subtract ? -b.terms_[j].coeff : b.terms_[j].coeff});
    return out;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;  // descending degrevlex, nonzero coefficients
};

}  // namespace skewrank
