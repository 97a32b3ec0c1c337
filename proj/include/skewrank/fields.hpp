#pragma once

// Exact field arithmetic behind a single scalar contract: prime fields F_p
// (p an odd prime), extension fields F_{p^e}, and arbitrary-precision
// rationals. All three scalar types plug into Eigen::Matrix via NumTraits.
//
// Elements of the finite fields carry their field alongside the value, so
// values are self-contained and safe to move between threads. The default
// constructor and integer constructors produce "raw" integer constants
// without a field attached (Eigen materialises Scalar(0)/Scalar(1) in generic
// code); raw constants adopt the field of the first bound operand.

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewrank/errors.hpp"
#include "skewrank/random.hpp"

namespace skewrank {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational with an always-reduced fraction. A value type
// of our own wrapping boost's cpp_rational: keeping boost's operator
// templates out of Eigen expressions avoids their eager SFINAE probing of
// matrix types, and pins down a plain (non-expression-template) result type.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long v) : v_(v) {}  // NOLINT: implicit for Eigen literals
  explicit Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ZeroInversion();
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  std::string str() const { return v_.str(); }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin; bases {2, 7, 61} decide primality below 2^32.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    std::uint64_t x = 1, base = a % n, e = d;
    while (e) {
      if (e & 1) x = x * base % n;
      base = base * base % n;
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::int64_t mod_reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

// Inverse mod p by extended Euclid.
inline std::int64_t mod_inverse(std::int64_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw ZeroInversion();
  return t < 0 ? t + p : t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// F_p
// ---------------------------------------------------------------------------

// Field descriptor for F_p. Construction validates that p is an odd prime:
// characteristic 2 is rejected outright, skew-symmetry degenerates there.
struct PrimeField {
  std::uint32_t p = 0;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p_) : p(p_) {
    if (p == 2) throw UnsupportedField("characteristic 2 is not supported");
    if (!detail::is_prime_u32(p)) throw UnsupportedField(std::to_string(p) + " is not prime");
  }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long raw) : v_(raw), p_(0) {}  // NOLINT: implicit for Eigen literals
  Fp(const PrimeField& field, long long v) : v_(detail::mod_reduce(v, field.p)), p_(field.p) {}

  std::uint32_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }  // in [0,p) when bound, raw otherwise
  bool bound() const { return p_ != 0; }

  bool is_zero() const { return bound() ? v_ == 0 : v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t p = merge(a, b);
    if (!p) return Fp(a.v_ + b.v_);
    return make(p, detail::mod_reduce(a.lift(p) + b.lift(p), p));
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint32_t p = merge(a, b);
    if (!p) return Fp(a.v_ - b.v_);
    return make(p, detail::mod_reduce(a.lift(p) - b.lift(p), p));
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t p = merge(a, b);
    if (!p) return Fp(a.v_ * b.v_);
    return make(p, a.lift(p) * b.lift(p) % p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return bound() ? make(p_, v_ ? p_ - v_ : 0) : Fp(-v_); }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  Fp inverse() const {
    if (!bound()) {
      if (v_ == 1 || v_ == -1) return *this;
      if (v_ == 0) throw ZeroInversion();
      throw FieldMismatch("inverse of unbound constant");
    }
    if (v_ == 0) throw ZeroInversion();
    return make(p_, detail::mod_inverse(v_, p_));
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t p = merge(a, b);
    if (!p) return a.v_ == b.v_;
    return a.lift(p) == b.lift(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static Fp make(std::uint32_t p, std::int64_t v) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  std::int64_t lift(std::uint32_t p) const { return p_ ? v_ : detail::mod_reduce(v_, p); }
  static std::uint32_t merge(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw FieldMismatch("F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
    return a.p_ ? a.p_ : b.p_;
  }

  std::int64_t v_;
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// F_{p^e}
// ---------------------------------------------------------------------------

// Extension field descriptor: F_p[x]/(modulus). The modulus is monic of
// degree e, stored with ascending coefficients (constant term first).
struct ExtensionField {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;  // size e+1, modulus[e] == 1

  friend bool operator==(const ExtensionField&, const ExtensionField&) = default;
};

using ExtensionHandle = std::shared_ptr<const ExtensionField>;

namespace detail {

// Polynomial helpers over F_p with ascending coefficient vectors.
inline void poly_trim(std::vector<std::uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b,
                                              const std::vector<std::uint32_t>& mod,
                                              std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  // reduce by the monic modulus
  const std::size_t e = mod.size() - 1;
  for (std::size_t i = prod.size(); i-- > e;) {
    std::uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < e; ++j) {
      prod[i - e + j] = (prod[i - e + j] + std::uint64_t(p - mod[j] % p) % p * c) % p;
    }
  }
  std::vector<std::uint32_t> out(e, 0);
  for (std::size_t i = 0; i < e && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  poly_trim(out);
  return out;
}

inline std::vector<std::uint32_t> poly_powmod(std::vector<std::uint32_t> base, std::uint64_t exp,
                                              const std::vector<std::uint32_t>& mod,
                                              std::uint32_t p) {
  std::vector<std::uint32_t> result{1};
  while (exp) {
    if (exp & 1) result = poly_mulmod(result, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    exp >>= 1;
  }
  return result;
}

inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& f,
                                           std::uint32_t p) {
  poly_trim(a);
  const std::int64_t lead_inv = mod_inverse(f.back(), p);
  while (a.size() >= f.size()) {
    std::uint64_t c = a.back() % p * lead_inv % p;
    if (c) {
      std::size_t off = a.size() - f.size();
      for (std::size_t i = 0; i < f.size(); ++i)
        a[off + i] = static_cast<std::uint32_t>((a[off + i] + std::uint64_t(p - f[i] % p) % p * c) % p);
    }
    a.pop_back();
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline std::vector<std::uint32_t> poly_gcd(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                                           std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b
    std::int64_t lead_inv = mod_inverse(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t f = a.back() % p * lead_inv % p;
      if (f) {
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
          a[off + i] = static_cast<std::uint32_t>((a[off + i] + std::uint64_t(p - b[i] % p) % p * f) % p);
        }
      }
      a.pop_back();
      poly_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

inline bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  if (e == 0) return false;
  std::vector<std::uint32_t> x{0, 1};
  // x^(p^e) == x mod f, and gcd(x^(p^(e/q)) - x, f) == 1 for prime q | e.
  std::uint64_t pe = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (pe > (1ULL << 40) / p) throw TooLarge("extension field order exceeds 2^40");
    pe *= p;
  }
  std::vector<std::uint32_t> xe = poly_powmod(x, pe, f, p);
  std::vector<std::uint32_t> diff = xe;
  // diff = (x^(p^e) - x) mod f
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
  diff = poly_mod(std::move(diff), f, p);
  if (!diff.empty()) return false;
  // collect distinct prime divisors of e
  std::vector<std::uint32_t> primes;
  std::uint32_t t = e;
  for (std::uint32_t q = 2; q * q <= t; ++q) {
    if (t % q == 0) {
      primes.push_back(q);
      while (t % q == 0) t /= q;
    }
  }
  if (t > 1) primes.push_back(t);
  for (std::uint32_t q : primes) {
    std::uint64_t pq = 1;
    for (std::uint32_t i = 0; i < e / q; ++i) pq *= p;
    std::vector<std::uint32_t> xq = poly_powmod(x, pq, f, p);
    std::vector<std::uint32_t> d = xq;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
    poly_trim(d);
    std::vector<std::uint32_t> g = poly_gcd(d, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

// Builds F_{p^e} with the deterministically chosen modulus: the monic
// irreducible whose non-leading coefficients (c_{e-1},...,c_0), read as a
// base-p number, are smallest. Reproducible across runs and platforms.
inline ExtensionHandle make_extension(std::uint32_t p, std::uint32_t e) {
  PrimeField base(p);  // validates p
  if (e < 1) throw UnsupportedField("extension degree must be >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (count > (1ULL << 40) / p) throw TooLarge("extension degree too large");
    count *= p;
  }
  for (std::uint64_t value = 0; value < count; ++value) {
    std::vector<std::uint32_t> f(e + 1, 0);
    f[e] = 1;
    std::uint64_t v = value;
    for (std::uint32_t i = 0; i < e; ++i) {  // least significant digit -> constant term
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (detail::poly_irreducible(f, p)) {
      auto field = std::make_shared<ExtensionField>();
      field->p = p;
      field->e = e;
      field->modulus = f;
      return field;
    }
  }
  throw Error("no irreducible modulus found");  // unreachable: they always exist
}

// Builds the extension with a caller-supplied modulus (validated).
inline ExtensionHandle make_extension(std::uint32_t p, std::uint32_t e,
                                      std::vector<std::uint32_t> modulus) {
  PrimeField base(p);
  if (modulus.size() != e + 1 || modulus[e] % p != 1)
    throw UnsupportedField("modulus must be monic of degree e");
  for (auto& c : modulus) c %= p;
  if (!detail::poly_irreducible(modulus, p)) throw UnsupportedField("modulus is reducible");
  auto field = std::make_shared<ExtensionField>();
  field->p = p;
  field->e = e;
  field->modulus = std::move(modulus);
  return field;
}

class Fq {
 public:
  Fq() = default;
  Fq(long long raw) : raw_(raw) {}  // NOLINT: implicit for Eigen literals
  Fq(ExtensionHandle field, std::vector<std::uint32_t> coeffs) : field_(std::move(field)) {
    coeffs.resize(field_->e, 0);
    for (auto& c : coeffs) c %= field_->p;
    coeffs_ = std::move(coeffs);
  }
  Fq(const ExtensionHandle& field, long long v) : field_(field), coeffs_(field->e, 0) {
    coeffs_[0] = static_cast<std::uint32_t>(detail::mod_reduce(v, field->p));
  }

  bool bound() const { return field_ != nullptr; }
  const ExtensionHandle& field() const { return field_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  std::int64_t raw() const { return raw_; }

  bool is_zero() const {
    if (!bound()) return raw_ == 0;
    for (auto c : coeffs_)
      if (c) return false;
    return true;
  }

  // True when the element lies in the prime subfield; value() is then valid.
  bool in_prime_subfield() const {
    if (!bound()) return true;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i]) return false;
    return true;
  }
  std::int64_t value() const { return bound() ? coeffs_[0] : raw_; }

  friend Fq operator+(const Fq& a, const Fq& b) { return combine(a, b, false); }
  friend Fq operator-(const Fq& a, const Fq& b) { return combine(a, b, true); }
  friend Fq operator*(const Fq& a, const Fq& b) {
    const ExtensionHandle f = merge(a, b);
    if (!f) return Fq(a.raw_ * b.raw_);
    Fq x = a.lift(f), y = b.lift(f);
    std::vector<std::uint32_t> prod =
        detail::poly_mulmod(x.coeffs_, y.coeffs_, f->modulus, f->p);
    prod.resize(f->e, 0);
    return Fq(f, std::move(prod));
  }
  friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inverse(); }
  Fq operator-() const {
    if (!bound()) return Fq(-raw_);
    std::vector<std::uint32_t> c(coeffs_);
    for (auto& x : c) x = x ? field_->p - x : 0;
    return Fq(field_, std::move(c));
  }

  Fq& operator+=(const Fq& b) { return *this = *this + b; }
  Fq& operator-=(const Fq& b) { return *this = *this - b; }
  Fq& operator*=(const Fq& b) { return *this = *this * b; }
  Fq& operator/=(const Fq& b) { return *this = *this / b; }

  Fq inverse() const {
    if (!bound()) {
      if (raw_ == 1 || raw_ == -1) return *this;
      if (raw_ == 0) throw ZeroInversion();
      throw FieldMismatch("inverse of unbound constant");
    }
    if (is_zero()) throw ZeroInversion();
    // extended Euclid in F_p[x] against the modulus
    const std::uint32_t p = field_->p;
    std::vector<std::uint32_t> r0 = field_->modulus, r1 = coeffs_;
    detail::poly_trim(r1);
    std::vector<std::uint32_t> t0{}, t1{1};
    while (!r1.empty()) {
      // divide r0 by r1
      std::vector<std::uint32_t> q;
      std::vector<std::uint32_t> rem = r0;
      std::int64_t lead_inv = detail::mod_inverse(r1.back(), p);
      if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        std::uint64_t fcoef = rem.back() % p * lead_inv % p;
        std::size_t off = rem.size() - r1.size();
        if (fcoef) {
          q[off] = static_cast<std::uint32_t>(fcoef);
          for (std::size_t i = 0; i < r1.size(); ++i)
            rem[off + i] = static_cast<std::uint32_t>(
                (rem[off + i] + std::uint64_t(p - r1[i]) % p * fcoef) % p);
        }
        rem.pop_back();
        detail::poly_trim(rem);
        if (rem.empty()) break;
      }
      // t2 = t0 - q*t1
      std::vector<std::uint32_t> qt1;
      if (!q.empty() && !t1.empty()) {
        qt1.assign(q.size() + t1.size() - 1, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (!q[i]) continue;
          for (std::size_t j = 0; j < t1.size(); ++j)
            qt1[i + j] = static_cast<std::uint32_t>((qt1[i + j] + std::uint64_t(q[i]) * t1[j]) % p);
        }
      }
      std::vector<std::uint32_t> t2(std::max(t0.size(), qt1.size()), 0);
      for (std::size_t i = 0; i < t2.size(); ++i) {
        std::uint64_t a = i < t0.size() ? t0[i] : 0;
        std::uint64_t b = i < qt1.size() ? qt1[i] : 0;
        t2[i] = static_cast<std::uint32_t>((a + p - b % p) % p);
      }
      detail::poly_trim(t2);
      r0 = std::exchange(r1, rem);
      t0 = std::exchange(t1, t2);
    }
    if (r0.size() != 1) throw ZeroInversion();  // gcd not constant: impossible for irreducible mod
    std::int64_t scale = detail::mod_inverse(r0[0], p);
    std::vector<std::uint32_t> out(field_->e, 0);
    for (std::size_t i = 0; i < t0.size() && i < out.size(); ++i)
      out[i] = static_cast<std::uint32_t>(std::uint64_t(t0[i]) * scale % p);
    return Fq(field_, std::move(out));
  }

  friend bool operator==(const Fq& a, const Fq& b) {
    const ExtensionHandle f = merge(a, b);
    if (!f) return a.raw_ == b.raw_;
    return a.lift(f).coeffs_ == b.lift(f).coeffs_;
  }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

 private:
  static Fq combine(const Fq& a, const Fq& b, bool subtract) {
    const ExtensionHandle f = merge(a, b);
    if (!f) return Fq(subtract ? a.raw_ - b.raw_ : a.raw_ + b.raw_);
    Fq x = a.lift(f), y = b.lift(f);
    std::vector<std::uint32_t> c(f->e, 0);
    for (std::uint32_t i = 0; i < f->e; ++i) {
      std::uint64_t rhs = subtract ? f->p - y.coeffs_[i] : y.coeffs_[i];
      c[i] = static_cast<std::uint32_t>((x.coeffs_[i] + rhs) % f->p);
    }
    return Fq(f, std::move(c));
  }
  Fq lift(const ExtensionHandle& f) const {
    if (bound()) return *this;
    return Fq(f, raw_);
  }
  static ExtensionHandle merge(const Fq& a, const Fq& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_ && !(*a.field_ == *b.field_))
      throw FieldMismatch("different extension fields");
    return a.field_ ? a.field_ : b.field_;
  }

  ExtensionHandle field_;
  std::vector<std::uint32_t> coeffs_;  // ascending, size e when bound
  std::int64_t raw_ = 0;
};

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

// Descriptor for the rationals. random elements are uniform integers in
// [-sample_bound, sample_bound]; cf. field_traits<Rational>::random.
struct RationalField {
  std::int64_t sample_bound = 10000;
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

// ---------------------------------------------------------------------------
// Uniform trait interface used by the generic (scalar-templated) code.
// ---------------------------------------------------------------------------

enum class FieldKind { prime, extension, rational };

template <class S>
struct field_traits;

template <>
struct field_traits<Fp> {
  using context_type = PrimeField;
  static constexpr FieldKind kind = FieldKind::prime;
  static constexpr bool finite = true;

  static Fp make(const PrimeField& F, long long v) { return Fp(F, v); }
  static Fp zero(const PrimeField& F) { return Fp(F, 0); }
  static Fp one(const PrimeField& F) { return Fp(F, 1); }
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static Fp inverse(const Fp& a) { return a.inverse(); }
  static Fp random(const PrimeField& F, SeededRng& rng) {
    return Fp(F, static_cast<long long>(rng.below(F.p)));
  }
  static std::uint64_t element_count(const PrimeField& F) { return F.p; }
  static Fp element_at(const PrimeField& F, std::uint64_t i) {
    return Fp(F, static_cast<long long>(i));
  }
  static std::string to_string(const Fp& a) { return std::to_string(a.value()); }
  static std::string name(const PrimeField& F) { return "F_" + std::to_string(F.p); }
};

template <>
struct field_traits<Fq> {
  using context_type = ExtensionHandle;
  static constexpr FieldKind kind = FieldKind::extension;
  static constexpr bool finite = true;

  static Fq make(const ExtensionHandle& F, long long v) { return Fq(F, v); }
  static Fq zero(const ExtensionHandle& F) { return Fq(F, 0); }
  static Fq one(const ExtensionHandle& F) { return Fq(F, 1); }
  static bool is_zero(const Fq& a) { return a.is_zero(); }
  static Fq inverse(const Fq& a) { return a.inverse(); }
  static Fq random(const ExtensionHandle& F, SeededRng& rng) {
    std::vector<std::uint32_t> c(F->e);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(F->p));
    return Fq(F, std::move(c));
  }
  static std::uint64_t element_count(const ExtensionHandle& F) {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < F->e; ++i) n *= F->p;
    return n;
  }
  static Fq element_at(const ExtensionHandle& F, std::uint64_t i) {
    std::vector<std::uint32_t> c(F->e);
    for (std::uint32_t k = 0; k < F->e; ++k) {
      c[k] = static_cast<std::uint32_t>(i % F->p);
      i /= F->p;
    }
    return Fq(F, std::move(c));
  }
  static std::string to_string(const Fq& a) {
    if (!a.bound()) return std::to_string(a.raw());
    std::string s = "[";
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a.coeffs()[i]);
    }
    return s + "]";
  }
  static std::string name(const ExtensionHandle& F) {
    return "F_" + std::to_string(F->p) + "^" + std::to_string(F->e);
  }
};

template <>
struct field_traits<Rational> {
  using context_type = RationalField;
  static constexpr FieldKind kind = FieldKind::rational;
  static constexpr bool finite = false;

  static Rational make(const RationalField&, long long v) { return Rational(v); }
  static Rational zero(const RationalField&) { return Rational(0); }
  static Rational one(const RationalField&) { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static Rational inverse(const Rational& a) {
    if (a.is_zero()) throw ZeroInversion();
    return 1 / a;
  }
  static Rational random(const RationalField& F, SeededRng& rng) {
    return Rational(rng.int_in(-F.sample_bound, F.sample_bound));
  }
  static std::string to_string(const Rational& a) { return a.str(); }
  static std::string name(const RationalField&) { return "Q"; }
};

inline std::ostream& operator<<(std::ostream& os, const Fp& a) {
  return os << field_traits<Fp>::to_string(a);
}
inline std::ostream& operator<<(std::ostream& os, const Fq& a) {
  return os << field_traits<Fq>::to_string(a);
}
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

// Cross-field conversions used at module boundaries.

inline Fq lift_to(const ExtensionHandle& F, const Fp& a) {
  if (a.bound() && a.modulus() != F->p) throw FieldMismatch("lift across characteristics");
  return Fq(F, a.value());
}

// Reduces a rational into F_p; throws when the denominator vanishes mod p.
inline Fp reduce_mod(const PrimeField& F, const Rational& a) {
  const BigInt p(F.p);
  const BigInt d = a.denominator() % p;
  if (d == 0) throw FieldMismatch("denominator vanishes mod " + std::to_string(F.p));
  const std::int64_t nv = static_cast<std::int64_t>(a.numerator() % p);
  const std::int64_t dv = static_cast<std::int64_t>(d);
  return Fp(F, nv) / Fp(F, dv);
}

}  // namespace skewrank

// Eigen scalar plumbing.
#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<skewrank::Fp> : GenericNumTraits<skewrank::Fp> {
  typedef skewrank::Fp Real;
  typedef skewrank::Fp NonInteger;
  typedef skewrank::Fp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 6,
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<skewrank::Fq> : GenericNumTraits<skewrank::Fq> {
  typedef skewrank::Fq Real;
  typedef skewrank::Fq NonInteger;
  typedef skewrank::Fq Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 40,
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<skewrank::Rational> : GenericNumTraits<skewrank::Rational> {
  typedef skewrank::Rational Real;
  typedef skewrank::Rational NonInteger;
  typedef skewrank::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 60,
    MulCost = 60,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace skewrank {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

}  // namespace skewrank
