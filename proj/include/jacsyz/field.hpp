#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "jacsyz/errors.hpp"
#include "jacsyz/primes.hpp"

namespace jacsyz {

/// Coefficient field of a computation.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t prime = 0;  // meaningful iff kind == PrimeField

  static FieldSpec rationals() { return {}; }
  /// Throws DomainError unless p is a prime with 3 < p < 2^62.
  static FieldSpec prime_field(std::uint64_t p);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace modarith {

/// a*b mod p for p < 2^62, via a long-double quotient estimate.
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  auto q = static_cast<std::uint64_t>(static_cast<long double>(a) * b / p);
  auto r = static_cast<std::int64_t>(a * b - q * p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  else if (r >= static_cast<std::int64_t>(p)) r -= static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Inverse of a nonzero residue via the extended Euclidean algorithm.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InternalError("modular inverse of a non-unit");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

/// Residue of an integer; p must be < 2^62.
inline std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

/// Residue of a rational; throws BadPrime when p divides the denominator.
inline std::uint64_t reduce(const mpq_class& q, std::uint64_t p) {
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw BadPrime("prime " + std::to_string(p) + " divides a denominator");
  return mul(mpz_fdiv_ui(q.get_num_mpz_t(), p), inv(den, p), p);
}

}  // namespace modarith

/// The field of rational numbers, elements are normalized GMP rationals.
class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_rational(const mpq_class& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw InternalError("division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  /// Canonical text: reduced fraction.
  std::string to_string(const Elem& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/p for a prime 3 < p < 2^62; elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Elem from_rational(const mpq_class& q) const { return modarith::reduce(q, p_); }

  Elem add(Elem a, Elem b) const { return modarith::add(a, b, p_); }
  Elem sub(Elem a, Elem b) const { return modarith::sub(a, b, p_); }
  Elem mul(Elem a, Elem b) const { return modarith::mul(a, b, p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const { return modarith::inv(a, p_); }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  std::string to_string(Elem a) const { return std::to_string(a); }
  FieldSpec spec() const { return FieldSpec::prime_field(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

template <class F>
concept Field = requires(const F& f, const typename F::Elem& a) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
};

}  // namespace jacsyz
