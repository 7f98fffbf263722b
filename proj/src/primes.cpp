#include "jacsyz/primes.hpp"

#include <mutex>

#include "jacsyz/field.hpp"

namespace jacsyz {

namespace {

unsigned __int128 mulmod128(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<unsigned __int128>(a) * b % n;
}

std::uint64_t powmod128(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1;
  a %= n;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(mulmod128(r, a, n));
    a = static_cast<std::uint64_t>(mulmod128(a, a, n));
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>(mulmod128(x, x, n));
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t previous_prime(std::uint64_t n) {
  if (n <= 2) throw DomainError("no prime below 2");
  for (std::uint64_t c = n - 1;; --c) {
    if (is_prime(c)) return c;
  }
}

std::uint64_t next_prime(std::uint64_t n) {
  for (std::uint64_t c = n + 1;; ++c) {
    if (is_prime(c)) return c;
  }
}

std::uint64_t working_prime(std::size_t index) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mutex);
  while (primes.size() <= index) {
    primes.push_back(previous_prime(primes.empty() ? kMaxModulus : primes.back()));
  }
  return primes[index];
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p <= 3 || p >= kMaxModulus || !is_prime(p)) {
    throw DomainError("field prime must be a prime with 3 < p < 2^62, got " + std::to_string(p));
  }
  FieldSpec s;
  s.kind = Kind::PrimeField;
  s.prime = p;
  return s;
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "rat" : "fp:" + std::to_string(prime);
}

PrimeField::PrimeField(std::uint64_t p) : p_(FieldSpec::prime_field(p).prime) {}

}  // namespace jacsyz
