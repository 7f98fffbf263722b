#pragma once

#include <cstdint>
#include <vector>

namespace jacsyz {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Largest prime strictly below n (n > 2).
std::uint64_t previous_prime(std::uint64_t n);

/// Smallest prime strictly above n.
std::uint64_t next_prime(std::uint64_t n);

/// The index-th prime below 2^62 in descending order (index 0 is the largest).
/// These are the working primes of the multi-modular routines; the sequence is
/// fixed so runs are reproducible.
std::uint64_t working_prime(std::size_t index);

/// Upper limit (exclusive) on prime moduli accepted by PrimeField.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

}  // namespace jacsyz
