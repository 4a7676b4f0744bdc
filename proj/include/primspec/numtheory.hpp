#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace primspec {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin; exact for the whole 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// (p, s) with n = p^s, s >= 1, or nullopt.
std::optional<std::pair<std::uint64_t, std::uint64_t>> prime_power(std::uint64_t n);

/// Sorted (prime, exponent) pairs of n >= 1. Trial division for small
/// factors, Pollard-Brent rho for the cofactor.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize_u64(std::uint64_t n);

}  // namespace primspec
