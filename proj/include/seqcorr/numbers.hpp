#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

// Integer number theory used by the sequence generators and correlation
// checks: primality, modular arithmetic, quadratic residues, orders.
// Everything is deterministic and exact for the full 64-bit range.

namespace seqcorr {

/// Deterministic primality test (Miller-Rabin with a witness set that is
/// exact for all 64-bit inputs).
bool is_prime(std::uint64_t n);

/// (base^exp) mod m, m >= 1.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Multiplicative inverse of a modulo m (m >= 2). Throws std::invalid_argument
/// when gcd(a, m) != 1.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);

/// Legendre symbol (n/p) in {-1, 0, 1}, computed by Euler's criterion.
/// p must be an odd prime; throws otherwise.
int legendre_symbol(std::int64_t n, std::uint64_t p);

/// Greatest even integer strictly below p/3, for odd primes p >= 7.
/// Rejects p < 7 (there is no positive even number below p/3).
std::uint64_t el3(std::uint64_t p);

/// Distinct prime factors of n >= 2, sorted ascending. Pollard rho under the
/// hood, so large prime factors are fine.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// True iff a generates the multiplicative group mod the prime p.
bool is_primitive_root(std::uint64_t a, std::uint64_t p);

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

/// lcm with an overflow guard; throws std::overflow_error when a*b/gcd does
/// not fit 64 bits.
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// i mod n mapped into [0, n), correct for negative i. Realizes the cyclic
/// index convention s_{-i} = s_{N-i}.
inline std::size_t floor_mod(std::int64_t i, std::size_t n) {
    std::int64_t m = i % static_cast<std::int64_t>(n);
    if (m < 0) m += static_cast<std::int64_t>(n);
    return static_cast<std::size_t>(m);
}

}  // namespace seqcorr
