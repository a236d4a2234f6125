#pragma once

#include <cstdint>
#include <vector>

namespace maxenergy {

struct PrimeWitness {
    std::uint64_t p;
    unsigned residue_class;  // p mod 4
};

/// Deterministic Miller-Rabin with a fixed witness set that is exact for
/// every 64-bit input.
bool is_prime(std::uint64_t n);

/// Smallest prime p >= n with p == 1 (mod 4). Requires n >= 2; throws
/// OverflowError if the search would pass 2^63.
PrimeWitness find_prime_1mod4(std::uint64_t n);

/// True iff p <= n + n^{3/5}/2, evaluated in binary64. Advisory: small n
/// may have no qualifying prime inside the window.
bool window_check(std::uint64_t n, std::uint64_t p);

/// The (p-1)/2 nonzero quadratic residues mod an odd prime p, ascending.
std::vector<std::uint64_t> quadratic_residues(std::uint64_t p);

/// Euler's criterion: a^{(p-1)/2} == 1 (mod p). False for a == 0 (mod p).
bool is_quadratic_residue(std::uint64_t a, std::uint64_t p);

namespace detail {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace detail

}  // namespace maxenergy
