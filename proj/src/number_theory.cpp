#include "maxenergy/number_theory.hpp"

#include <cmath>

#include "maxenergy/errors.hpp"

namespace maxenergy {

namespace detail {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace detail

namespace {

// Witness set exact for every n < 3.3 * 10^24, hence for all 64-bit inputs.
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_composite(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = detail::mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    int s = 0;
    std::uint64_t d = n - 1;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses)
        if (miller_rabin_composite(n, a, d, s)) return false;
    return true;
}

PrimeWitness find_prime_1mod4(std::uint64_t n) {
    if (n < 2) throw PreconditionError("prime search requires n >= 2");
    constexpr std::uint64_t kLimit = 1ull << 63;
    std::uint64_t c = n + (5 - n % 4) % 4;  // first candidate >= n with c == 1 (mod 4)
    while (true) {
        if (c >= kLimit)
            throw OverflowError("prime search passed 2^63");
        if (is_prime(c)) return PrimeWitness{c, static_cast<unsigned>(c % 4)};
        c += 4;
    }
}

bool window_check(std::uint64_t n, std::uint64_t p) {
    const double nd = static_cast<double>(n);
    return static_cast<double>(p) <= nd + std::pow(nd, 0.6) / 2.0;
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw DomainError("quadratic residues require an odd prime modulus");
    std::vector<bool> mark(p, false);
    for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k)
        mark[detail::mulmod(k, k, p)] = true;
    std::vector<std::uint64_t> out;
    out.reserve((p - 1) / 2);
    for (std::uint64_t a = 1; a < p; ++a)
        if (mark[a]) out.push_back(a);
    return out;
}

bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw DomainError("quadratic residues require an odd prime modulus");
    a %= p;
    if (a == 0) return false;
    return detail::powmod(a, (p - 1) / 2, p) == 1;
}

}  // namespace maxenergy
