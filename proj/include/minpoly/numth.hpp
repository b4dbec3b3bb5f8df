#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minpoly/bigint.hpp"

namespace minpoly::numth {

/// All primes up to and including `bound`, ascending.
struct PrimeList {
    long bound = 0;
    std::vector<long> primes;
};

/// Base-p digits of an integer, least significant first, zero-padded to a
/// fixed width.
struct DigitExpansion {
    long base = 2;
    std::vector<long> digits;

    std::uint64_t value() const;
};

/// lcm(1..bound) kept in factored form: one entry (p, e) per prime p <= bound
/// with e the largest exponent such that p^e <= bound.
struct LcmFactorization {
    long bound = 1;
    std::vector<std::pair<long, long>> factors; // ascending by prime

    /// Materializes the (large) integer value.
    BigInt value() const;
    /// Exponent of p, or 0 if p does not appear.
    long exponent_of(long p) const;
};

/// Sieve of Eratosthenes. N = 1 gives an empty list.
PrimeList primes_upto(long n);

/// p-adic valuation of n >= 1. Rejects n = 0.
long nu_p(std::uint64_t n, long p);
long nu_p(const BigInt& n, long p);

/// Largest v with p^v <= n. Integer arithmetic only.
long floor_log(long n, long p);

LcmFactorization lcm_range(long n);

/// Little-endian base-p digits of n, exactly `width` of them.
/// Rejects n >= p^width.
DigitExpansion digits(std::uint64_t n, long p, long width);

} // namespace minpoly::numth
