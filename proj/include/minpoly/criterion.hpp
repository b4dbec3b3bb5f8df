#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minpoly/bigint.hpp"

namespace minpoly::criterion {

/// Asks whether some P in S_N is divisible by x^a (1-x)^b. Requires a+b < N.
struct DivisorQuery {
    long N = 1;
    long a = 0;
    long b = 0;

    long tail_length() const { return N - a - b; } // R + 1
    bool operator==(const DivisorQuery&) const = default;
};

/// The integers c_n = lcm(1..N) / ((a+b+n+1) * C(a+b+n, a)), n = 0..R.
struct BezoutCoefficients {
    DivisorQuery query;
    std::vector<BigInt> c;
};

struct PrimeCheck {
    long p = 2;
    long required = 0;           // floor_log(N, p)
    std::optional<long> n_p;     // first index achieving the requirement
    long achieved = 0;           // valuation at n_p, or the best seen if absent
};

struct CriterionReport {
    DivisorQuery query;
    bool holds = false;
    std::vector<PrimeCheck> per_prime;       // ascending by p
    std::optional<BigInt> gcd_value;         // filled by the gcd path
};

void validate(const DivisorQuery& q);

BezoutCoefficients bezout_coefficients(const DivisorQuery& q);

/// gcd{c_0..c_R} with early exit at 1; holds iff the gcd is 1.
std::pair<bool, BigInt> decide_by_gcd(const DivisorQuery& q);

/// Per-prime search for n_p with
/// nu_p((a+b+n+1) * C(a+b+n, a)) >= floor_log(N, p), n ascending from 0.
CriterionReport decide_by_primes(const DivisorQuery& q);

/// nu_p((a+b+n+1) * C(a+b+n, a)) without materializing the binomial.
long term_valuation(const DivisorQuery& q, long n, long p);

} // namespace minpoly::criterion
