#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minpoly/numth.hpp"
#include "minpoly/witness.hpp"

namespace minpoly::theorems {

/// The per-prime index n_p of the constructive main-theorem proof, built
/// from the base-p digit expansions of 2M and 3M with M = floor(N/6).
struct ConstructiveNp {
    long N = 1;
    long p = 2;
    long M = 0;
    long v = 0; // floor_log(N, p)
    numth::DigitExpansion a_digits; // digits of 2M, width v+1
    numth::DigitExpansion b_digits; // digits of 3M, width v+1
    long i1 = 0;
    long n_p = 0;
};

struct ConditionCheck {
    long p = 2;
    long n_p = 0;
    long v = 0;
    long achieved = 0; // nu_p((5M+n_p+1) * C(5M+n_p, 2M))
    bool c1 = false;   // n_p >= 0
    bool c2 = false;   // achieved >= v
    bool c3 = false;   // 5M + n_p + 1 <= N
    bool ok() const { return c1 && c2 && c3; }
};

struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// One row of the divisor census: the largest a+b admitting a member of S_N
/// divisible by x^a (1-x)^b, with every attaining pair.
struct CensusRecord {
    long N = 1;
    long max_sum = 0;
    std::vector<std::pair<long, long>> attaining_pairs; // ascending by a
    Rational ratio; // max_sum / N

    bool operator==(const CensusRecord&) const = default;
};

ConstructiveNp constructive_np(long N, long p);

/// Checks conditions (C1)-(C3) for every prime p <= N; throws
/// TheoremViolation if any fails.
std::vector<ConditionCheck> verify_C123(long N);

/// Full main-theorem verification at one N: conditions (C1)-(C3), the
/// per-prime criterion inequality for the constructive n_p, and a certified
/// witness for (N, 3*floor(N/6), 2*floor(N/6)).
witness::Witness verify_main_theorem(long N);

CensusRecord census_one(long N);
std::vector<CensusRecord> divisor_census(long n_lo, long n_hi);

/// Exact integer form of the Gelfond-Shnirelman-Nair bound:
/// lcm(1..N) >= 4^floor((N-1)/2).
bool gsn_inequality_check(long N);

std::string census_csv_header();
std::string census_record_csv(const CensusRecord& r);

} // namespace minpoly::theorems
