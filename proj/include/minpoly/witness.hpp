#pragma once

#include <stdexcept>
#include <vector>

#include "minpoly/criterion.hpp"
#include "minpoly/polyx.hpp"

namespace minpoly::witness {

/// A certified member of S_N divisible by x^a (1-x)^b, carrying both the
/// tail coefficients y_n (basis (1-x)^n) and the monomial expansion.
struct Witness {
    criterion::DivisorQuery query;
    std::vector<BigInt> y;
    polyx::IntPolynomial expanded;
};

/// Thrown by construct() when the divisibility criterion fails.
struct CriterionFailure : std::runtime_error {
    explicit CriterionFailure(criterion::CriterionReport r);
    criterion::CriterionReport report;
};

/// Thrown when a constructed witness fails re-verification.
struct CertificationError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Thrown by enumerate_family() when no further distinct solutions exist
/// in the tail basis (R = 0).
struct FamilyExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integer solution of sum c_n y_n = 1 by a left-to-right extended-gcd
/// fold, canonically reduced. Requires gcd{c} = 1 and all c_n > 0.
std::vector<BigInt> solve_bezout(const std::vector<BigInt>& c);

/// Re-checks all witness invariants through code paths independent of the
/// construction: Bezout identity, divisor divisibility by exact polynomial
/// division, degree bound, and integral via monomial-basis integration.
void certify(const Witness& w);

/// Builds and certifies one witness; throws CriterionFailure with the
/// per-prime report when the query does not hold.
Witness construct(const criterion::DivisorQuery& q);

/// k pairwise-distinct certified witnesses, generated from the base
/// solution by homogeneous shifts on the first coefficient pair.
std::vector<Witness> enumerate_family(const criterion::DivisorQuery& q, long k);

} // namespace minpoly::witness
