#include "minpoly/criterion.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "minpoly/kummer.hpp"
#include "minpoly/numth.hpp"
#include "minpoly/polyx.hpp"

namespace minpoly::criterion {

void validate(const DivisorQuery& q)
{
    if (q.N < 1)
        throw std::invalid_argument("DivisorQuery: N must be >= 1");
    if (q.a < 0 || q.b < 0)
        throw std::invalid_argument("DivisorQuery: a, b must be >= 0");
    if (q.a + q.b >= q.N)
        throw std::invalid_argument("DivisorQuery: requires a + b < N");
}

BezoutCoefficients bezout_coefficients(const DivisorQuery& q)
{
    validate(q);
    const BigInt ell = numth::lcm_range(q.N).value();
    const long s = q.a + q.b;
    BezoutCoefficients out;
    out.query = q;
    out.c.reserve(static_cast<std::size_t>(q.tail_length()));
    for (long n = 0; n < q.tail_length(); ++n) {
        const BigInt denom = BigInt(s + n + 1) * polyx::binomial(s + n, q.a);
        BigInt c;
        if (!mpz_divisible_p(ell.get_mpz_t(), denom.get_mpz_t()))
            throw InexactDivisionError(
                "bezout_coefficients: (a+b+n+1)*C(a+b+n,a) does not divide lcm(1..N)");
        mpz_divexact(c.get_mpz_t(), ell.get_mpz_t(), denom.get_mpz_t());
        out.c.push_back(std::move(c));
    }
    return out;
}

std::pair<bool, BigInt> decide_by_gcd(const DivisorQuery& q)
{
    validate(q);
    const BigInt ell = numth::lcm_range(q.N).value();
    const long s = q.a + q.b;
    BigInt g = 0;
    // Binomials updated incrementally: C(s+n+1, a) = C(s+n, a)*(s+n+1)/(s+n+1-a).
    BigInt binom = polyx::binomial(s, q.a);
    for (long n = 0; n < q.tail_length(); ++n) {
        const BigInt denom = BigInt(s + n + 1) * binom;
        BigInt c;
        if (!mpz_divisible_p(ell.get_mpz_t(), denom.get_mpz_t()))
            throw InexactDivisionError(
                "decide_by_gcd: (a+b+n+1)*C(a+b+n,a) does not divide lcm(1..N)");
        mpz_divexact(c.get_mpz_t(), ell.get_mpz_t(), denom.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            return {true, g};
        binom *= s + n + 1;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                        static_cast<unsigned long>(s + n + 1 - q.a));
    }
    return {false, g};
}

long term_valuation(const DivisorQuery& q, long n, long p)
{
    const long s = q.a + q.b;
    return numth::nu_p(static_cast<std::uint64_t>(s + n + 1), p) +
           kummer::count_carries(static_cast<std::uint64_t>(q.a),
                                 static_cast<std::uint64_t>(q.b + n), p)
               .carries;
}

CriterionReport decide_by_primes(const DivisorQuery& q)
{
    validate(q);
    CriterionReport out;
    out.query = q;
    out.holds = true;
    const auto primes = numth::primes_upto(q.N);
    out.per_prime.reserve(primes.primes.size());
    for (long p : primes.primes) {
        PrimeCheck check;
        check.p = p;
        check.required = numth::floor_log(q.N, p);
        for (long n = 0; n < q.tail_length(); ++n) {
            const long v = term_valuation(q, n, p);
            if (v >= check.required) {
                check.n_p = n;
                check.achieved = v;
                break;
            }
            check.achieved = std::max(check.achieved, v);
        }
        if (!check.n_p)
            out.holds = false;
        out.per_prime.push_back(check);
    }
    return out;
}

} // namespace minpoly::criterion
