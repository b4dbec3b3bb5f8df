#include "minpoly/numth.hpp"

#include <stdexcept>

namespace minpoly::numth {

std::uint64_t DigitExpansion::value() const
{
    std::uint64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(*it);
    return v;
}

BigInt LcmFactorization::value() const
{
    BigInt v = 1;
    BigInt pw;
    for (const auto& [p, e] : factors) {
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e));
        v *= pw;
    }
    return v;
}

long LcmFactorization::exponent_of(long p) const
{
    for (const auto& [q, e] : factors)
        if (q == p)
            return e;
    return 0;
}

PrimeList primes_upto(long n)
{
    if (n < 1)
        throw std::invalid_argument("primes_upto: n must be >= 1");
    PrimeList out;
    out.bound = n;
    if (n < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long p = 2; p * p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        for (long q = p * p; q <= n; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    for (long p = 2; p <= n; ++p)
        if (!composite[static_cast<std::size_t>(p)])
            out.primes.push_back(p);
    return out;
}

long nu_p(std::uint64_t n, long p)
{
    if (n == 0)
        throw std::invalid_argument("nu_p: valuation of 0 is infinite");
    if (p < 2)
        throw std::invalid_argument("nu_p: p must be prime (>= 2)");
    long e = 0;
    const auto up = static_cast<std::uint64_t>(p);
    while (n % up == 0) {
        n /= up;
        ++e;
    }
    return e;
}

long nu_p(const BigInt& n, long p)
{
    if (n == 0)
        throw std::invalid_argument("nu_p: valuation of 0 is infinite");
    if (p < 2)
        throw std::invalid_argument("nu_p: p must be prime (>= 2)");
    BigInt pz = p;
    BigInt reduced;
    return static_cast<long>(
        mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

long floor_log(long n, long p)
{
    if (n < 1)
        throw std::invalid_argument("floor_log: n must be >= 1");
    if (p < 2)
        throw std::invalid_argument("floor_log: p must be >= 2");
    long v = 0;
    long pw = 1;
    while (pw <= n / p) {
        pw *= p;
        ++v;
    }
    return v;
}

LcmFactorization lcm_range(long n)
{
    if (n < 1)
        throw std::invalid_argument("lcm_range: n must be >= 1");
    LcmFactorization out;
    out.bound = n;
    for (long p : primes_upto(n).primes)
        out.factors.emplace_back(p, floor_log(n, p));
    return out;
}

DigitExpansion digits(std::uint64_t n, long p, long width)
{
    if (p < 2)
        throw std::invalid_argument("digits: p must be >= 2");
    if (width < 1)
        throw std::invalid_argument("digits: width must be >= 1");
    DigitExpansion out;
    out.base = p;
    out.digits.reserve(static_cast<std::size_t>(width));
    const auto up = static_cast<std::uint64_t>(p);
    for (long i = 0; i < width; ++i) {
        out.digits.push_back(static_cast<long>(n % up));
        n /= up;
    }
    if (n != 0)
        throw std::invalid_argument("digits: n does not fit in the requested width");
    return out;
}

} // namespace minpoly::numth
