#include "minpoly/kummer.hpp"

#include <algorithm>
#include <stdexcept>

namespace minpoly::kummer {

namespace {

long digit_length(std::uint64_t n, long p)
{
    long len = 1;
    const auto up = static_cast<std::uint64_t>(p);
    while (n >= up) {
        n /= up;
        ++len;
    }
    return len;
}

} // namespace

CarryCount count_carries(std::uint64_t a, std::uint64_t b, long p)
{
    if (p < 2)
        throw std::invalid_argument("count_carries: p must be prime (>= 2)");
    // Width leaves one spare digit so the final carry, if any, lands inside
    // the expansion of a+b.
    const long width = std::max(digit_length(a, p), digit_length(b, p)) + 1;
    const auto da = numth::digits(a, p, width);
    const auto db = numth::digits(b, p, width);
    CarryCount out{a, b, p, 0};
    long carry = 0;
    for (long i = 0; i < width; ++i) {
        const long s = da.digits[static_cast<std::size_t>(i)] +
                       db.digits[static_cast<std::size_t>(i)] + carry;
        carry = s >= p ? 1 : 0;
        out.carries += carry;
    }
    return out;
}

long nu_p_binomial(std::uint64_t n, std::uint64_t k, long p)
{
    if (k > n)
        throw std::invalid_argument("nu_p_binomial: k must satisfy 0 <= k <= n");
    return count_carries(k, n - k, p).carries;
}

long nu_p_binomial_oracle(std::uint64_t n, std::uint64_t k, long p)
{
    if (k > n)
        throw std::invalid_argument("nu_p_binomial_oracle: k must satisfy 0 <= k <= n");
    if (p < 2)
        throw std::invalid_argument("nu_p_binomial_oracle: p must be prime (>= 2)");
    auto factorial_valuation = [p](std::uint64_t m) {
        long v = 0;
        const auto up = static_cast<std::uint64_t>(p);
        while (m > 0) {
            m /= up;
            v += static_cast<long>(m);
        }
        return v;
    };
    return factorial_valuation(n) - factorial_valuation(k) - factorial_valuation(n - k);
}

} // namespace minpoly::kummer
