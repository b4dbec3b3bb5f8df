#include "minpoly/appendix.hpp"

#include <stdexcept>

#include "minpoly/numth.hpp"
#include "minpoly/witness.hpp"

namespace minpoly::appendix {

TrinomialQuery TrinomialQuery::for_N(long N)
{
    if (N < 3)
        throw std::invalid_argument("TrinomialQuery: N must be >= 3");
    TrinomialQuery q;
    q.N = N;
    q.A = N / 2;
    q.B = N / 3;
    q.C = N / 19;
    q.m = N - q.A - q.B - 2 * q.C - 1;
    return q;
}

polyx::IntPolynomial divisor_polynomial(const TrinomialQuery& q)
{
    return polyx::expand_product(q.A, q.B, polyx::expand_trinomial_power(q.C),
                                 polyx::TailBasis::monomial);
}

// c_i = sum_j row_j * (lcm / (j+1)); every j+1 is at most N, so each
// division is exact by the lcm definition.
std::vector<BigInt> tail_coefficients(long N, const polyx::IntPolynomial& divisor,
                                      long tail_len, polyx::TailBasis basis)
{
    const BigInt ell = numth::lcm_range(N).value();
    std::vector<BigInt> ell_over(static_cast<std::size_t>(N) + 1);
    for (long d = 1; d <= N; ++d) {
        if (!mpz_divisible_ui_p(ell.get_mpz_t(), static_cast<unsigned long>(d)))
            throw InexactDivisionError(
                "tail_coefficients: d <= N does not divide lcm(1..N)");
        mpz_divexact_ui(ell_over[static_cast<std::size_t>(d)].get_mpz_t(),
                        ell.get_mpz_t(), static_cast<unsigned long>(d));
    }
    std::vector<BigInt> c;
    c.reserve(static_cast<std::size_t>(tail_len));
    for (long i = 0; i < tail_len; ++i) {
        const polyx::IntPolynomial row =
            basis == polyx::TailBasis::one_minus_x
                ? divisor * polyx::one_minus_x_pow(i)
                : divisor.shifted(i);
        if (row.degree() >= N)
            throw InexactDivisionError("tail_coefficients: degree >= N");
        BigInt ci = 0;
        for (long j = 0; j <= row.degree(); ++j)
            if (row.coeff(j) != 0)
                ci += row.coeff(j) * ell_over[static_cast<std::size_t>(j) + 1];
        c.push_back(std::move(ci));
    }
    return c;
}

std::vector<BigInt> trinomial_coefficients(const TrinomialQuery& q)
{
    return tail_coefficients(q.N, divisor_polynomial(q), q.m + 1,
                             polyx::TailBasis::monomial);
}

std::vector<BigInt> trinomial_coefficients_one_minus_x(const TrinomialQuery& q)
{
    return tail_coefficients(q.N, divisor_polynomial(q), q.m + 1,
                             polyx::TailBasis::one_minus_x);
}

TrinomialWitness solve_for_N(long N)
{
    const auto q = TrinomialQuery::for_N(N);
    TrinomialWitness out;
    out.query = q;
    const auto divisor = divisor_polynomial(q);
    auto c = tail_coefficients(q.N, divisor, q.m + 1, polyx::TailBasis::monomial);

    BigInt g = 0;
    for (const BigInt& ci : c) {
        BigInt a = abs(ci);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1)
            break;
    }
    if (g != 1)
        return out; // unsolvable: an appendix exception

    // The c_i may be negative ((1-x-x^2)^C changes sign on [0,1]); flip
    // signs for the positive-coefficient Bezout solver and flip back.
    std::vector<BigInt> c_abs;
    c_abs.reserve(c.size());
    for (const BigInt& ci : c)
        c_abs.push_back(abs(ci));
    // Zero coefficients carry no constraint; route them around the solver.
    std::vector<std::size_t> live;
    std::vector<BigInt> c_live;
    for (std::size_t i = 0; i < c_abs.size(); ++i) {
        if (c_abs[i] != 0) {
            live.push_back(i);
            c_live.push_back(c_abs[i]);
        }
    }
    const auto y_live = witness::solve_bezout(c_live);
    std::vector<BigInt> y(c.size(), BigInt(0));
    for (std::size_t k = 0; k < live.size(); ++k)
        y[live[k]] = sgn(c[live[k]]) < 0 ? -y_live[k] : y_live[k];

    out.y = y;
    out.solvable = true;
    out.expanded = divisor * polyx::IntPolynomial(y);

    // Certification, all through generic polynomial code paths.
    if (out.expanded.degree() >= N)
        throw witness::CertificationError("appendix: witness degree not below N");
    if (!out.expanded.divisible_by(divisor))
        throw witness::CertificationError("appendix: Q_N does not divide the witness");
    Rational expected(BigInt(1), numth::lcm_range(N).value());
    expected.canonicalize();
    if (polyx::integrate_01(out.expanded) != expected)
        throw witness::CertificationError("appendix: integral is not 1/lcm(1..N)");
    return out;
}

AppendixResult replicate_appendix(long n_max, const std::function<void(long)>& progress)
{
    if (n_max < 3)
        throw std::invalid_argument("replicate_appendix: n_max must be >= 3");
    AppendixResult out;
    out.n_max = n_max;
    for (long N = 3; N <= n_max; ++N) {
        const auto w = solve_for_N(N);
        if (!w.solvable)
            out.exceptions.push_back(N);
        ++out.checked;
        if (progress)
            progress(N);
    }
    return out;
}

} // namespace minpoly::appendix
