#include "minpoly/witness.hpp"

#include <cstddef>

#include "minpoly/numth.hpp"

namespace minpoly::witness {

CriterionFailure::CriterionFailure(criterion::CriterionReport r)
    : std::runtime_error("criterion fails for N=" + std::to_string(r.query.N) +
                         ", a=" + std::to_string(r.query.a) +
                         ", b=" + std::to_string(r.query.b))
    , report(std::move(r))
{
}

std::vector<BigInt> solve_bezout(const std::vector<BigInt>& c)
{
    if (c.empty())
        throw std::invalid_argument("solve_bezout: empty coefficient list");
    for (const BigInt& cn : c)
        if (cn <= 0)
            throw std::invalid_argument("solve_bezout: coefficients must be positive");

    // Left-to-right fold: g_k = gcd(g_{k-1}, c_k) with back-substitution.
    std::vector<BigInt> y{BigInt(1)};
    BigInt g = c[0];
    std::size_t last_change = 0; // index where the gcd last dropped
    for (std::size_t k = 1; k < c.size(); ++k) {
        BigInt g2, u, v;
        mpz_gcdext(g2.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(),
                   c[k].get_mpz_t());
        if (g2 != g)
            last_change = k;
        for (auto& yi : y)
            yi *= u;
        y.push_back(std::move(v));
        g = std::move(g2);
        if (g == 1) {
            y.resize(c.size(), BigInt(0));
            break;
        }
    }
    if (g != 1)
        throw std::invalid_argument("solve_bezout: gcd of coefficients is not 1");

    // Canonical reduction against the gcd-attaining coefficient c_m: every
    // other y_n is brought into [0, c_m) by a compensated shift, which keeps
    // sum c_n y_n invariant.
    const std::size_t m = last_change;
    if (c[m] > 1) {
        for (std::size_t n = 0; n < y.size(); ++n) {
            if (n == m)
                continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), y[n].get_mpz_t(), c[m].get_mpz_t());
            if (q != 0) {
                y[n] -= q * c[m];
                y[m] += q * c[n];
            }
        }
    }
    return y;
}

namespace {

polyx::IntPolynomial expand_witness(const criterion::DivisorQuery& q,
                                    const std::vector<BigInt>& y)
{
    return polyx::expand_product(q.a, q.b, polyx::IntPolynomial(y),
                                 polyx::TailBasis::one_minus_x);
}

} // namespace

void certify(const Witness& w)
{
    const auto& q = w.query;
    const auto bez = criterion::bezout_coefficients(q);
    if (w.y.size() != bez.c.size())
        throw CertificationError("certify: tail length mismatch");
    BigInt dot = 0;
    for (std::size_t n = 0; n < bez.c.size(); ++n)
        dot += bez.c[n] * w.y[n];
    if (dot != 1)
        throw CertificationError("certify: sum c_n y_n != 1");

    if (w.expanded.degree() >= q.N)
        throw CertificationError("certify: degree not below N");
    if (w.expanded.is_zero())
        throw CertificationError("certify: zero polynomial");

    if (q.a > 0 && !w.expanded.divisible_by(polyx::IntPolynomial::monomial(1, q.a)))
        throw CertificationError("certify: x^a does not divide the witness");
    if (q.b > 0 && !w.expanded.divisible_by(polyx::one_minus_x_pow(q.b)))
        throw CertificationError("certify: (1-x)^b does not divide the witness");

    Rational expected(BigInt(1), numth::lcm_range(q.N).value());
    expected.canonicalize();
    if (polyx::integrate_01(w.expanded) != expected)
        throw CertificationError("certify: integral is not 1/lcm(1..N)");
}

Witness construct(const criterion::DivisorQuery& q)
{
    criterion::validate(q);
    const auto bez = criterion::bezout_coefficients(q);
    BigInt g = 0;
    for (const BigInt& cn : bez.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cn.get_mpz_t());
        if (g == 1)
            break;
    }
    if (g != 1) {
        auto report = criterion::decide_by_primes(q);
        report.gcd_value = g;
        throw CriterionFailure(std::move(report));
    }
    Witness w;
    w.query = q;
    w.y = solve_bezout(bez.c);
    w.expanded = expand_witness(q, w.y);
    certify(w);
    return w;
}

std::vector<Witness> enumerate_family(const criterion::DivisorQuery& q, long k)
{
    if (k < 1)
        throw std::invalid_argument("enumerate_family: k must be >= 1");
    Witness base = construct(q);
    const long R = q.tail_length() - 1;
    if (R == 0) {
        if (k > 1)
            throw FamilyExhausted(
                "enumerate_family: R = 0 admits a single tail-basis solution");
        return {std::move(base)};
    }
    const auto bez = criterion::bezout_coefficients(q);
    std::vector<Witness> out;
    out.reserve(static_cast<std::size_t>(k));
    out.push_back(base);
    // Homogeneous shifts on the pair (y_0, y_1): adding t*c_1 to y_0 and
    // subtracting t*c_0 from y_1 preserves sum c_n y_n = 1.
    for (long t = 1; t < k; ++t) {
        Witness w;
        w.query = q;
        w.y = base.y;
        w.y[0] += BigInt(t) * bez.c[1];
        w.y[1] -= BigInt(t) * bez.c[0];
        w.expanded = expand_witness(q, w.y);
        certify(w);
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace minpoly::witness
