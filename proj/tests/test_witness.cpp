#include <doctest.h>

#include <random>

#include "minpoly/numth.hpp"
#include "minpoly/witness.hpp"

using namespace minpoly;
using namespace minpoly::witness;

namespace {

BigInt dot(const std::vector<BigInt>& c, const std::vector<BigInt>& y)
{
    REQUIRE(c.size() == y.size());
    BigInt s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        s += c[i] * y[i];
    return s;
}

std::vector<BigInt> longs(std::initializer_list<long> v)
{
    std::vector<BigInt> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("solve_bezout on small systems")
{
    CHECK(solve_bezout(longs({1})) == longs({1}));

    const auto c1 = longs({15, 3, 1});
    CHECK(dot(c1, solve_bezout(c1)) == 1);

    const auto c2 = longs({6, 10, 15});
    CHECK(dot(c2, solve_bezout(c2)) == 1);

    CHECK_THROWS_AS(solve_bezout(longs({6, 10})), std::invalid_argument);
    CHECK_THROWS_AS(solve_bezout(longs({2})), std::invalid_argument);
    CHECK_THROWS_AS(solve_bezout({}), std::invalid_argument);
    CHECK_THROWS_AS(solve_bezout(longs({0, 1})), std::invalid_argument);
}

TEST_CASE("solve_bezout on random gcd-1 systems with large entries")
{
    gmp_randclass rand(gmp_randinit_default);
    rand.seed(41ul);
    std::mt19937_64 rng(42);
    int built = 0;
    while (built < 1000) {
        const long len = std::uniform_int_distribution<long>(1, 50)(rng);
        std::vector<BigInt> c;
        for (long i = 0; i < len; ++i)
            c.push_back(rand.get_z_bits(
                            std::uniform_int_distribution<unsigned long>(1, 100)(rng)) +
                        1);
        BigInt g = 0;
        for (const auto& ci : c)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
        if (g != 1)
            continue; // only gcd-1 inputs are in the contract
        ++built;
        CHECK(dot(c, solve_bezout(c)) == 1);
    }
}

TEST_CASE("construct on worked instances")
{
    const auto w = construct({6, 3, 2});
    CHECK(w.y == longs({1}));
    CHECK(w.expanded.to_string() == "0,0,0,1,-2,1");
    Rational sixtieth(1, 60);
    sixtieth.canonicalize();
    CHECK(polyx::integrate_01(w.expanded) == sixtieth);

    const auto w2 = construct({2, 0, 0});
    Rational half(1, 2);
    half.canonicalize();
    CHECK(polyx::integrate_01(w2.expanded) == half);
    CHECK(w2.expanded.degree() < 2);

    try {
        construct({6, 4, 1});
        FAIL("construct should have thrown");
    } catch (const CriterionFailure& e) {
        CHECK(!e.report.holds);
        REQUIRE(!e.report.per_prime.empty());
        CHECK(e.report.per_prime[0].p == 2);
        CHECK(!e.report.per_prime[0].n_p.has_value());
    }
}

TEST_CASE("enumerate_family produces distinct certified witnesses")
{
    const auto family = enumerate_family({6, 3, 0}, 3);
    REQUIRE(family.size() == 3);
    for (std::size_t i = 0; i < family.size(); ++i) {
        certify(family[i]);
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            CHECK(family[i].y != family[j].y);
            CHECK(!(family[i].expanded == family[j].expanded));
        }
    }

    const auto unique = enumerate_family({6, 3, 2}, 1);
    REQUIRE(unique.size() == 1);
    CHECK(unique[0].y == longs({1}));

    CHECK_THROWS_AS(enumerate_family({6, 3, 2}, 2), FamilyExhausted);
}

TEST_CASE("constructed witnesses satisfy all invariants")
{
    std::mt19937_64 rng(43);
    int done = 0;
    while (done < 30) {
        const long N = std::uniform_int_distribution<long>(2, 60)(rng);
        const long a = std::uniform_int_distribution<long>(0, N - 1)(rng);
        const long b = std::uniform_int_distribution<long>(0, N - 1 - a)(rng);
        const criterion::DivisorQuery q{N, a, b};
        if (!criterion::decide_by_primes(q).holds)
            continue;
        ++done;
        const auto w = construct(q);
        // Re-run the independent checks explicitly.
        CHECK(dot(criterion::bezout_coefficients(q).c, w.y) == 1);
        CHECK(w.expanded.degree() < N);
        CHECK(w.expanded.degree() <= a + b + q.tail_length() - 1);
        if (a > 0)
            CHECK(w.expanded.divisible_by(polyx::IntPolynomial::monomial(1, a)));
        if (b > 0)
            CHECK(w.expanded.divisible_by(polyx::one_minus_x_pow(b)));
        Rational expected(BigInt(1), numth::lcm_range(N).value());
        expected.canonicalize();
        CHECK(polyx::integrate_01(w.expanded) == expected);
    }
}

TEST_CASE("certify rejects corrupted witnesses")
{
    auto w = construct({6, 3, 0});
    CHECK_NOTHROW(certify(w));

    auto bad = w;
    bad.y[0] += 1;
    CHECK_THROWS_AS(certify(bad), CertificationError);

    auto bad2 = w;
    bad2.expanded = bad2.expanded + polyx::IntPolynomial::constant(1);
    CHECK_THROWS_AS(certify(bad2), CertificationError);
}
