#include <doctest.h>

#include <random>

#include "minpoly/criterion.hpp"

using namespace minpoly;
using namespace minpoly::criterion;

namespace {

std::vector<long> to_longs(const std::vector<BigInt>& v)
{
    std::vector<long> out;
    for (const auto& x : v)
        out.push_back(x.get_si());
    return out;
}

} // namespace

TEST_CASE("bezout_coefficients on worked instances")
{
    CHECK(to_longs(bezout_coefficients({6, 3, 2}).c) == std::vector<long>{1});
    CHECK(to_longs(bezout_coefficients({6, 3, 0}).c) == std::vector<long>{15, 3, 1});
    CHECK(to_longs(bezout_coefficients({2, 0, 0}).c) == std::vector<long>{2, 1});
    CHECK_THROWS_AS(bezout_coefficients({6, 3, 3}), std::invalid_argument);
}

TEST_CASE("decide_by_gcd on worked instances")
{
    auto [h1, g1] = decide_by_gcd({6, 3, 2});
    CHECK(h1);
    CHECK(g1 == 1);
    auto [h2, g2] = decide_by_gcd({6, 4, 1});
    CHECK(!h2);
    CHECK(g2 == 2);
    auto [h3, g3] = decide_by_gcd({6, 5, 0});
    CHECK(!h3);
    CHECK(g3 == 10);
}

TEST_CASE("decide_by_primes on worked instances")
{
    const auto r1 = decide_by_primes({6, 3, 2});
    CHECK(r1.holds);
    REQUIRE(r1.per_prime.size() == 3);
    for (const auto& check : r1.per_prime) {
        REQUIRE(check.n_p.has_value());
        CHECK(*check.n_p == 0);
        CHECK(check.achieved >= check.required);
    }

    const auto r2 = decide_by_primes({6, 4, 1});
    CHECK(!r2.holds);
    CHECK(r2.per_prime[0].p == 2);
    CHECK(!r2.per_prime[0].n_p.has_value());
    CHECK(r2.per_prime[0].achieved == 1);
    CHECK(r2.per_prime[0].required == 2);

    for (long N : {1L, 2L, 7L, 30L, 101L})
        CHECK(decide_by_primes({N, 0, 0}).holds);
}

TEST_CASE("reports list primes ascending and respect the window")
{
    const auto r = decide_by_primes({60, 25, 20});
    for (std::size_t i = 1; i < r.per_prime.size(); ++i)
        CHECK(r.per_prime[i - 1].p < r.per_prime[i].p);
    for (const auto& check : r.per_prime)
        if (check.n_p) {
            CHECK(*check.n_p >= 0);
            CHECK(*check.n_p < 60 - 25 - 20);
        }
}

TEST_CASE("gcd and per-prime paths agree (exhaustive, small N)")
{
    for (long N = 1; N <= 30; ++N)
        for (long a = 0; a < N; ++a)
            for (long b = 0; a + b < N; ++b) {
                const DivisorQuery q{N, a, b};
                CHECK(decide_by_gcd(q).first == decide_by_primes(q).holds);
            }
}

TEST_CASE("gcd and per-prime paths agree (random, larger N)")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const long N = std::uniform_int_distribution<long>(1, 150)(rng);
        const long a = std::uniform_int_distribution<long>(0, N - 1)(rng);
        const long b = std::uniform_int_distribution<long>(0, N - 1 - a)(rng);
        const DivisorQuery q{N, a, b};
        CHECK(decide_by_gcd(q).first == decide_by_primes(q).holds);
    }
}

TEST_CASE("criterion is symmetric under swapping a and b")
{
    std::mt19937_64 rng(32);
    for (int t = 0; t < 200; ++t) {
        const long N = std::uniform_int_distribution<long>(1, 120)(rng);
        const long a = std::uniform_int_distribution<long>(0, N - 1)(rng);
        const long b = std::uniform_int_distribution<long>(0, N - 1 - a)(rng);
        CHECK(decide_by_primes({N, a, b}).holds ==
              decide_by_primes({N, b, a}).holds);
    }
}

// Experimental, not a paper claim: holding is downward monotone in (a, b).
// Verified exhaustively for N <= 40; recorded as an empirical observation.
TEST_CASE("downward (a,b)-monotonicity holds for N <= 40")
{
    for (long N = 1; N <= 40; ++N) {
        std::vector<std::vector<bool>> holds(
            static_cast<std::size_t>(N), std::vector<bool>(static_cast<std::size_t>(N), false));
        for (long a = 0; a < N; ++a)
            for (long b = 0; a + b < N; ++b)
                holds[a][b] = decide_by_primes({N, a, b}).holds;
        for (long a = 0; a < N; ++a)
            for (long b = 0; a + b < N; ++b) {
                if (!holds[a][b])
                    continue;
                if (a > 0)
                    CHECK(holds[a - 1][b]);
                if (b > 0)
                    CHECK(holds[a][b - 1]);
            }
    }
}

TEST_CASE("halving and thirding divisors hold; their sharpness fails somewhere")
{
    for (long N = 1; N <= 100; ++N) {
        CHECK(decide_by_primes({N, N / 2, 0}).holds);
        CHECK(decide_by_primes({N, 0, N / 2}).holds);
        if (2 * (N / 3) < N)
            CHECK(decide_by_primes({N, N / 3, N / 3}).holds);
    }
    // First sharpness failures, found by exhaustive scan.
    CHECK(!decide_by_primes({3, 2, 0}).holds);
    CHECK(!decide_by_primes({5, 2, 2}).holds);
}
