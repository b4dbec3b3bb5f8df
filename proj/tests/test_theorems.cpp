#include <doctest.h>

#include "minpoly/criterion.hpp"
#include "minpoly/theorems.hpp"

using namespace minpoly;
using namespace minpoly::theorems;

TEST_CASE("constructive_np at N = 6")
{
    const auto c5 = constructive_np(6, 5);
    CHECK(c5.M == 1);
    CHECK(c5.v == 1);
    CHECK(c5.a_digits.digits == std::vector<long>{2, 0});
    CHECK(c5.b_digits.digits == std::vector<long>{3, 0});
    CHECK(c5.i1 == 0);
    CHECK(c5.n_p == 0);

    const auto c2 = constructive_np(6, 2);
    CHECK(c2.v == 2);
    CHECK(c2.a_digits.digits == std::vector<long>{0, 1, 0});
    CHECK(c2.b_digits.digits == std::vector<long>{1, 1, 0});
    CHECK(c2.i1 == 0);
    CHECK(c2.n_p == 0);

    const auto c3 = constructive_np(6, 3);
    CHECK(c3.v == 1);
    CHECK(c3.i1 == 0);
    CHECK(c3.n_p == 0);
}

TEST_CASE("i1 minimality against a direct scan of all candidates")
{
    for (long N = 1; N <= 120; ++N) {
        for (long p : numth::primes_upto(N).primes) {
            const auto c = constructive_np(N, p);
            // Oracle: smallest i1 in [0, v] whose digit condition holds.
            long expect = c.v;
            for (long cand = 0; cand <= c.v; ++cand) {
                bool ok = true;
                for (long i = cand; i < c.v; ++i)
                    if (c.a_digits.digits[static_cast<std::size_t>(i)] +
                            c.b_digits.digits[static_cast<std::size_t>(i)] <
                        p - 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    expect = cand;
                    break;
                }
            }
            CHECK(c.i1 == expect);
            CHECK(c.n_p >= 0); // (C1)
        }
    }
}

TEST_CASE("verify_C123 at small N")
{
    const auto checks6 = verify_C123(6);
    REQUIRE(checks6.size() == 3);
    for (const auto& check : checks6) {
        CHECK(check.n_p == 0);
        CHECK(check.ok());
    }
    CHECK(checks6[0].p == 2);
    CHECK(checks6[0].achieved == 2); // nu_2(6 * C(5,2)) = nu_2(60)

    for (long N = 1; N <= 5; ++N)
        for (const auto& check : verify_C123(N))
            CHECK(check.ok());

    CHECK(verify_C123(100).size() == 25);
}

TEST_CASE("verify_main_theorem produces certified witnesses")
{
    const auto w6 = verify_main_theorem(6);
    CHECK(w6.expanded.to_string() == "0,0,0,1,-2,1");

    const auto w7 = verify_main_theorem(7);
    CHECK(w7.query.a == 3);
    CHECK(w7.query.b == 2);
    CHECK(w7.expanded.degree() < 7);

    const auto w1 = verify_main_theorem(1);
    CHECK(w1.query.a == 0);
    CHECK(w1.query.b == 0);
    CHECK(polyx::integrate_01(w1.expanded) == 1);

    for (long N = 1; N <= 120; ++N) {
        const auto w = verify_main_theorem(N);
        const long M = N / 6;
        CHECK(w.expanded.divisible_by(
            polyx::expand_product(3, 2, polyx::IntPolynomial::constant(1),
                                  polyx::TailBasis::monomial)
                .pow(M)));
    }
}

TEST_CASE("constructive n_p stays inside the criterion window")
{
    for (long N = 1; N <= 200; ++N) {
        const long M = N / 6;
        if (5 * M >= N)
            continue;
        for (long p : numth::primes_upto(N).primes) {
            const auto c = constructive_np(N, p);
            CHECK(c.n_p >= 0);
            CHECK(c.n_p < N - 5 * M);
        }
    }
}

TEST_CASE("census at small N")
{
    const auto r6 = census_one(6);
    CHECK(r6.max_sum == 5);
    CHECK(r6.attaining_pairs ==
          std::vector<std::pair<long, long>>{{2, 3}, {3, 2}});
    CHECK(r6.ratio == Rational(5, 6));

    CHECK(census_one(2).max_sum >= 0);
    CHECK(census_one(12).max_sum >= 10); // main-theorem lower bound 5*floor(12/6)

    // Every attaining pair passes the gcd route; sums above max_sum all fail.
    const auto r12 = census_one(12);
    for (const auto& [a, b] : r12.attaining_pairs)
        CHECK(criterion::decide_by_gcd({12, a, b}).first);
    for (long s = r12.max_sum + 1; s < 12; ++s)
        for (long a = 0; a <= s; ++a)
            CHECK(!criterion::decide_by_gcd({12, a, s - a}).first);
}

TEST_CASE("divisor_census range and CSV shape")
{
    const auto records = divisor_census(2, 10);
    REQUIRE(records.size() == 9);
    for (std::size_t i = 0; i < records.size(); ++i)
        CHECK(records[i].N == static_cast<long>(i) + 2);
    CHECK(census_csv_header() == "N,max_sum,ratio_num,ratio_den,pairs");
    CHECK(census_record_csv(records[4]) == "6,5,5,6,2:3;3:2");
}

TEST_CASE("gsn inequality in exact integer form")
{
    CHECK(gsn_inequality_check(10));  // 2520 >= 256
    CHECK(gsn_inequality_check(1));   // 1 >= 1
    for (long N = 1; N <= 1000; ++N)
        CHECK(gsn_inequality_check(N));
}
