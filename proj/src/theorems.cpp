#include "minpoly/theorems.hpp"

#include <sstream>

#include "minpoly/criterion.hpp"
#include "minpoly/kummer.hpp"

namespace minpoly::theorems {

ConstructiveNp constructive_np(long N, long p)
{
    if (N < 1)
        throw std::invalid_argument("constructive_np: N must be >= 1");
    if (p < 2 || p > N)
        throw std::invalid_argument("constructive_np: requires 2 <= p <= N");
    ConstructiveNp out;
    out.N = N;
    out.p = p;
    out.M = N / 6;
    out.v = numth::floor_log(N, p);
    out.a_digits = numth::digits(static_cast<std::uint64_t>(2 * out.M), p, out.v + 1);
    out.b_digits = numth::digits(static_cast<std::uint64_t>(3 * out.M), p, out.v + 1);
    // i1 is minimal with a_i + b_i >= p-1 on [i1, v); scan downward from v
    // while the digit condition holds.
    long i1 = out.v;
    for (long i = out.v - 1; i >= 0; --i) {
        if (out.a_digits.digits[static_cast<std::size_t>(i)] +
                out.b_digits.digits[static_cast<std::size_t>(i)] >=
            p - 1)
            i1 = i;
        else
            break;
    }
    out.i1 = i1;
    long n_p = 0;
    long pw = 1;
    for (long i = 0; i < i1; ++i) {
        n_p += (p - 1 - out.a_digits.digits[static_cast<std::size_t>(i)] -
                out.b_digits.digits[static_cast<std::size_t>(i)]) *
               pw;
        pw *= p;
    }
    out.n_p = n_p;
    return out;
}

std::vector<ConditionCheck> verify_C123(long N)
{
    if (N < 1)
        throw std::invalid_argument("verify_C123: N must be >= 1");
    const long M = N / 6;
    std::vector<ConditionCheck> out;
    for (long p : numth::primes_upto(N).primes) {
        const auto cnp = constructive_np(N, p);
        ConditionCheck check;
        check.p = p;
        check.n_p = cnp.n_p;
        check.v = cnp.v;
        check.c1 = cnp.n_p >= 0;
        const long arg = 5 * M + cnp.n_p + 1;
        check.achieved =
            numth::nu_p(static_cast<std::uint64_t>(arg), p) +
            kummer::nu_p_binomial(static_cast<std::uint64_t>(arg - 1),
                                  static_cast<std::uint64_t>(2 * M), p);
        check.c2 = check.achieved >= cnp.v;
        check.c3 = arg <= N;
        if (!check.ok()) {
            std::ostringstream msg;
            msg << "verify_C123: N=" << N << ", p=" << p << " violates";
            if (!check.c1)
                msg << " (C1)";
            if (!check.c2)
                msg << " (C2)";
            if (!check.c3)
                msg << " (C3)";
            throw TheoremViolation(msg.str());
        }
        out.push_back(check);
    }
    return out;
}

witness::Witness verify_main_theorem(long N)
{
    const auto checks = verify_C123(N);
    const long M = N / 6;
    const criterion::DivisorQuery q{N, 3 * M, 2 * M};
    // Each constructive n_p must itself witness the criterion inequality
    // inside the admissible window 0 <= n_p < N - 5M.
    for (const auto& check : checks) {
        if (check.n_p < 0 || check.n_p >= q.tail_length())
            throw TheoremViolation("verify_main_theorem: n_p outside the window");
        const long req = numth::floor_log(N, check.p);
        if (criterion::term_valuation(q, check.n_p, check.p) < req)
            throw TheoremViolation(
                "verify_main_theorem: constructive n_p fails the criterion");
    }
    return witness::construct(q);
}

CensusRecord census_one(long N)
{
    if (N < 1)
        throw std::invalid_argument("census_one: N must be >= 1");
    CensusRecord out;
    out.N = N;
    for (long s = N - 1; s >= 0; --s) {
        std::vector<std::pair<long, long>> pairs;
        // The criterion is symmetric under (a, b) -> (b, a) via x -> 1-x,
        // so scan a <= s/2 and mirror.
        for (long a = 0; 2 * a <= s; ++a) {
            if (criterion::decide_by_primes({N, a, s - a}).holds)
                pairs.emplace_back(a, s - a);
        }
        if (!pairs.empty()) {
            out.max_sum = s;
            out.attaining_pairs = pairs;
            for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
                if (it->first != it->second)
                    out.attaining_pairs.emplace_back(it->second, it->first);
            break;
        }
    }
    out.ratio = Rational(BigInt(out.max_sum), BigInt(N));
    out.ratio.canonicalize();
    return out;
}

std::vector<CensusRecord> divisor_census(long n_lo, long n_hi)
{
    if (n_lo < 1 || n_lo > n_hi)
        throw std::invalid_argument("divisor_census: requires 1 <= n_lo <= n_hi");
    std::vector<CensusRecord> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (long N = n_lo; N <= n_hi; ++N)
        out.push_back(census_one(N));
    return out;
}

bool gsn_inequality_check(long N)
{
    if (N < 1)
        throw std::invalid_argument("gsn_inequality_check: N must be >= 1");
    const BigInt ell = numth::lcm_range(N).value();
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 4, static_cast<unsigned long>((N - 1) / 2));
    return ell >= bound;
}

std::string census_csv_header()
{
    return "N,max_sum,ratio_num,ratio_den,pairs";
}

std::string census_record_csv(const CensusRecord& r)
{
    std::ostringstream out;
    out << r.N << ',' << r.max_sum << ',' << r.ratio.get_num().get_str() << ','
        << r.ratio.get_den().get_str() << ',';
    for (std::size_t i = 0; i < r.attaining_pairs.size(); ++i) {
        if (i)
            out << ';';
        out << r.attaining_pairs[i].first << ':' << r.attaining_pairs[i].second;
    }
    return out.str();
}

} // namespace minpoly::theorems
