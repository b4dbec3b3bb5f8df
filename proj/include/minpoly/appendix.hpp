#pragma once

#include <functional>
#include <vector>

#include "minpoly/polyx.hpp"

namespace minpoly::appendix {

/// Parameters of the trinomial divisor
/// Q_N(x) = x^A (1-x)^B (1-x-x^2)^C with A = floor(N/2), B = floor(N/3),
/// C = floor(N/19); the tail q(x) has degree at most m = N - A - B - 2C - 1.
struct TrinomialQuery {
    long N = 3;
    long A = 1;
    long B = 1;
    long C = 0;
    long m = 0;

    static TrinomialQuery for_N(long N);
};

/// Expansion of Q_N.
polyx::IntPolynomial divisor_polynomial(const TrinomialQuery& q);

/// c_i = lcm(1..N) * integral of divisor(x) * t_i(x) over [0,1] for the tail
/// basis polynomials t_i, i = 0..tail_len-1; each an exact integer as long as
/// deg(divisor) + tail_len <= N.
std::vector<BigInt> tail_coefficients(long N, const polyx::IntPolynomial& divisor,
                                      long tail_len, polyx::TailBasis basis);

/// c_i = lcm(1..N) * integral of Q_N(x) x^i over [0,1], i = 0..m; each an
/// exact integer. Monomial tail basis.
std::vector<BigInt> trinomial_coefficients(const TrinomialQuery& q);

/// Same coefficients with the tail in the (1-x)^n basis; spans the same
/// tail space, so solvability must agree with the monomial route.
std::vector<BigInt> trinomial_coefficients_one_minus_x(const TrinomialQuery& q);

/// One constructed and certified P in S_N with Q_N | P, or no value when
/// gcd{c_i} != 1.
struct TrinomialWitness {
    TrinomialQuery query;
    std::vector<BigInt> y;              // monomial tail coefficients
    polyx::IntPolynomial expanded;
    bool solvable = false;
};

TrinomialWitness solve_for_N(long N);

struct AppendixResult {
    long n_max = 3;
    long checked = 0;
    std::vector<long> exceptions; // N values with gcd != 1, ascending
};

/// The appendix computation: for every N in 3..n_max decide solvability and,
/// when solvable, construct and certify a witness. `progress`, when set, is
/// called once per finished N.
AppendixResult replicate_appendix(long n_max,
                                  const std::function<void(long)>& progress = {});

} // namespace minpoly::appendix
