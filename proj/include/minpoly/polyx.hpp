#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minpoly/bigint.hpp"

namespace minpoly::polyx {

/// Dense integer-coefficient polynomial in the monomial basis, lowest
/// degree first. The zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(BigInt c, long degree);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i (0 beyond the degree).
    const BigInt& coeff(long i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const BigInt& k) const;
    bool operator==(const IntPolynomial& o) const = default;

    IntPolynomial pow(long e) const;
    /// Multiplication by x^k.
    IntPolynomial shifted(long k) const;
    /// P(1 - x), by binomial re-expansion.
    IntPolynomial compose_one_minus_x() const;

    /// Quotient and remainder of division by a nonzero divisor with
    /// invertible (+-1) leading coefficient.
    std::pair<IntPolynomial, IntPolynomial> div_rem(const IntPolynomial& divisor) const;
    bool divisible_by(const IntPolynomial& divisor) const;

    /// Comma-separated coefficients, lowest first ("0,0,0,1,-2,1").
    std::string to_string() const;
    static IntPolynomial parse(std::string_view text);

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

enum class TailBasis { monomial, one_minus_x };

/// Exact integral over [0,1]: sum of c_n / (n+1), reduced.
Rational integrate_01(const IntPolynomial& p);

/// Integral of x^a (1-x)^b over [0,1] by the closed form
/// 1 / ((a+b+1) * C(a+b, a)); no polynomial expansion.
Rational beta_integral(long a, long b);

/// Expansion of x^a (1-x)^b * T(x), where `tail` holds the coefficients of
/// T in the given basis (t_n x^n or t_n (1-x)^n).
IntPolynomial expand_product(long a, long b, const IntPolynomial& tail, TailBasis basis);

/// Expansion of (1 - x - x^2)^c.
IntPolynomial expand_trinomial_power(long c);

/// Expansion of (1-x)^b.
IntPolynomial one_minus_x_pow(long b);

/// C(n, k) as a big integer.
BigInt binomial(long n, long k);

} // namespace minpoly::polyx
