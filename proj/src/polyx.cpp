#include "minpoly/polyx.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace minpoly::polyx {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c)
{
    return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::monomial(BigInt c, long degree)
{
    if (degree < 0)
        throw std::invalid_argument("monomial: negative degree");
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(long i) const
{
    if (i < 0 || i >= static_cast<long>(coeffs_.size()))
        return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const
{
    std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        v[i] += o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const
{
    return *this + (-o);
}

IntPolynomial IntPolynomial::operator-() const
{
    std::vector<BigInt> v = coeffs_;
    for (auto& c : v)
        c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const BigInt& k) const
{
    std::vector<BigInt> v = coeffs_;
    for (auto& c : v)
        c *= k;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(long e) const
{
    if (e < 0)
        throw std::invalid_argument("pow: negative exponent");
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

IntPolynomial IntPolynomial::shifted(long k) const
{
    if (k < 0)
        throw std::invalid_argument("shifted: negative shift");
    if (is_zero())
        return {};
    std::vector<BigInt> v(static_cast<std::size_t>(k), BigInt(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::compose_one_minus_x() const
{
    IntPolynomial result;
    for (long n = degree(); n >= 0; --n)
        if (coeff(n) != 0)
            result = result + one_minus_x_pow(n) * coeff(n);
    return result;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::div_rem(const IntPolynomial& divisor) const
{
    if (divisor.is_zero())
        throw std::invalid_argument("div_rem: division by zero polynomial");
    const BigInt& lead = divisor.coeffs_.back();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("div_rem: divisor leading coefficient must be +-1");
    std::vector<BigInt> rem = coeffs_;
    const long dd = divisor.degree();
    const long qd = degree() - dd;
    if (qd < 0)
        return {IntPolynomial{}, *this};
    std::vector<BigInt> quot(static_cast<std::size_t>(qd) + 1, BigInt(0));
    for (long i = qd; i >= 0; --i) {
        BigInt q = rem[static_cast<std::size_t>(i + dd)];
        if (lead == -1)
            q = -q;
        if (q == 0)
            continue;
        quot[static_cast<std::size_t>(i)] = q;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i + j)] -= q * divisor.coeff(j);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const
{
    return div_rem(divisor).second.is_zero();
}

std::string IntPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out << ',';
        out << coeffs_[i].get_str();
    }
    return out.str();
}

IntPolynomial IntPolynomial::parse(std::string_view text)
{
    std::vector<BigInt> v;
    std::string token;
    auto flush = [&] {
        std::string t;
        for (char ch : token)
            if (!isspace(static_cast<unsigned char>(ch)))
                t += ch;
        if (t.empty())
            throw std::invalid_argument("IntPolynomial::parse: empty coefficient");
        BigInt c;
        if (mpz_set_str(c.get_mpz_t(), t.c_str(), 10) != 0)
            throw std::invalid_argument("IntPolynomial::parse: bad coefficient '" + t + "'");
        v.push_back(std::move(c));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else
            token += ch;
    }
    flush();
    return IntPolynomial(std::move(v));
}

Rational integrate_01(const IntPolynomial& p)
{
    Rational sum = 0;
    for (long n = 0; n <= p.degree(); ++n) {
        if (p.coeff(n) == 0)
            continue;
        Rational term(p.coeff(n), BigInt(n + 1));
        term.canonicalize();
        sum += term;
    }
    return sum;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Rational beta_integral(long a, long b)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("beta_integral: a, b must be >= 0");
    Rational r(BigInt(1), BigInt(a + b + 1) * binomial(a + b, a));
    r.canonicalize();
    return r;
}

IntPolynomial one_minus_x_pow(long b)
{
    if (b < 0)
        throw std::invalid_argument("one_minus_x_pow: negative exponent");
    std::vector<BigInt> v(static_cast<std::size_t>(b) + 1);
    for (long j = 0; j <= b; ++j) {
        v[static_cast<std::size_t>(j)] = binomial(b, j);
        if (j & 1)
            v[static_cast<std::size_t>(j)] = -v[static_cast<std::size_t>(j)];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial expand_product(long a, long b, const IntPolynomial& tail, TailBasis basis)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("expand_product: a, b must be >= 0");
    IntPolynomial t = basis == TailBasis::monomial ? tail : tail.compose_one_minus_x();
    return (one_minus_x_pow(b) * t).shifted(a);
}

IntPolynomial expand_trinomial_power(long c)
{
    if (c < 0)
        throw std::invalid_argument("expand_trinomial_power: negative exponent");
    return IntPolynomial({BigInt(1), BigInt(-1), BigInt(-1)}).pow(c);
}

} // namespace minpoly::polyx
