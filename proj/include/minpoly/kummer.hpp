#pragma once

#include <cstdint>

#include "minpoly/numth.hpp"

namespace minpoly::kummer {

struct CarryCount {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    long p = 2;
    long carries = 0;
};

/// Number of carries in the base-p schoolbook addition of a and b.
CarryCount count_carries(std::uint64_t a, std::uint64_t b, long p);

/// nu_p(C(n, k)) by carry counting (Kummer).
long nu_p_binomial(std::uint64_t n, std::uint64_t k, long p);

/// nu_p(C(n, k)) by factorial valuations (Legendre): independent oracle.
long nu_p_binomial_oracle(std::uint64_t n, std::uint64_t k, long p);

} // namespace minpoly::kummer
