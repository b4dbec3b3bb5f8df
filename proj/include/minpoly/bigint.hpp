#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace minpoly {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when a division that must be exact (by a proved divisibility)
// leaves a remainder. Always indicates an arithmetic bug, never bad input.
struct InexactDivisionError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace minpoly
