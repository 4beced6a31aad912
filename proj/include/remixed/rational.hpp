#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace remixed {

/// Exact rational scalar. GMP provides the arbitrary-precision arithmetic;
/// everything polynomial is built on top of this in qpoly.hpp.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// Parses "p", "p/q" or a plain decimal like "0.25" into an exact rational.
Rat rat_from_string(const std::string& s);

/// Renders as "p" when integral, else "p/q".
std::string rat_to_string(const Rat& x);

/// n! as an exact integer.
Int factorial(int n);

/// Binomial coefficient C(n, k) as an exact integer; 0 when k < 0 or k > n.
Int binomial(int n, int k);

}  // namespace remixed
