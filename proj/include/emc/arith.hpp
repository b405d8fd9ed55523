#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace emc {

// All counting and all inequality certification run on exact arithmetic.
// Int/Rat are GMP-backed; no floating point appears anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

/// Binomial coefficient C(n,k); zero for n < k or negative arguments.
Int binom(long n, long k);

/// mpz from a 64-bit value (gmpxx lacks the long long constructor).
Int to_int(long long v);

/// C(n,k) as a machine integer. Requires the value to fit in int64;
/// used in ranges where that is guaranteed (n below ~3e6 for k = 3).
long long binom_ll(long long n, long long k);

/// Floor of the integer square root.
unsigned long long isqrt_u64(unsigned long long x);

/// True iff x is a perfect square (y is set to the root either way).
bool is_square_u64(unsigned long long x, unsigned long long& y);

/// Reduced "num/den" rendering, "k" when the value is integral.
std::string rat_str(const Rat& q);

}  // namespace emc
