// Exact rational numbers backed by GMP, plus the few integer helpers the
// rest of the library needs (powers, exact n-th roots).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qdeform {

using rat = mpq_class;
using bigint = mpz_class;

// a^e for integer e (e < 0 requires a != 0; throws std::domain_error otherwise).
rat rat_pow(const rat& a, long e);

// Exact n-th root in Q: returns true and sets out if a = out^n with out rational.
// For even n, a must be >= 0.
bool rat_nth_root(const rat& a, unsigned n, rat& out);

std::string rat_str(const rat& a);

}  // namespace qdeform
