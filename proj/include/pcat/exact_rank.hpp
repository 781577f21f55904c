#pragma once

// Rank over the rationals by fraction-free (Bareiss) elimination.

#include <vector>

#include <gmpxx.h>

namespace pcat {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Rows must all have the same length.
std::size_t exact_rank(IntegerMatrix m);

// Naive oracle: Gaussian elimination over mpq_class.
std::size_t rational_rank(IntegerMatrix const& m);

}  // namespace pcat
