#pragma once

#include <gmpxx.h>

namespace cevian {

using Int = mpz_class;
using Rat = mpq_class;

// Largest s with n = k^2 * s, s squarefree.  n must be positive.
// If square_root_factor is given it receives k.
Int squarefree_part(const Int& n, Int* square_root_factor = nullptr);

bool is_perfect_square(const Int& n);

// Exact square root of a nonnegative rational if it is a perfect square.
bool rational_sqrt(const Rat& q, Rat& root);

} // namespace cevian
