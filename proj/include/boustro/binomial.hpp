#pragma once

// Exact binomial coefficients by Pascal-row iteration.

#include "boustro/sequence.hpp"

namespace boustro {

// C(n,0), ..., C(n,n).
std::vector<Int> binomial_row(int n);

// C(n,k); zero outside 0 <= k <= n.
Int binomial(int n, int k);

}  // namespace boustro
