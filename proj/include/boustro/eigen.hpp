#pragma once

// Shift-eigen-sequences: sequences whose boustrophedon transform equals the
// sequence itself shifted s places left.

#include "boustro/sequence.hpp"

namespace boustro {

// The lexicographically earliest nonnegative-integer sequence with a_0 = 1
// satisfying boustrophedon(a)_n = a_{n+s}. The free prefix minimizes to
// a_0 = 1, a_1 = ... = a_{s-1} = 0; every later term is forced,
// a_{n+s} = b_n, and is produced incrementally row by row.
//
// s = 1 gives the zig-zag numbers shifted left (1,1,2,5,16,61,...);
// s = 2 gives 1,0,1,1,2,6,17,62,259,1230,... (A000661).
Sequence eigen_shift(int s, int n_terms);

// True iff boustrophedon(a)_n = a_{n+s} for all n <= length(a) - 1 - s.
// Requires length(a) > s.
bool verify_shift_eigen(const Sequence& a, int s);

}  // namespace boustro
