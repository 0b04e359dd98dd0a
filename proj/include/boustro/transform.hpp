#pragma once

// The boustrophedon transform of an integer sequence, its inverse, and the
// underlying triangle.
//
// The triangle of a sequence a is filled by
//
//   T_{n,0} = a_n,   T_{n+1,k+1} = T_{n+1,k} + T_{n,n-k},
//
// and the transform is b_n = T_{n,n}. The transform is also the binomial
// convolution with the zig-zag numbers,
//
//   b_n = sum_k C(n,k) a_k E_{n-k},
//   a_n = sum_k (-1)^{n-k} C(n,k) b_k E_{n-k},
//
// which this module implements as a second, independent route. Both
// directions are exact over the integers (the map is unimodular), and b_n
// depends only on a_0..a_n, so transforming a prefix yields a prefix of
// the full transform.

#include "boustro/sequence.hpp"

namespace boustro {

// Appends row t.size() to a partially built triangle: the row starts with
// seed and obeys the triangle rule against the previous row.
void append_row(Triangle& t, const Int& seed);

// Full triangle of a; one row per term.
Triangle triangle(const Sequence& a);

// Triangle-rule route: b_n = T_{n,n}.
Sequence boustrophedon(const Sequence& a);

// Convolution route: b_n = sum_k C(n,k) a_k E_{n-k}. Agrees with
// boustrophedon() on every input.
Sequence boustrophedon_convolution(const Sequence& a);

// a_n = sum_k (-1)^{n-k} C(n,k) b_k E_{n-k}.
Sequence inverse_boustrophedon(const Sequence& b);

}  // namespace boustro
