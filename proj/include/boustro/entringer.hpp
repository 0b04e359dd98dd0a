#pragma once

// Entringer numbers E_{n,k}, zig-zag numbers E_n, and the
// Seidel-Entringer-Arnold triangle.
//
// E_{n,k} counts the permutations of {1..n+1} that start with k+1 and then
// alternately fall and rise, starting with a fall. The table satisfies
//
//   E_{0,0} = 1,   E_{n,0} = 0  (n >= 1),
//   E_{n+1,k+1} = E_{n+1,k} + E_{n,n-k}   (0 <= k <= n),
//
// and the row ends E_n = E_{n,n} count all down-up permutations of {1..n}
// (1, 1, 1, 2, 5, 16, 61, 272, 1385, ... — OEIS A000111).

#include "boustro/sequence.hpp"

#include <string>

namespace boustro {

using EntringerTable = Triangle;

// Rows 0..n_max of the recurrence. O(n_max^2) integer additions.
EntringerTable entringer_table(int n_max);

// E_0, ..., E_{n_max}: the row-end diagonal of the table.
Sequence zigzag(int n_max);

// E_{n,k} by the alternating closed form
//
//   E_{n,k} = sum_{r >= 0, 2r+1 <= k} (-1)^r C(k,2r+1) E_{n-2r-1},
//
// valid for n >= 1, 0 <= k <= n-1 (k = n is rejected; use zigzag).
// The empty sum makes E_{n,0} = 0.
Int entringer_explicit(int n, int k);

// Text layout with rows written alternately right-to-left (even rows) and
// left-to-right (odd rows), ox-plowing style (A008280). One line per row,
// entries space-separated, each line newline-terminated.
std::string render_seidel(const EntringerTable& table);

}  // namespace boustro
