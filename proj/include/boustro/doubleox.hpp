#pragma once

// The double-ox transform: two interleaved boustrophedon triangles with a
// messenger sequence carrying row ends between them.
//
// Triangle L holds the even input rows, R the odd ones:
//
//   L_{2i,0} = a_{2i},            R_{2i+1,0}    = a_{2i+1},
//   L_{2i,2i} = R_{2i,0} = m_{2i},  L_{2i+1,0} = R_{2i+1,2i+1} = m_{2i+1},
//   L_{2i+1,2i+1} = b_{2i+1},     R_{2i,2i}     = b_{2i},
//
// with both triangles obeying the triangle rule. Row n of one triangle
// needs the end of row n of the other, which forces the fill order
// L0, R0, R1, L1, L2, R2, R3, L3, ...
//
// In exponential-generating-function terms, m and b are a divided and
// multiplied by cos x - sin x and cos x + sin x; verify_theorem2 checks
// the equivalent exact coefficient identities.

#include "boustro/sequence.hpp"

namespace boustro {

struct DoubleOxResult {
  Sequence a;      // input
  Sequence m;      // messenger
  Sequence b;      // output
  Triangle left;   // L
  Triangle right;  // R
};

DoubleOxResult double_ox(const Sequence& a);

// n! [x^n](cos x - sin x): 1, -1, -1, 1 repeating.
Sequence cos_minus_sin_coeffs(int n_terms);

// n! [x^n](cos x + sin x): 1, 1, -1, -1 repeating.
Sequence cos_plus_sin_coeffs(int n_terms);

// True iff, for all n < length, with c = cos_minus_sin and d = cos_plus_sin
// coefficients,
//
//   sum_k C(n,k) c_{n-k} m_k = a_n                              (M relation)
//   sum_k C(n,k) c_{n-k} b_k = sum_k C(n,k) d_{n-k} a_k         (B relation)
//
// i.e. the transform's generating-function identities hold exactly.
bool verify_theorem2(const Sequence& a, const Sequence& m, const Sequence& b);

}  // namespace boustro
