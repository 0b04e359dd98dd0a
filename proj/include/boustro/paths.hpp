#pragma once

// Path counting in the triangle graph and the path <-> down-up permutation
// bijection.
//
// The triangle rule induces a directed graph on the entries: node (n,j)
// has a horizontal edge to (n,j+1) and a diagonal edge to (n+1, n-j+1).
// pi(n,k,i) is the number of directed paths from (i,0) to (n,k); the
// triangle entries decompose over these counts,
//
//   T_{n,k} = sum_i pi(n,k,i) a_i,
//
// and in particular pi(n,n,0) = E_n.
//
// A path from the apex to (n,n) is encoded by its arrival columns
// f(1..n), where f(i) is the column in which the path enters row i. The
// edge set forces
//
//   f(1) = 1,   1 <= f(i) <= i,   f(i) + f(i+1) <= i + 1.
//
// Each such path maps to a down-up permutation of {1..n} through a box
// diagram: the bottom row is labeled 1..n left to right, the bottom star
// goes in position f(n) counted from the right, and the stars for levels
// n-1, n-2, ..., 1 go in position f(i) among the still-unstarred columns,
// counted alternately from the left and from the right. Reading the
// starred column labels bottom-up yields the permutation.

#include "boustro/sequence.hpp"

#include <vector>

namespace boustro {

// Arrival columns f(1..n); arrivals[i-1] = f(i). Empty for n = 0.
using Path = std::vector<int>;

// Staircase of starred rows encoding a path. star_column[i-1] is the
// column (1..n, counted from the left of the bottom row) starred at
// level i; the columns form a permutation of {1..n}.
struct BoxDiagram {
  int n = 0;
  std::vector<int> star_column;
};

bool is_valid_path(const Path& p);

// pi(n,k,i) by dynamic programming over the edge set. The reference route.
Int path_count_bruteforce(int n, int k, int i);

// pi(n,k,i) by the closed formulas:
//   k = 0          -> 1 if i = n, else 0
//   k = n          -> C(n,i) E_{n-i}
//   i = 0, k < n   -> E_{n,k}
//   otherwise      -> sum_s C(k,s) C(n-k, n-i-s) pi(n-i,s,0)
// Arguments outside every formula's stated range fall back to the
// dynamic-programming route. Always equals path_count_bruteforce.
Int path_count(int n, int k, int i);

// T_{n,k} = sum_i pi(n,k,i) a_i; equals triangle(a) entrywise.
Triangle triangle_via_paths(const Sequence& a);

// All apex-to-(n,n) paths, lexicographic in f. Count is E_n.
std::vector<Path> enumerate_paths(int n);

BoxDiagram box_diagram(const Path& p);

// Reads the box diagram of p; the result is always down-up.
Permutation path_to_permutation(const Path& p);

// Inverse of path_to_permutation. Rejects input that is not a down-up
// permutation.
Path permutation_to_path(const Permutation& perm);

}  // namespace boustro
