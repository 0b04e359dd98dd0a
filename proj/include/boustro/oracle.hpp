#pragma once

// Brute-force reference implementations, used as independent oracles by the
// test suites and exposed for ad-hoc checks through the CLI. Enumerations
// have hard size caps (factorial blowup); exceeding a cap is an error,
// never a truncation.

#include "boustro/sequence.hpp"

namespace boustro {

// True iff p_1 > p_2 < p_3 > p_4 < ...; vacuously true for n <= 1.
// Rejects input that is not a permutation of {1..n}.
bool is_downup(const Permutation& perm);

// All down-up permutations of {1..n}, lexicographic. Count is E_n.
// Requires n <= 10.
std::vector<Permutation> enumerate_downup(int n);

// E_{n,k} by direct enumeration: permutations of {1..n+1} that start with
// k+1 and alternate starting with a fall. Requires n <= 9.
Int entringer_bruteforce(int n, int k);

// All down-up sequences of distinct elements of {1..n}, any length >= 0
// including the empty sequence. Requires n <= 9.
std::vector<std::vector<int>> enumerate_downup_prefixes(int n);

// Count of the above; equals boustrophedon(1,1,1,...)_n.
Int downup_prefix_count(int n);

// 1, 1, 2, 5, 15, 52, ... via the Bell/Aitken triangle.
Sequence bell_numbers(int n_terms);

}  // namespace boustro
