#pragma once

// Exact integer sequences and the text formats the tools exchange them in.
//
// Everything in this library is computed over arbitrary-precision signed
// integers: the sequences involved grow superexponentially (the zig-zag
// numbers already overflow 64-bit words near n = 20), so fixed-width
// arithmetic is never used for results.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boustro {

using Int = boost::multiprecision::cpp_int;

// Finite prefix of an integer sequence, indexed from 0.
using Sequence = std::vector<Int>;

// Jagged triangle rows[n][k], 0 <= k <= n.
using Triangle = std::vector<std::vector<Int>>;

// Permutation of {1..n}, stored one-based.
using Permutation = std::vector<int>;

// Thrown when sequence text (a --seq literal or an input file) does not
// parse. Kept distinct from std::invalid_argument so the CLI can map
// usage errors and domain errors to different exit codes.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Strict decimal integer with optional leading '-'. No base prefixes.
Int parse_integer(std::string_view token);

// One line of comma-separated decimals.
Sequence parse_csv(std::string_view line);

// OEIS b-file style: one "<index> <value>" pair per line, indices starting
// at 0 and increasing by 1. Blank lines and '#' comments are skipped.
Sequence parse_bfile(std::string_view text);

// Auto-detects csv vs b-file from the first data line.
Sequence parse_sequence_text(const std::string& text);

std::string to_csv(const Sequence& seq);    // "a0,a1,...\n"
std::string to_bfile(const Sequence& seq);  // "0 a0\n1 a1\n..."

}  // namespace boustro
