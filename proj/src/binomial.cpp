#include "boustro/binomial.hpp"

#include <stdexcept>
#include <utility>

namespace boustro {

std::vector<Int> binomial_row(int n) {
  if (n < 0) throw std::invalid_argument("binomial_row: n must be >= 0");
  std::vector<Int> row{Int(1)};
  row.reserve(n + 1);
  for (int m = 1; m <= n; ++m) {
    row.push_back(1);
    for (int k = m - 1; k >= 1; --k) row[k] += row[k - 1];
  }
  return row;
}

Int binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  return binomial_row(n)[k];
}

}  // namespace boustro
