#include "boustro/entringer.hpp"

#include "boustro/binomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace boustro {

EntringerTable entringer_table(int n_max) {
  if (n_max < 0) throw std::invalid_argument("entringer_table: n_max must be >= 0");
  EntringerTable rows;
  rows.reserve(n_max + 1);
  rows.push_back({Int(1)});
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Int> row(n + 1);
    row[0] = 0;
    const auto& prev = rows[n - 1];
    for (int k = 0; k < n; ++k) row[k + 1] = row[k] + prev[n - 1 - k];
    rows.push_back(std::move(row));
  }
  return rows;
}

Sequence zigzag(int n_max) {
  const EntringerTable rows = entringer_table(n_max);
  Sequence e;
  e.reserve(rows.size());
  for (const auto& row : rows) e.push_back(row.back());
  return e;
}

Int entringer_explicit(int n, int k) {
  if (n < 1) throw std::invalid_argument("entringer_explicit: n must be >= 1");
  if (k < 0 || k >= n)
    throw std::invalid_argument("entringer_explicit: k must satisfy 0 <= k <= n-1");
  const Sequence e = zigzag(n - 1);
  Int sum = 0;
  int sign = 1;
  for (int r = 0; 2 * r + 1 <= k; ++r, sign = -sign)
    sum += sign * binomial(k, 2 * r + 1) * e[n - 2 * r - 1];
  return sum;
}

std::string render_seidel(const EntringerTable& table) {
  std::ostringstream out;
  for (size_t n = 0; n < table.size(); ++n) {
    const auto& row = table[n];
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << (n % 2 == 0 ? row[row.size() - 1 - j] : row[j]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace boustro
