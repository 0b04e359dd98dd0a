#include "boustro/transform.hpp"

#include "boustro/entringer.hpp"

#include <stdexcept>
#include <utility>

namespace boustro {

void append_row(Triangle& t, const Int& seed) {
  const int n = static_cast<int>(t.size());
  std::vector<Int> row(n + 1);
  row[0] = seed;
  if (n > 0) {
    const auto& prev = t[n - 1];
    for (int k = 0; k < n; ++k) row[k + 1] = row[k] + prev[n - 1 - k];
  }
  t.push_back(std::move(row));
}

Triangle triangle(const Sequence& a) {
  if (a.empty()) throw std::invalid_argument("empty sequence");
  Triangle t;
  t.reserve(a.size());
  for (const Int& term : a) append_row(t, term);
  return t;
}

Sequence boustrophedon(const Sequence& a) {
  const Triangle t = triangle(a);
  Sequence b;
  b.reserve(t.size());
  for (const auto& row : t) b.push_back(row.back());
  return b;
}

Sequence boustrophedon_convolution(const Sequence& a) {
  if (a.empty()) throw std::invalid_argument("empty sequence");
  const int len = static_cast<int>(a.size());
  const Sequence e = zigzag(len - 1);
  Sequence b;
  b.reserve(len);
  std::vector<Int> choose{Int(1)};  // Pascal row n, updated in place
  for (int n = 0; n < len; ++n) {
    if (n > 0) {
      choose.push_back(1);
      for (int k = n - 1; k >= 1; --k) choose[k] += choose[k - 1];
    }
    Int b_n = 0;
    for (int k = 0; k <= n; ++k) b_n += choose[k] * a[k] * e[n - k];
    b.push_back(std::move(b_n));
  }
  return b;
}

Sequence inverse_boustrophedon(const Sequence& b) {
  if (b.empty()) throw std::invalid_argument("empty sequence");
  const int len = static_cast<int>(b.size());
  const Sequence e = zigzag(len - 1);
  Sequence a;
  a.reserve(len);
  std::vector<Int> choose{Int(1)};
  for (int n = 0; n < len; ++n) {
    if (n > 0) {
      choose.push_back(1);
      for (int k = n - 1; k >= 1; --k) choose[k] += choose[k - 1];
    }
    Int a_n = 0;
    for (int k = 0; k <= n; ++k) {
      Int term = choose[k] * b[k] * e[n - k];
      if ((n - k) % 2 == 0)
        a_n += term;
      else
        a_n -= term;
    }
    a.push_back(std::move(a_n));
  }
  return a;
}

}  // namespace boustro
