#include "boustro/doubleox.hpp"

#include "boustro/transform.hpp"

#include <stdexcept>
#include <utility>

namespace boustro {

DoubleOxResult double_ox(const Sequence& a) {
  if (a.empty()) throw std::invalid_argument("empty sequence");
  const int len = static_cast<int>(a.size());
  DoubleOxResult r;
  r.a = a;
  r.m.reserve(len);
  r.b.reserve(len);
  for (int n = 0; n < len; ++n) {
    // Row n of the triangle holding a_n comes first; its end is the
    // messenger term, which seeds row n of the other triangle.
    Triangle& first = (n % 2 == 0) ? r.left : r.right;
    Triangle& second = (n % 2 == 0) ? r.right : r.left;
    append_row(first, a[n]);
    r.m.push_back(first.back().back());
    append_row(second, r.m.back());
    r.b.push_back(second.back().back());
  }
  return r;
}

namespace {

Sequence signed_pattern(int n_terms, const int pattern[4]) {
  if (n_terms < 0) throw std::invalid_argument("coefficient count must be >= 0");
  Sequence c;
  c.reserve(n_terms);
  for (int n = 0; n < n_terms; ++n) c.push_back(pattern[n % 4]);
  return c;
}

}  // namespace

Sequence cos_minus_sin_coeffs(int n_terms) {
  static const int pattern[4] = {1, -1, -1, 1};
  return signed_pattern(n_terms, pattern);
}

Sequence cos_plus_sin_coeffs(int n_terms) {
  static const int pattern[4] = {1, 1, -1, -1};
  return signed_pattern(n_terms, pattern);
}

bool verify_theorem2(const Sequence& a, const Sequence& m, const Sequence& b) {
  if (a.size() != m.size() || a.size() != b.size())
    throw std::invalid_argument("verify_theorem2: length mismatch");
  const int len = static_cast<int>(a.size());
  const Sequence c = cos_minus_sin_coeffs(len);
  const Sequence d = cos_plus_sin_coeffs(len);
  std::vector<Int> choose{Int(1)};
  for (int n = 0; n < len; ++n) {
    if (n > 0) {
      choose.push_back(1);
      for (int k = n - 1; k >= 1; --k) choose[k] += choose[k - 1];
    }
    Int m_side = 0, b_side = 0, a_side = 0;
    for (int k = 0; k <= n; ++k) {
      m_side += choose[k] * c[n - k] * m[k];
      b_side += choose[k] * c[n - k] * b[k];
      a_side += choose[k] * d[n - k] * a[k];
    }
    if (m_side != a[n] || b_side != a_side) return false;
  }
  return true;
}

}  // namespace boustro
