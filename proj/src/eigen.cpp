#include "boustro/eigen.hpp"

#include "boustro/transform.hpp"

#include <stdexcept>

namespace boustro {

Sequence eigen_shift(int s, int n_terms) {
  if (s < 1) throw std::invalid_argument("eigen_shift: s must be >= 1");
  if (n_terms < 1) throw std::invalid_argument("eigen_shift: n_terms must be >= 1");
  Sequence a;
  a.reserve(n_terms);
  a.push_back(1);
  for (int j = 1; j < s && static_cast<int>(a.size()) < n_terms; ++j) a.push_back(0);
  // The shift equation is lower-triangular: a_{n+s} = b_n needs only
  // a_0..a_n, so one online pass over the triangle suffices.
  Triangle t;
  for (int n = 0; static_cast<int>(a.size()) < n_terms; ++n) {
    append_row(t, a[n]);
    a.push_back(t.back().back());
  }
  return a;
}

bool verify_shift_eigen(const Sequence& a, int s) {
  if (s < 1) throw std::invalid_argument("verify_shift_eigen: s must be >= 1");
  if (static_cast<int>(a.size()) <= s)
    throw std::invalid_argument("verify_shift_eigen: sequence length must exceed s");
  const Sequence b = boustrophedon(a);
  for (size_t n = 0; n + s < a.size(); ++n)
    if (b[n] != a[n + s]) return false;
  return true;
}

}  // namespace boustro
