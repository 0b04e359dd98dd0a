#include "boustro/paths.hpp"

#include "boustro/binomial.hpp"
#include "boustro/entringer.hpp"
#include "boustro/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace boustro {

namespace {

void check_indices(int n, int k, int i) {
  if (n < 0 || k < 0 || k > n || i < 0 || i > n)
    throw std::invalid_argument("path count: indices out of range (need 0 <= k <= n, 0 <= i <= n)");
}

// Star placement direction for level i of an n-level diagram: the bottom
// star (level n) is counted from the right, then sides alternate upward.
bool counts_from_right(int n, int i) { return (n - i) % 2 == 0; }

}  // namespace

bool is_valid_path(const Path& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return true;
  if (p[0] != 1) return false;
  for (int i = 1; i <= n; ++i) {
    if (p[i - 1] < 1 || p[i - 1] > i) return false;
    if (i < n && p[i - 1] + p[i] > i + 1) return false;
  }
  return true;
}

Int path_count_bruteforce(int n, int k, int i) {
  check_indices(n, k, i);
  // One path sits at (i,0); propagate along the rows. Column c of row r
  // receives horizontally from (r,c-1) and diagonally from (r-1,r-c).
  std::vector<Int> prev;
  for (int r = i; r <= n; ++r) {
    std::vector<Int> row(r + 1);
    row[0] = (r == i) ? 1 : 0;
    for (int c = 1; c <= r; ++c) {
      row[c] = row[c - 1];
      if (r > i) row[c] += prev[r - c];
    }
    prev = std::move(row);
  }
  return prev[k];
}

Int path_count(int n, int k, int i) {
  check_indices(n, k, i);
  if (k == n)  // paths to the row end: choose the i unstarred columns
    return binomial(n, i) * zigzag(n - i).back();
  if (k == 0)  // column 0 has no incoming edges
    return Int(i == n ? 1 : 0);
  if (i == 0)  // apex paths to an interior node
    return entringer_explicit(n, k);
  if (n >= 2 && k > 0 && k < n && i > 0) {
    // Split by the number s of stars right of the bottom star after
    // extending the path to the next row end.
    const int m = n - i;
    const EntringerTable table = entringer_table(m);
    Int total = 0;
    for (int s = 0; s <= std::min(k, m); ++s) {
      const Int ways = binomial(k, s) * binomial(n - k, m - s);
      if (ways != 0) total += ways * table[m][s];
    }
    return total;
  }
  return path_count_bruteforce(n, k, i);  // outside every formula's range
}

Triangle triangle_via_paths(const Sequence& a) {
  if (a.empty()) throw std::invalid_argument("empty sequence");
  const int len = static_cast<int>(a.size());
  Triangle t(len);
  for (int n = 0; n < len; ++n) {
    t[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      Int entry = 0;
      for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        entry += path_count(n, k, i) * a[i];
      }
      t[n][k] = std::move(entry);
    }
  }
  return t;
}

std::vector<Path> enumerate_paths(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_paths: n must be >= 0");
  std::vector<Path> all;
  if (n == 0) {
    all.push_back({});  // the empty path at the apex
    return all;
  }
  Path f{1};
  std::function<void()> extend = [&] {
    const int i = static_cast<int>(f.size());
    if (i == n) {
      all.push_back(f);
      return;
    }
    // departure column j in row i ranges f(i)..i; arrival is i - j + 1
    for (int v = 1; v + f.back() <= i + 1; ++v) {
      f.push_back(v);
      extend();
      f.pop_back();
    }
  };
  extend();
  return all;
}

BoxDiagram box_diagram(const Path& p) {
  if (!is_valid_path(p)) throw std::invalid_argument("invalid path");
  const int n = static_cast<int>(p.size());
  BoxDiagram d;
  d.n = n;
  d.star_column.assign(n, 0);
  std::vector<int> open(n);  // unstarred columns, ascending
  std::iota(open.begin(), open.end(), 1);
  for (int i = n; i >= 1; --i) {
    // level i has exactly i open columns and its star in the f(i)-th
    const int pos = p[i - 1];
    const int idx = counts_from_right(n, i) ? static_cast<int>(open.size()) - pos : pos - 1;
    d.star_column[i - 1] = open[idx];
    open.erase(open.begin() + idx);
  }
  return d;
}

Permutation path_to_permutation(const Path& p) {
  const BoxDiagram d = box_diagram(p);
  return Permutation(d.star_column.rbegin(), d.star_column.rend());
}

Path permutation_to_path(const Permutation& perm) {
  if (!is_downup(perm)) throw std::invalid_argument("not a down-up permutation");
  const int n = static_cast<int>(perm.size());
  std::vector<int> open(n);
  std::iota(open.begin(), open.end(), 1);
  Path f(n);
  for (int i = n; i >= 1; --i) {
    const int column = perm[n - i];  // star of level i, read bottom-up
    const auto it = std::lower_bound(open.begin(), open.end(), column);
    const int idx = static_cast<int>(it - open.begin());
    f[i - 1] = counts_from_right(n, i) ? static_cast<int>(open.size()) - idx : idx + 1;
    open.erase(it);
  }
  return f;
}

}  // namespace boustro
