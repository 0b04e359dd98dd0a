#include "boustro/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace boustro {

namespace {

constexpr int kMaxEnumerateN = 10;
constexpr int kMaxCountN = 9;

// Alternation check without permutation validation.
bool alternates(const std::vector<int>& seq) {
  for (size_t j = 0; j + 1 < seq.size(); ++j) {
    if (j % 2 == 0) {
      if (seq[j] < seq[j + 1]) return false;  // needs a fall
    } else {
      if (seq[j] > seq[j + 1]) return false;  // needs a rise
    }
  }
  return true;
}

void require_permutation(const Permutation& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of {1..n}");
    seen[v] = true;
  }
}

}  // namespace

bool is_downup(const Permutation& perm) {
  require_permutation(perm);
  return alternates(perm);
}

std::vector<Permutation> enumerate_downup(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_downup: n must be >= 0");
  if (n > kMaxEnumerateN)
    throw std::invalid_argument("oracle size limit: enumerate_downup needs n <= 10");
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Permutation> out;
  do {
    if (alternates(perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Int entringer_bruteforce(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("entringer_bruteforce: need 0 <= k <= n");
  if (n > kMaxCountN)
    throw std::invalid_argument("oracle size limit: entringer_bruteforce needs n <= 9");
  std::vector<int> rest;  // {1..n+1} minus the fixed first element k+1
  for (int v = 1; v <= n + 1; ++v)
    if (v != k + 1) rest.push_back(v);
  std::vector<int> full(n + 1);
  full[0] = k + 1;
  Int count = 0;
  do {
    std::copy(rest.begin(), rest.end(), full.begin() + 1);
    if (alternates(full)) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

std::vector<std::vector<int>> enumerate_downup_prefixes(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_downup_prefixes: n must be >= 0");
  if (n > kMaxCountN)
    throw std::invalid_argument("oracle size limit: enumerate_downup_prefixes needs n <= 9");
  // Down-up sequences are prefix-closed, so depth-first extension visits
  // each one exactly once (the empty sequence included).
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n + 1, false);
  std::function<void()> visit = [&] {
    out.push_back(cur);
    const size_t j = cur.size();
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (j >= 1) {
        const bool needs_fall = (j - 1) % 2 == 0;
        if (needs_fall ? cur[j - 1] < v : cur[j - 1] > v) continue;
      }
      used[v] = true;
      cur.push_back(v);
      visit();
      cur.pop_back();
      used[v] = false;
    }
  };
  visit();
  return out;
}

Int downup_prefix_count(int n) {
  return Int(enumerate_downup_prefixes(n).size());
}

Sequence bell_numbers(int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("bell_numbers: n_terms must be >= 1");
  Sequence bell{Int(1)};
  std::vector<Int> row{Int(1)};  // current Aitken-triangle row
  while (static_cast<int>(bell.size()) < n_terms) {
    std::vector<Int> next(row.size() + 1);
    next[0] = row.back();
    for (size_t j = 0; j < row.size(); ++j) next[j + 1] = next[j] + row[j];
    bell.push_back(next[0]);
    row = std::move(next);
  }
  return bell;
}

}  // namespace boustro
