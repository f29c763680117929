#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// D_n by inclusion-exclusion: sum_k (-1)^k n! / k!.
inline std::int64_t derangement_count(int n) {
  std::int64_t total = 0;
  std::int64_t falling = 1;  // n! / k! for k = n, n-1, ..., 0
  for (int k = n; k >= 0; --k) {
    total += (k % 2 == 0 ? 1 : -1) * falling;
    falling *= k == 0 ? 1 : k;
  }
  return total;
}

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Unsigned Stirling numbers of the first kind, c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k).
inline std::vector<std::vector<std::int64_t>> stirling_first(int max_n) {
  std::vector<std::vector<std::int64_t>> c(max_n + 1, std::vector<std::int64_t>(max_n + 1, 0));
  c[0][0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (n - 1) * c[n - 1][k];
  }
  return c;
}

/// Composes the transpositions (k f(k)) as explicit maps, (1 f(1)) first.
inline std::vector<int> compose_transpositions(const std::vector<int>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<int> sigma(n);
  for (int x = 1; x <= n; ++x) {
    int y = x;
    for (int k = 1; k <= n; ++k) {
      const int a = k, b = f[k - 1];
      if (y == a) {
        y = b;
      } else if (y == b) {
        y = a;
      }
    }
    sigma[x - 1] = y;
  }
  return sigma;
}

/// Literal recursion: entry n is sigma(n); recurse on (n sigma(n)) o sigma
/// restricted to [n - 1].
inline std::vector<int> perm_to_sef_recursive(std::vector<int> sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n == 0) return {};
  const int last = sigma[n - 1];
  std::vector<int> projected(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    int v = sigma[j - 1];
    if (v == n) v = last;  // (n last) applied to the value
    projected[j - 1] = v;
  }
  std::vector<int> f = perm_to_sef_recursive(projected);
  f.push_back(last);
  return f;
}

/// Every arrangement of 1 1 2 2 ... n n avoiding B_n pointwise, by depth-first
/// placement of remaining copies.
inline std::vector<std::vector<int>> biderangements(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> remaining(n + 1, 2);
  std::vector<int> word;
  std::function<void()> place = [&] {
    const int pos = static_cast<int>(word.size()) + 1;
    if (pos > 2 * n) {
      out.push_back(word);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (remaining[v] == 0 || v == (pos + 1) / 2) continue;
      --remaining[v];
      word.push_back(v);
      place();
      word.pop_back();
      ++remaining[v];
    }
  };
  place();
  return out;
}

/// Cycle count of a one-line permutation by direct traversal.
inline int cycles(const std::vector<int>& p) {
  std::vector<bool> seen(p.size() + 1, false);
  int count = 0;
  for (int s = 1; s <= static_cast<int>(p.size()); ++s) {
    if (seen[s]) continue;
    ++count;
    for (int i = s; !seen[i]; i = p[i - 1]) seen[i] = true;
  }
  return count;
}

}  // namespace oracle
