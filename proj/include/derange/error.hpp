#pragma once

#include <stdexcept>
#include <string>

namespace derange {

/// Input outside the domain of an operation (not a permutation, not a
/// derangement encoding, k out of range, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive sweep was requested beyond the configured size budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven invariant failed to hold. Always a bug in this library.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Size budgets for every exhaustive enumerator and verifier.
///
/// Exceeding a budget raises budget_error; nothing is ever truncated.
struct Limits {
  int max_perm_n = 10;   // S_n, D_n, SEF_n streams
  int max_bider_n = 5;   // biderangement streams
  int max_verify_n = 8;  // identity verifiers over S_n / D_n
};

namespace detail {

inline void check_budget(int n, int max_n, const char* what) {
  if (n < 1 || n > max_n) {
    throw budget_error(std::string(what) + ": n = " + std::to_string(n) +
                       " outside budget [1, " + std::to_string(max_n) + "]");
  }
}

}  // namespace detail
}  // namespace derange
