#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "emc/core.hpp"

namespace emc {

/// Property ONE: some maximum matching avoids vertex 1, i.e.
/// nu(residual(F,1)) == nu(F).
bool has_one(const TripleSystem& f);

/// True iff adding any non-edge raises the matching number.
/// Requires nu(F) == s (throws otherwise).
bool is_maximal(const TripleSystem& f, int s);

/// Greedy lexicographic closure: superset of F with the same matching
/// number, maximal. Requires nu(F) == s.
TripleSystem make_maximal(const TripleSystem& f, int s);

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// m(n,s) for every s, by enumerating all 2^C(n,3) families. Refused when
/// C(n,3) > 24 (i.e. n > 6).
struct BruteForceTable {
  int n = 0;
  std::vector<long long> m;  // index s = 0 .. floor(n/3)
};
BruteForceTable m_bruteforce(int n);

enum class SearchMode { Brute, Shifted, ShiftedOne };

struct SearchResult {
  int n = 0, s = 0;
  long long m = 0;
  TripleSystem witness;  // stable, nu == s, |witness| == m
  SearchMode mode = SearchMode::Shifted;
  std::uint64_t nodes_explored = 0;
};

/// Hard search budgets; `force` overrides them (documented CLI escape
/// hatch). Exceeding a budget raises BudgetError, never truncates.
struct SearchLimits {
  int max_n_s_le2 = 12;  // n cap for s <= 2
  int max_n_s3 = 12;     // n cap for s == 3
  bool force = false;
};

/// Maximum size of a stable family on [n] with matching number exactly s
/// (and property ONE when `one_only`), by depth-first enumeration of
/// downsets of the domination order with matching-number pruning. The
/// incumbent is seeded with the best construction, so the search proves
/// either "nothing beats it" or returns a strictly better witness.
SearchResult m_shifted(int n, int s, bool one_only = false,
                       const SearchLimits& limits = {});

}  // namespace emc
