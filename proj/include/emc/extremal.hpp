#pragma once

#include "emc/arith.hpp"
#include "emc/core.hpp"

namespace emc {

// The two extremal edge counts and their pointwise maximum:
//   a(s)   = C(3s+2,3)            (clique construction A)
//   b(n,s) = C(n,3) - C(n-s,3)    (cover construction B), requires n >= s
//   M(n,s) = max(a(s), b(n,s))
Int a_of(long s);
Int b_of(long n, long s);
Int M_of(long n, long s);

/// n1(s) = min{ n : b(n,s) >= a(s) }, by monotone search upward from 3s+2
/// (b is strictly increasing in n for s >= 1).
long n1_exact(long s);

/// The same threshold from the closed form
///   n1(s) = 1 + ceil(s/2 + sqrt(g(s))/6),  g(s) = 321 s^2 + 324 s + 84,
/// evaluated purely in integers: the ceiling of the surd is decided by
/// integer-square predicates, including the exact-square boundary
/// (g(1) = 729 = 27^2).
long n1_formula(long s);

/// The three threshold estimates: n1(s) <= 3.5s+3, n1(s) >= 3.4s+1, and
/// n1(s) - n1(s-1) >= 2 (the last undefined for s = 1). Comparisons are
/// exact (7/2 and 17/5).
struct N1Bounds {
  bool upper = false;   // n1(s) <= 3.5 s + 3
  bool lower = false;   // n1(s) >= 3.4 s + 1
  bool gap = false;     // n1(s) - n1(s-1) >= 2
  bool all(long s) const { return upper && lower && (s < 2 || gap); }
};
N1Bounds n1_bounds_check(long s);

/// Checks all three estimates for every s in [1, s_max] with an incremental
/// threshold sweep; returns the first failing s, or 0 if none fail.
long n1_bounds_sweep(long s_max);

/// The graph (k = 2) extremal bound max{C(2s+1,2), C(n-1,2) - C(n-1-s,2)}
/// together with which branch attains it.
struct EdgeBound {
  Int value;
  bool second_branch;  // true when C(n-1,2) - C(n-1-s,2) attains the max
};
EdgeBound erdos_gallai_bound(long n, long s);

/// A(n,s): every triple inside [3s+2], placed on [n] (the other n-3s-2
/// vertices are isolated). Requires n >= 3s+2.
TripleSystem build_A(long n, long s);

/// B(n,s): every triple on [n] meeting [s]. Requires n >= s.
TripleSystem build_B(long n, long s);

/// The binomial identity behind the vertex-deletion induction step:
///   C(n-1,3) - C(n-1-s,3) + C(n-1,2) - C(n-1-s,2) = C(n,3) - C(n-s,3).
bool b_recurrence_identity(long n, long s);

/// Arithmetic behind the prefix-deletion depth bound: for every s <= s_max,
/// every q with 5q > s + 5 and every n >= ceil(17s/5), n - q > 4(s-q) + 3.
/// (The left side grows with n, so the minimal n decides each (s,q).)
bool prefix_depth_bound_check(long s_max);

/// With n = n1(s): (n - 3s - 3) / C(s-1,2) <= s / ((s-1)(s-2)), exactly.
bool narrow_swap_bound_ok(long s);
/// Same comparison at an explicit n (negative-control hook for tests).
bool narrow_swap_bound_ok_at(long s, long n);

}  // namespace emc
