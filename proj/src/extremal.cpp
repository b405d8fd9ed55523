#include "emc/extremal.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace emc {

namespace {

// choose3 in __int128; safe for n up to ~4e6 within the sweep ranges.
__int128 choose3(long long n) {
  if (n < 3) return 0;
  return static_cast<__int128>(n) * (n - 1) * (n - 2) / 6;
}

__int128 b_i128(long long n, long long s) { return choose3(n) - choose3(n - s); }

// Minimal n with b(n,s) >= a(s). The hint only saves work; correctness does
// not depend on it, since the search also walks down past any overshoot
// (b is strictly increasing in n).
long long n1_from(long long s, long long hint) {
  __int128 a = choose3(3 * s + 2);
  long long n = std::max(hint, 3 * s + 2);
  while (b_i128(n, s) < a) ++n;
  while (n > 3 * s + 2 && b_i128(n - 1, s) >= a) --n;
  return n;
}

}  // namespace

Int a_of(long s) {
  if (s < 0) throw std::invalid_argument("a_of: s >= 0 required");
  return binom(3 * s + 2, 3);
}

Int b_of(long n, long s) {
  if (s < 0 || n < s) throw std::invalid_argument("b_of: need n >= s >= 0");
  return binom(n, 3) - binom(n - s, 3);
}

Int M_of(long n, long s) {
  Int a = a_of(s), b = b_of(n, s);
  return a >= b ? a : b;
}

long n1_exact(long s) {
  if (s < 1) throw std::invalid_argument("n1_exact: s >= 1 required");
  return static_cast<long>(n1_from(s, 3 * s + 2));
}

long n1_formula(long s) {
  if (s < 1) throw std::invalid_argument("n1_formula: s >= 1 required");
  // n1 = 1 + ceil((3s + sqrt(g))/6). With r = floor(sqrt(g)):
  // exact square  -> ceil((3s+r)/6);
  // otherwise the surd is irrational, no multiple of 6 can sit between
  // 3s+r and 3s+sqrt(g), so the value is floor((3s+r)/6) + 1.
  unsigned long long g = 321ULL * s * s + 324ULL * s + 84ULL;
  unsigned long long r;
  bool square = is_square_u64(g, r);
  long long t = 3LL * s + static_cast<long long>(r);
  long long ceil_val = square ? (t + 5) / 6 : t / 6 + 1;
  return static_cast<long>(1 + ceil_val);
}

N1Bounds n1_bounds_check(long s) {
  if (s < 1) throw std::invalid_argument("n1_bounds_check: s >= 1 required");
  long n1 = n1_exact(s);
  N1Bounds b;
  b.upper = 2 * n1 <= 7 * s + 6;    // n1 <= 7s/2 + 3
  b.lower = 5 * n1 >= 17 * s + 5;   // n1 >= 17s/5 + 1
  b.gap = s >= 2 ? n1 - n1_exact(s - 1) >= 2 : false;
  return b;
}

long n1_bounds_sweep(long s_max) {
  long long prev = 0;
  for (long long s = 1; s <= s_max; ++s) {
    // n1(s) >= n1(s-1): resume the monotone search where it stopped.
    long long n1 = n1_from(s, std::max(prev, 3 * s + 2));
    if (!(2 * n1 <= 7 * s + 6)) return static_cast<long>(s);
    if (!(5 * n1 >= 17 * s + 5)) return static_cast<long>(s);
    if (s >= 2 && !(n1 - prev >= 2)) return static_cast<long>(s);
    prev = n1;
  }
  return 0;
}

EdgeBound erdos_gallai_bound(long n, long s) {
  if (n < 1 || s < 0) throw std::invalid_argument("erdos_gallai_bound: bad args");
  Int first = binom(2 * s + 1, 2);
  Int second = binom(n - 1, 2) - binom(n - 1 - s, 2);
  if (second >= first) return EdgeBound{second, true};
  return EdgeBound{first, false};
}

TripleSystem build_A(long n, long s) {
  if (s < 0 || n < 3 * s + 2)
    throw std::invalid_argument("build_A: need n >= 3s+2");
  std::vector<Triple> e = all_triples(static_cast<int>(3 * s + 2));
  return TripleSystem(static_cast<int>(n), std::move(e));
}

TripleSystem build_B(long n, long s) {
  if (s < 0 || n < s) throw std::invalid_argument("build_B: need n >= s");
  std::vector<Triple> e;
  for (const Triple& t : all_triples(static_cast<int>(n)))
    if (t.min() <= s) e.push_back(t);
  return TripleSystem(static_cast<int>(n), std::move(e));
}

bool b_recurrence_identity(long n, long s) {
  if (n < s + 1) throw std::invalid_argument("b_recurrence_identity: n >= s+1");
  Int lhs = binom(n - 1, 3) - binom(n - 1 - s, 3) + binom(n - 1, 2) -
            binom(n - 1 - s, 2);
  Int rhs = binom(n, 3) - binom(n - s, 3);
  return lhs == rhs;
}

bool prefix_depth_bound_check(long s_max) {
  if (s_max < 1) throw std::invalid_argument("prefix_depth_bound_check: s_max >= 1");
  for (long long s = 1; s <= s_max; ++s) {
    long long n_min = (17 * s + 4) / 5;  // ceil(17s/5)
    for (long long q = 1; q <= s; ++q) {
      if (5 * q <= s + 5) continue;      // only q > s/5 + 1 are claimed
      if (!(n_min - q > 4 * (s - q) + 3)) return false;
    }
  }
  return true;
}

bool narrow_swap_bound_ok_at(long s, long n) {
  if (s < 3) throw std::invalid_argument("narrow_swap_bound_ok: s >= 3");
  // (n-3s-3)/C(s-1,2) <= s/((s-1)(s-2))  <=>  2(n-3s-3) <= s.
  Rat lhs(static_cast<long>(n - 3 * s - 3));
  lhs /= Rat(binom(s - 1, 2));
  Rat rhs(static_cast<long>(s));
  rhs /= Rat(Int(s - 1) * Int(s - 2));
  return lhs <= rhs;
}

bool narrow_swap_bound_ok(long s) {
  return narrow_swap_bound_ok_at(s, n1_exact(s));
}

}  // namespace emc
