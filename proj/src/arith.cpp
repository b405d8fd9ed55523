#include "emc/arith.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace emc {

Int to_int(long long v) {
  Int r;
  bool neg = v < 0;
  unsigned long long u = neg ? -static_cast<unsigned long long>(v) : v;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  if (neg) r = -r;
  return r;
}

Int binom(long n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

long long binom_ll(long long n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned long long>(n - k + i);
    acc /= static_cast<unsigned long long>(i);
    if (acc > static_cast<unsigned __int128>(
                  std::numeric_limits<long long>::max()))
      throw std::overflow_error("binom_ll: value does not fit in int64");
  }
  return static_cast<long long>(acc);
}

unsigned long long isqrt_u64(unsigned long long x) {
  if (x == 0) return 0;
  auto sq = [](unsigned long long v) {
    return static_cast<unsigned __int128>(v) * v;
  };
  auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && sq(r) > x) --r;
  while (sq(r + 1) <= x) ++r;
  assert(sq(r) <= x && sq(r + 1) > x);
  return r;
}

bool is_square_u64(unsigned long long x, unsigned long long& y) {
  y = isqrt_u64(x);
  return y * y == x;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace emc
