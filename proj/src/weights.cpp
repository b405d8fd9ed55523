#include "emc/weights.hpp"

#include <algorithm>
#include <cassert>

#include "emc/matching.hpp"
#include "emc/search.hpp"
#include "emc/shifting.hpp"

namespace emc {

namespace {

// Exact cover of `free_mask` by edges of `pool`, lexicographically first.
bool cover_exactly(const std::vector<Triple>& pool, std::uint64_t free_mask,
                   std::vector<Triple>& out) {
  if (free_mask == 0) return true;
  std::uint64_t low = free_mask & (~free_mask + 1);
  for (const Triple& t : pool) {
    std::uint64_t m = t.mask();
    if ((m & low) == 0) continue;
    if ((m & ~free_mask) != 0) continue;
    out.push_back(t);
    if (cover_exactly(pool, free_mask & ~m, out)) return true;
    out.pop_back();
  }
  return false;
}

void check_weight_params(const WeightParams& p) {
  if (p.s < 3 || p.n < 3 * p.s + 3)
    throw std::invalid_argument("WeightParams: need s >= 3 and n >= 3s+3");
}

void check_extension_preconditions(const TripleSystem& f, long s,
                                   const char* who) {
  if (f.n() < 3 * s + 3)
    throw std::invalid_argument(std::string(who) + ": n >= 3s+3 required");
  if (!is_stable(f))
    throw std::invalid_argument(std::string(who) + ": family is not stable");
  if (nu(MixedFamily::from_system(f)) != s)
    throw std::invalid_argument(std::string(who) + ": nu(F) != s");
  if (!is_maximal(f, static_cast<int>(s)))
    throw std::invalid_argument(std::string(who) + ": family is not maximal");
}

}  // namespace

std::optional<MatchingFrame> find_frame(const TripleSystem& f, long s) {
  if (s < 1 || f.n() < 3 * s + 2) return std::nullopt;
  if (3 * s + 2 > 64)
    throw std::invalid_argument("find_frame: window exceeds 64 vertices");
  int w = static_cast<int>(3 * s + 2);
  std::uint64_t window = (1ULL << w) - 1;
  std::vector<Triple> pool;
  for (const Triple& t : f.edges())
    if (t.max() <= w && t.min() >= 2) pool.push_back(t);
  for (Vertex d = 2; d <= w; ++d) {
    std::uint64_t free_mask = window & ~1ULL & ~(1ULL << (d - 1));
    std::vector<Triple> cols;
    std::vector<Triple> usable;
    for (const Triple& t : pool)
      if (!t.contains(d)) usable.push_back(t);
    if (cover_exactly(usable, free_mask, cols)) {
      std::sort(cols.begin(), cols.end());
      return MatchingFrame{s, d, std::move(cols)};
    }
  }
  return std::nullopt;
}

int spread(const SmallSet& h, const MatchingFrame& frame) {
  if (h.v[h.size - 1] > 3 * frame.s + 2)
    throw std::invalid_argument("spread: set leaves the window");
  std::uint64_t hm = h.mask();
  int z = 0;
  for (const Triple& c : frame.cols)
    if (c.mask() & hm) ++z;
  return z;
}

Rat weight(const SmallSet& h, const MatchingFrame& frame,
           const WeightParams& p) {
  check_weight_params(p);
  if (h.size < 2)
    throw std::invalid_argument("weight: undefined for singleton sets");
  int z = spread(h, frame);
  if (z == 0)
    throw std::invalid_argument("weight: spread 0 (subset of the leftover pair)");
  Rat r(binom(p.n - 3 * p.s - 2, 3 - h.size));
  r /= Rat(binom(p.s - z, 3 - z));
  return r;
}

Int trace_extension_total(const TripleSystem& f, long s) {
  check_extension_preconditions(f, s, "trace_extension_total");
  TraceFamily tf = trace(f, static_cast<int>(3 * s + 2));
  Int total = 0;
  long ext = f.n() - 3 * s - 2;
  for (const SmallSet& h : tf.members) total += binom(ext, 3 - h.size);
  return total;
}

Rat weighted_trace_total(const TripleSystem& f, const MatchingFrame& frame,
                         const WeightParams& p) {
  check_weight_params(p);
  check_extension_preconditions(f, p.s, "weighted_trace_total");
  if (f.n() != p.n) throw std::invalid_argument("weighted_trace_total: n mismatch");
  TraceFamily tf = trace(f, static_cast<int>(3 * p.s + 2));
  Rat total = 0;
  for (const SmallSet& h : tf.members) {
    if (h.size < 2)
      throw std::invalid_argument(
          "weighted_trace_total: singleton trace (family lacks ONE)");
    int z = spread(h, frame);
    total += Rat(binom(p.s - z, 3 - z)) * weight(h, frame, p);
  }
  return total;
}

Rat weighted_trace_total_by_tau(const TripleSystem& f,
                                const MatchingFrame& frame,
                                const WeightParams& p) {
  check_weight_params(p);
  if (f.n() != p.n) throw std::invalid_argument("n mismatch");
  TraceFamily tf = trace(f, static_cast<int>(3 * p.s + 2));
  for (const SmallSet& h : tf.members)
    if (h.size < 2)
      throw std::invalid_argument("singleton trace (family lacks ONE)");
  long s = p.s;
  std::uint64_t base = 1ULL | (1ULL << (frame.d - 1));  // {1, d}
  Rat total = 0;
  for (long i = 0; i < s; ++i)
    for (long j = i + 1; j < s; ++j)
      for (long k = j + 1; k < s; ++k) {
        std::uint64_t vt = base | frame.cols[i].mask() |
                           frame.cols[j].mask() | frame.cols[k].mask();
        for (const SmallSet& h : tf.members)
          if ((h.mask() & ~vt) == 0) total += weight(h, frame, p);
      }
  return total;
}

long tau_count(const SmallSet& h, const MatchingFrame& frame) {
  long s = frame.s;
  std::uint64_t base = 1ULL | (1ULL << (frame.d - 1));
  long cnt = 0;
  for (long i = 0; i < s; ++i)
    for (long j = i + 1; j < s; ++j)
      for (long k = j + 1; k < s; ++k) {
        std::uint64_t vt = base | frame.cols[i].mask() |
                           frame.cols[j].mask() | frame.cols[k].mask();
        if ((h.mask() & ~vt) == 0) ++cnt;
      }
  return cnt;
}

Rat W_complete(long s) {
  if (s < 3) throw std::invalid_argument("W_complete: s >= 3 required");
  // Board slots: 0 is vertex 1, 1 is d, slots 2..10 are the three columns.
  auto column = [](int slot) { return slot < 2 ? -1 : (slot - 2) / 3; };
  Rat total = 0;
  for (int x = 0; x < 11; ++x)
    for (int y = x + 1; y < 11; ++y)
      for (int z = y + 1; z < 11; ++z) {
        int cx = column(x), cy = column(y), cz = column(z);
        int met = 0;
        for (int c = 0; c < 3; ++c)
          if (cx == c || cy == c || cz == c) ++met;
        total += Rat(1) / Rat(binom(s - met, 3 - met));
      }
  return total;
}

}  // namespace emc
