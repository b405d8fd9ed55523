#include "emc/matching.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace emc {

namespace {

void check_family(int n, const std::vector<SmallSet>& members) {
  if (n < 0 || n > 64)
    throw std::invalid_argument("MixedFamily: need 0 <= n <= 64");
  for (const SmallSet& s : members)
    if (s.v[s.size - 1] > n)
      throw std::invalid_argument("member " + s.str() + " exceeds n");
}

// Branch-and-bound maximum set packing over bitmasks. Branch vertex: the
// lowest vertex covered by an available member; one branch per member
// containing it (lexicographic order), plus the branch leaving it uncovered.
struct Packer {
  std::span<const std::uint64_t> ms;
  int target = -1;           // >= 0: stop as soon as `target` reached
  int best = 0;
  bool hit_target = false;
  std::vector<int> cur, best_pick;

  void dfs(std::uint64_t used, int matched) {
    if (matched > best) {
      best = matched;
      best_pick = cur;
    }
    if (target >= 0 && matched >= target) {
      hit_target = true;
      return;
    }
    // One pass: find the lowest coverable vertex and an optimistic bound.
    std::uint64_t coverable = 0;
    int avail = 0, min_size = 4;
    for (std::uint64_t m : ms)
      if ((m & used) == 0) {
        coverable |= m;
        ++avail;
        min_size = std::min(min_size, std::popcount(m));
      }
    if (avail == 0) return;
    int bound = matched +
                std::min(avail, std::popcount(coverable) / min_size);
    if (target >= 0) {
      if (bound < target) return;
    } else if (bound <= best) {
      return;
    }
    std::uint64_t pivot = coverable & (~coverable + 1);  // lowest vertex bit
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::uint64_t m = ms[i];
      if ((m & pivot) == 0 || (m & used) != 0) continue;
      cur.push_back(static_cast<int>(i));
      dfs(used | m, matched + 1);
      cur.pop_back();
      if (hit_target) return;
    }
    dfs(used | pivot, matched);  // leave the pivot vertex uncovered
  }
};

std::vector<std::uint64_t> member_masks(const MixedFamily& f) {
  std::vector<std::uint64_t> ms;
  ms.reserve(f.members.size());
  for (const SmallSet& s : f.members) ms.push_back(s.mask());
  return ms;
}

}  // namespace

MixedFamily MixedFamily::from(int n, std::vector<SmallSet> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  check_family(n, members);
  return MixedFamily{n, std::move(members)};
}

MixedFamily MixedFamily::from_system(const TripleSystem& f) {
  std::vector<SmallSet> m;
  m.reserve(f.size());
  for (const Triple& t : f.edges()) m.push_back(SmallSet::from_triple(t));
  check_family(f.n(), m);
  return MixedFamily{f.n(), std::move(m)};
}

MixedFamily MixedFamily::from_trace(int n, const TraceFamily& t) {
  check_family(n, t.members);
  return MixedFamily{n, t.members};
}

int nu(const MixedFamily& f) {
  Matching w;
  return nu(f, w);
}

int nu(const MixedFamily& f, Matching& witness_out) {
  auto ms = member_masks(f);
  Packer p{ms};
  p.dfs(0, 0);
  witness_out.members.clear();
  for (int i : p.best_pick) witness_out.members.push_back(f.members[i]);
#ifndef NDEBUG
  std::uint64_t seen = 0;
  for (const SmallSet& s : witness_out.members) {
    assert((seen & s.mask()) == 0 && "witness not pairwise disjoint");
    seen |= s.mask();
    assert(std::binary_search(f.members.begin(), f.members.end(), s));
  }
  assert(static_cast<int>(witness_out.members.size()) == p.best);
#endif
  return p.best;
}

bool has_matching_of_size(const MixedFamily& f, int k) {
  if (k <= 0) return true;
  auto ms = member_masks(f);
  return masks_have_matching(ms, k);
}

int nu_with_avoidance(const MixedFamily& f, const std::vector<Vertex>& avoid) {
  std::uint64_t av = 0;
  for (Vertex x : avoid) {
    if (x < 1 || x > f.n)
      throw std::invalid_argument("avoid set exceeds vertex range");
    av |= 1ULL << (x - 1);
  }
  std::vector<std::uint64_t> ms;
  for (const SmallSet& s : f.members) {
    std::uint64_t m = s.mask();
    if ((m & av) == 0) ms.push_back(m);
  }
  Packer p{ms};
  p.dfs(0, 0);
  return p.best;
}

bool masks_have_matching(std::span<const std::uint64_t> members, int k,
                         std::uint64_t avoid) {
  if (k <= 0) return true;
  std::vector<std::uint64_t> ms;
  ms.reserve(members.size());
  for (std::uint64_t m : members)
    if ((m & avoid) == 0) ms.push_back(m);
  if (static_cast<int>(ms.size()) < k) return false;
  Packer p{ms, k};
  p.dfs(0, 0);
  return p.hit_target;
}

}  // namespace emc
