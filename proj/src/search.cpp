#include "emc/search.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cassert>

#include "emc/extremal.hpp"
#include "emc/matching.hpp"
#include "emc/shifting.hpp"

namespace emc {

bool has_one(const TripleSystem& f) {
  auto whole = MixedFamily::from_system(f);
  if (f.n() == 0 || f.empty()) return true;
  auto rest = MixedFamily::from_system(residual(f, 1));
  return nu(rest) == nu(whole);
}

namespace {

std::vector<std::uint64_t> edge_masks(const TripleSystem& f) {
  std::vector<std::uint64_t> ms;
  ms.reserve(f.size());
  for (const Triple& t : f.edges()) ms.push_back(t.mask());
  return ms;
}

void require_nu(const TripleSystem& f, int s, const char* who) {
  int actual = nu(MixedFamily::from_system(f));
  if (actual != s)
    throw std::invalid_argument(std::string(who) + ": nu(F) = " +
                                std::to_string(actual) + ", expected " +
                                std::to_string(s));
}

}  // namespace

bool is_maximal(const TripleSystem& f, int s) {
  require_nu(f, s, "is_maximal");
  auto ms = edge_masks(f);
  for (const Triple& t : all_triples(f.n())) {
    if (f.contains(t)) continue;
    // Adding t keeps nu == s iff no s-matching of F avoids t entirely.
    if (!masks_have_matching(ms, s, t.mask())) return false;
  }
  return true;
}

TripleSystem make_maximal(const TripleSystem& f, int s) {
  require_nu(f, s, "make_maximal");
  TripleSystem cur = f;
  auto ms = edge_masks(cur);
  for (const Triple& t : all_triples(f.n())) {
    if (cur.contains(t)) continue;
    if (!masks_have_matching(ms, s, t.mask())) {
      cur = cur.with_edge(t);
      ms.push_back(t.mask());
    }
  }
#ifndef NDEBUG
  require_nu(cur, s, "make_maximal(post)");
#endif
  return cur;
}

BruteForceTable m_bruteforce(int n) {
  if (n < 3) {
    BruteForceTable t;
    t.n = n;
    t.m = {0};
    return t;
  }
  auto tris = all_triples(n);
  int count = static_cast<int>(tris.size());
  if (count > 24)
    throw BudgetError("m_bruteforce: C(" + std::to_string(n) +
                      ",3) = " + std::to_string(count) +
                      " exceeds the enumeration budget of 24 triples (n <= 6)");
  // Within the budget n <= 6, so three pairwise disjoint triples cannot
  // fit and nu is 0, 1 or 2.
  assert(n <= 6);
  std::vector<std::uint32_t> disjoint(count, 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && (tris[i].mask() & tris[j].mask()) == 0)
        disjoint[i] |= 1u << j;

  BruteForceTable t;
  t.n = n;
  t.m.assign(n / 3 + 1, 0);
  for (std::uint32_t fam = 1; fam < (1u << count); ++fam) {
    int nu_val = 1;
    for (std::uint32_t rest = fam; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      if (fam & disjoint[i]) {
        nu_val = 2;
        break;
      }
    }
    if (nu_val < static_cast<int>(t.m.size())) {
      long long sz = std::popcount(fam);
      t.m[nu_val] = std::max(t.m[nu_val], sz);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Shifted search: depth-first over downsets of the domination order on
// triples of [n], taken in lexicographic order (a linear extension).
// Invariant: the included set is a downset at every node, hence a stable
// family; a stable family has matching number > s iff it holds an
// (s+1)-matching inside [3s+3], so only triples inside that window ever
// need a matching test.
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxTriples = 256;  // C(12,3) = 220 fits
using TripleBits = std::bitset<kMaxTriples>;

struct ShiftedSearch {
  int n, s;
  bool one_only;
  std::vector<Triple> tris;
  int count;
  std::vector<TripleBits> succs;
  std::vector<TripleBits> preds;
  std::vector<std::uint64_t> vmask;
  std::vector<char> in_win3;  // triple inside [3s+3]
  std::vector<char> in_winS;  // triple inside [3s]
  std::vector<char> in_one;   // triple inside [2, 3s+1]

  long long incumbent;
  bool improved = false;
  TripleBits best_set;
  std::uint64_t nodes = 0;

  std::vector<std::uint64_t> win_members;  // masks of included window triples
  std::vector<int> included_list;

  ShiftedSearch(int n_, int s_, bool one_only_, long long seed)
      : n(n_), s(s_), one_only(one_only_), tris(all_triples(n_)),
        count(static_cast<int>(tris.size())), incumbent(seed) {
    succs.assign(count, {});
    preds.assign(count, {});
    vmask.resize(count);
    in_win3.resize(count);
    in_winS.resize(count);
    in_one.resize(count);
    for (int i = 0; i < count; ++i) {
      vmask[i] = tris[i].mask();
      in_win3[i] = tris[i].max() <= 3 * s + 3;
      in_winS[i] = tris[i].max() <= 3 * s;
      in_one[i] = tris[i].min() >= 2 && tris[i].max() <= 3 * s + 1;
    }
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j)
        if (i != j && dominates(tris[i], tris[j])) {
          // lex order refines domination
          assert(i < j);
          succs[i].set(j);
          preds[j].set(i);
        }
  }

  void leaf(int count_inc) {
    // nu <= s holds by construction; nu >= s needs an s-matching, which a
    // stable family has iff one fits inside [3s].
    std::vector<std::uint64_t> ms;
    for (int i : included_list)
      if (in_winS[i]) ms.push_back(vmask[i]);
    if (!masks_have_matching(ms, s)) return;
    if (one_only) {
      ms.clear();
      for (int i : included_list)
        if (in_one[i]) ms.push_back(vmask[i]);
      if (!masks_have_matching(ms, s)) return;
    }
    incumbent = count_inc;
    improved = true;
    best_set.reset();
    for (int i : included_list) best_set.set(i);
  }

  void dfs(int pos, int count_inc, int alive, TripleBits included,
           TripleBits dead) {
    ++nodes;
    if (count_inc + alive <= incumbent) return;  // cannot strictly improve
    if (pos == count) {
      leaf(count_inc);
      return;
    }
    if (dead[pos]) {
      dfs(pos + 1, count_inc, alive, included, dead);
      return;
    }
    assert((preds[pos] & ~included).none());
    bool can_include =
        !in_win3[pos] || !masks_have_matching(win_members, s, vmask[pos]);
    if (can_include) {
      TripleBits inc2 = included;
      inc2.set(pos);
      if (in_win3[pos]) win_members.push_back(vmask[pos]);
      included_list.push_back(pos);
      dfs(pos + 1, count_inc + 1, alive - 1, inc2, dead);
      included_list.pop_back();
      if (in_win3[pos]) win_members.pop_back();
    }
    TripleBits newdead = succs[pos] & ~dead;
    dfs(pos + 1, count_inc, alive - 1 - static_cast<int>(newdead.count()),
        included, dead | newdead);
  }
};

}  // namespace

SearchResult m_shifted(int n, int s, bool one_only, const SearchLimits& lim) {
  if (s < 0 || n < 0) throw std::invalid_argument("m_shifted: bad parameters");
  if (n < 3 * s + 2)
    throw std::invalid_argument(
        "m_shifted: n >= 3s+2 required (below that m(n,s) <= a(s) trivially)");
  if (!lim.force) {
    int cap = s <= 2 ? lim.max_n_s_le2 : (s == 3 ? lim.max_n_s3 : -1);
    if (cap < 0)
      throw BudgetError("m_shifted: s = " + std::to_string(s) +
                        " exceeds the search budget (s <= 3); use --force-budget");
    if (n > cap)
      throw BudgetError("m_shifted: n = " + std::to_string(n) +
                        " exceeds the budget n <= " + std::to_string(cap) +
                        " for s = " + std::to_string(s) + "; use --force-budget");
  }

  // Seed the incumbent with the best valid construction: both A (for
  // n >= 3s+2) and B are stable with matching number s, and A has ONE.
  Int a = a_of(s), b = b_of(n, s);
  long long seed;
  TripleSystem seed_witness;
  if (one_only || a >= b) {
    seed = a.get_si();
    seed_witness = build_A(n, s);
  } else {
    seed = b.get_si();
    seed_witness = build_B(n, s);
  }

  ShiftedSearch search(n, s, one_only, seed);
  search.dfs(0, 0, search.count, {}, {});

  SearchResult r;
  r.n = n;
  r.s = s;
  r.mode = one_only ? SearchMode::ShiftedOne : SearchMode::Shifted;
  r.nodes_explored = search.nodes;
  r.m = search.incumbent;
  if (search.improved) {
    std::vector<Triple> es;
    for (int i = 0; i < search.count; ++i)
      if (search.best_set[i]) es.push_back(search.tris[i]);
    r.witness = TripleSystem(n, std::move(es));
  } else {
    r.witness = std::move(seed_witness);
  }
#ifndef NDEBUG
  assert(static_cast<long long>(r.witness.size()) == r.m);
  assert(is_stable(r.witness));
  assert(nu(MixedFamily::from_system(r.witness)) == s);
  assert(!one_only || has_one(r.witness));
#endif
  return r;
}

}  // namespace emc
