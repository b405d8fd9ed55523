#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "emc/arith.hpp"

namespace emc::board {

// The 11-vertex board: the leftover pair {1,d} plus three frame columns
// F_i = {a_i < b_i < c_i}. Slots are numbered
//   0 -> 1,  1 -> d,  2+3i+r -> row r of column i  (r = 0,1,2 for a,b,c).
//
// The board knows only the conservative partial order
//   1 below everything; a_i < b_i < c_i inside each column; d above 1 only.
// Everything the case analysis deduces must be reproducible from this
// order, the forced members, superset closure of pairs, and the absence
// of 4-matchings.

constexpr int kVerts = 11;
using Mask = std::uint16_t;

std::string vertex_name(int slot);
int column_of(int slot);  // -1 for slots 0 (vertex 1) and 1 (d)
bool slot_leq(int x, int y);

/// A pair or triple of board vertices. Pairs never contain d.
struct BoardSet {
  int size = 0;
  std::array<std::uint8_t, 3> v{};  // increasing slot indices

  static BoardSet of(std::initializer_list<int> slots);
  Mask mask() const;
  /// Number of columns met; 0 only for subsets of {1,d}.
  int spread() const;
  std::string str() const;

  friend bool operator==(const BoardSet&, const BoardSet&) = default;
  friend std::strong_ordering operator<=>(const BoardSet& a,
                                          const BoardSet& b);
};

/// Domination between equal-size board sets: some bijection pairs every
/// element with one above it in the board order.
bool set_dominates(const BoardSet& a, const BoardSet& b);

const std::vector<BoardSet>& all_pairs();          // the 45 d-free pairs, lex
const std::vector<BoardSet>& all_board_triples();  // the 165 triples, lex

/// The three columns, the six {1,d,a_i},{1,d,b_i} triples, and the downward
/// closure of that seed set. Contains no pairs.
const std::vector<BoardSet>& forced_members();

struct BoardConfig {
  std::vector<BoardSet> members;  // sorted, distinct
  static BoardConfig of(std::vector<BoardSet> members);
};

enum class Violation {
  None,
  BadMember,             // size not in {2,3}, or a pair containing d
  MissingForced,         // some forced member absent
  NotDownClosed,         // misses a dominated set of equal size
  PairSupersetMissing,   // pair present, some 3-element superset absent
  FourMatching,          // four pairwise disjoint members
};
std::string violation_name(Violation v);

/// First violated admissibility clause, in the order above.
Violation admissibility(const BoardConfig& c);
bool is_admissible(const BoardConfig& c);

struct Classification {
  int wide_triples = 0, medium_triples = 0, narrow_triples = 0;
  int wide_pairs = 0, narrow_pairs = 0;
  std::array<int, 3> narrow_pairs_by_column{};
  // Wide-pair subsets by which row sets they touch (A = bottom row,
  // B = middle, C = top), plus the bar/underline closures of the paper's
  // bookkeeping: bar adds pairs inside the second row set, underline adds
  // pairs inside the first.
  std::vector<BoardSet> bc, ab, ac;
  std::vector<BoardSet> bc_bar, ab_bar, ac_bar;
  std::vector<BoardSet> bc_full, ab_full, ac_full;
};
Classification classify(const BoardConfig& c);  // requires admissibility

enum class WeightMode { ExactN, BoundForm };

/// Σ w(H) over members with exact-n pair weights; n must be n1(s)-1 or
/// n1(s). Independent of (and cross-checked against) the search's
/// fixed-denominator arithmetic.
Rat config_weight(const BoardConfig& c, long s, long n);

/// Same with pair weights replaced by their n <= 3.5s+3 upper bounds
/// (s/2+1)/(s-2) and (s/2+1)/C(s-1,2); dominates both exact-n weightings.
Rat config_weight_bound(const BoardConfig& c, long s);

struct CaseReport {
  long s = 0;
  long n = 0;  // 0 in bound-form mode
  WeightMode mode = WeightMode::BoundForm;
  Rat max_weight;
  Rat total_weight_W;
  bool verified = false;
  std::optional<BoardConfig> witness;  // populated when verified is false
  std::uint64_t configs_explored = 0;
};

/// Branch-and-bound maximum of config_weight over all admissible
/// configurations, compared against W = W_complete(s). The all-triples
/// configuration is admissible and attains W, so verified means the
/// maximum equals W exactly.
CaseReport verify_board_bound(long s, WeightMode mode, long n = 0);

// Standalone threshold inequalities, exact rationals throughout.

/// x(s/2+1)/(s-2) + 9s/((s-1)(s-2)) <= y
bool pair_budget_ok(long x, long y, long s);

/// 3s/((s-1)(s-2)) <= 9/(s-2)
bool narrow_pair_tradeoff_ok(long s);

/// 12(s/2+1)/(s-2) + 9s/((s-1)(s-2)) - 12/(s-2) <= 7
bool full_pair_tradeoff_ok(long s);

}  // namespace emc::board
