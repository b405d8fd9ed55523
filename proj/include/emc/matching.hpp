#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "emc/core.hpp"

namespace emc {

/// A family of 1-, 2- and 3-element sets on [n]. This is the object the
/// matching-number oracle works on; traces of 3-graphs land here.
struct MixedFamily {
  int n = 0;
  std::vector<SmallSet> members;  // sorted, distinct

  static MixedFamily from(int n, std::vector<SmallSet> members);
  static MixedFamily from_system(const TripleSystem& f);
  static MixedFamily from_trace(int n, const TraceFamily& t);
};

struct Matching {
  std::vector<SmallSet> members;  // pairwise disjoint, drawn from the family
};

/// Exact maximum number of pairwise disjoint members. Deterministic:
/// branches on the member covering the lowest covered vertex, members in
/// lexicographic order, so the witness is reproducible.
int nu(const MixedFamily& f);
int nu(const MixedFamily& f, Matching& witness_out);

/// True iff k pairwise disjoint members exist. Short-circuits; never
/// computes the full matching number.
bool has_matching_of_size(const MixedFamily& f, int k);

/// Maximum matching size among members disjoint from `avoid`.
int nu_with_avoidance(const MixedFamily& f, const std::vector<Vertex>& avoid);

// Low-level entry point shared with the search modules: members given as
// vertex bitmasks. Detects k pairwise disjoint masks avoiding `avoid`.
bool masks_have_matching(std::span<const std::uint64_t> members, int k,
                         std::uint64_t avoid = 0);

}  // namespace emc
