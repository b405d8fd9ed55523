#pragma once

#include <optional>
#include <vector>

#include "emc/arith.hpp"
#include "emc/core.hpp"

namespace emc {

struct WeightParams {
  long n = 0;
  long s = 0;  // weights need s >= 3 so the spread denominators are positive
};

/// An s-matching inside [3s+2] avoiding vertex 1, together with the
/// leftover pair {1,d}. The s triples partition [3s+2] minus {1,d}.
struct MatchingFrame {
  long s = 0;
  Vertex d = 0;
  std::vector<Triple> cols;  // pairwise disjoint, lexicographically sorted
};

/// Builds a frame from an actual matching of F: scans d upward from 2 and
/// takes the first d admitting an s-matching of F covering [3s+2]\{1,d},
/// so d is as small as possible. Empty when no such matching exists
/// (families without property ONE).
std::optional<MatchingFrame> find_frame(const TripleSystem& f, long s);

/// Number of frame triples met by H.
int spread(const SmallSet& h, const MatchingFrame& frame);

/// w(H) = C(n-3s-2, 3-|H|) / C(s-z(H), 3-z(H)). Defined for |H| in {2,3}
/// with spread >= 1; anything else is rejected.
Rat weight(const SmallSet& h, const MatchingFrame& frame,
           const WeightParams& p);

/// Σ over distinct traces H in window [3s+2] of C(n-3s-2, 3-|H|).
/// Requires F stable, maximal, nu(F) == s and n >= 3s+3; refuses otherwise.
/// On families closed under supersets of their small traces this equals |F|.
Int trace_extension_total(const TripleSystem& f, long s);

/// Σ_H C(s-z(H), 3-z(H)) · w(H): the per-trace closed form of the double
/// count over column triples τ. Preconditions as above plus s >= 3, a valid
/// frame, and no trace of size < 2.
Rat weighted_trace_total(const TripleSystem& f, const MatchingFrame& frame,
                         const WeightParams& p);

/// The literal double sum Σ_{τ ∈ C([s],3)} Σ_{H ⊆ V^τ} w(H); exponential in
/// nothing but C(s,3), intended as a small-s cross-check of the closed form.
Rat weighted_trace_total_by_tau(const TripleSystem& f,
                                const MatchingFrame& frame,
                                const WeightParams& p);

/// #{τ : H ⊆ V^τ} by direct enumeration of all C(s,3) column triples.
long tau_count(const SmallSet& h, const MatchingFrame& frame);

/// Total weight of all 165 triples on the 11-vertex board, by direct
/// summation over the board. Satisfies C(s,3) · W = C(3s+2,3) = a(s).
Rat W_complete(long s);

}  // namespace emc
