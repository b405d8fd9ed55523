#pragma once

#include <optional>
#include <utility>

#include "emc/core.hpp"

namespace emc {

/// Componentwise domination on sorted tuples of equal size: a_i <= b_i.
/// Throws on size mismatch.
bool dominates(const SmallSet& a, const SmallSet& b);
bool dominates(const Triple& a, const Triple& b);

/// True iff F is a downset under domination.
bool is_stable(const TripleSystem& f);

/// A pair (missing, edge) with missing ∉ F, edge ∈ F, missing ≺ edge;
/// the lexicographically first such pair (missing scanned first).
struct StabilityViolation {
  Triple missing;
  Triple edge;
};
std::optional<StabilityViolation> stability_violation(const TripleSystem& f);

/// One shift: swaps the lexicographically first violating pair (adds the
/// missing triple, removes the dominated edge). nullopt if already stable.
std::optional<TripleSystem> shift_once(const TripleSystem& f);

/// Iterates shift_once to a fixpoint. Preserves |F|; the result is stable.
/// Terminates because each shift strictly lowers shift_potential.
TripleSystem stabilize(const TripleSystem& f);

/// Sum over edges of the sum of their elements; the termination measure.
long long shift_potential(const TripleSystem& f);

}  // namespace emc
