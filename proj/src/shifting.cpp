#include "emc/shifting.hpp"

#include <cassert>
#include <stdexcept>

namespace emc {

bool dominates(const SmallSet& a, const SmallSet& b) {
  if (a.size != b.size)
    throw std::invalid_argument("dominates: sets differ in size");
  for (int i = 0; i < a.size; ++i)
    if (a.v[i] > b.v[i]) return false;
  return true;
}

bool dominates(const Triple& a, const Triple& b) {
  return a.v[0] <= b.v[0] && a.v[1] <= b.v[1] && a.v[2] <= b.v[2];
}

namespace {

// Stability is equivalent to closure under single-coordinate decrements:
// any dominated triple is reachable from the edge through a chain of
// one-step decrements that stay strictly increasing.
bool unit_predecessors_present(const TripleSystem& f, const Triple& t,
                               Triple* missing) {
  for (int i = 0; i < 3; ++i) {
    Vertex x = t.v[i] - 1;
    if (x < 1 || t.contains(x)) continue;
    Triple p = t;
    p.v[i] = x;
    if (!f.contains(p)) {
      if (missing) *missing = p;
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_stable(const TripleSystem& f) {
  for (const Triple& t : f.edges())
    if (!unit_predecessors_present(f, t, nullptr)) return false;
  return true;
}

std::optional<StabilityViolation> stability_violation(const TripleSystem& f) {
  if (is_stable(f)) return std::nullopt;
  // Deterministic witness: first missing triple in lex order, then the
  // first edge dominating it.
  for (const Triple& a : all_triples(f.n())) {
    if (f.contains(a)) continue;
    for (const Triple& b : f.edges())
      if (dominates(a, b)) return StabilityViolation{a, b};
  }
  assert(false && "unstable family must have a violating pair");
  return std::nullopt;
}

std::optional<TripleSystem> shift_once(const TripleSystem& f) {
  auto viol = stability_violation(f);
  if (!viol) return std::nullopt;
  return f.without_edge(viol->edge).with_edge(viol->missing);
}

long long shift_potential(const TripleSystem& f) {
  long long p = 0;
  for (const Triple& t : f.edges()) p += t.v[0] + t.v[1] + t.v[2];
  return p;
}

TripleSystem stabilize(const TripleSystem& f) {
  TripleSystem cur = f;
  long long pot = shift_potential(cur);
  while (auto next = shift_once(cur)) {
    long long npot = shift_potential(*next);
    assert(npot < pot && "shift must strictly decrease the potential");
    assert(next->size() == cur.size());
    cur = std::move(*next);
    pot = npot;
  }
  return cur;
}

}  // namespace emc
