#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace emc {

// Vertices are 1-based; the linear order on vertices is the integer order.
using Vertex = int;

/// A 3-element vertex set, stored strictly increasing.
struct Triple {
  std::array<Vertex, 3> v{};

  static Triple of(Vertex a, Vertex b, Vertex c);

  friend auto operator<=>(const Triple&, const Triple&) = default;

  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  Vertex min() const { return v[0]; }
  Vertex max() const { return v[2]; }

  /// Bit i-1 set for vertex i. Requires all vertices <= 64.
  std::uint64_t mask() const;

  std::string str() const;
};

/// A vertex set of size 1, 2 or 3, stored strictly increasing. Sets of size
/// below 3 arise as traces and as graph edges; they are never 3-graph edges.
struct SmallSet {
  int size = 0;
  std::array<Vertex, 3> v{};

  static SmallSet of(std::initializer_list<Vertex> xs);
  static SmallSet from_triple(const Triple& t);

  bool contains(Vertex x) const;
  std::uint64_t mask() const;
  std::string str() const;

  friend bool operator==(const SmallSet&, const SmallSet&) = default;
  // Lexicographic on the element sequence; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const SmallSet& a, const SmallSet& b);
};

/// A 3-uniform hypergraph on vertex set [n]. Edges are kept sorted
/// lexicographically and duplicate-free, so iteration order (and hence
/// every search built on top) is deterministic.
class TripleSystem {
 public:
  TripleSystem() = default;
  TripleSystem(int n, std::vector<Triple> edges);

  int n() const { return n_; }
  const std::vector<Triple>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Triple& t) const;

  /// Same vertex set, edge added (no-op if present).
  TripleSystem with_edge(const Triple& t) const;
  /// Same vertex set, edge removed (no-op if absent).
  TripleSystem without_edge(const Triple& t) const;

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
};

/// All C(n,3) triples on [n] in lexicographic order.
std::vector<Triple> all_triples(int n);

/// The complete 3-graph on [n].
TripleSystem complete_system(int n);

/// The link F(v): all pairs P with P ∪ {v} an edge, on vertex set [n]\{v}.
std::vector<std::array<Vertex, 2>> link(const TripleSystem& f, Vertex v);

/// The residual F(v̄): all edges avoiding v, on the same vertex set.
TripleSystem residual(const TripleSystem& f, Vertex v);

/// The induced system on {q+1,..,n}, re-indexed order-preservingly to
/// [1, n-q]. Edges meeting [q] are dropped. Requires 0 <= q < n.
TripleSystem drop_prefix(const TripleSystem& f, int q);

/// The distinct intersections of edges with the window [m].
struct TraceFamily {
  int window = 0;
  std::vector<SmallSet> members;  // sorted, distinct
};

/// Computes {F ∩ [m] : F edge}. Throws if some edge is disjoint from [m]
/// (an empty trace signals a window too small for this family).
TraceFamily trace(const TripleSystem& f, int m);

// --- edge-list text format ----------------------------------------------
//
// First line "n m"; then m lines of three strictly increasing 1-based
// vertices separated by single spaces. Lines starting with '#' are
// comments. Writers emit edges in lexicographic order.

struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

TripleSystem read_edge_list(std::istream& in);
TripleSystem read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const TripleSystem& f);
void write_edge_list_file(const std::string& path, const TripleSystem& f);

}  // namespace emc
