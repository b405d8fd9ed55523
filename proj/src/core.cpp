#include "emc/core.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace emc {

Triple Triple::of(Vertex a, Vertex b, Vertex c) {
  Triple t{{a, b, c}};
  std::sort(t.v.begin(), t.v.end());
  if (t.v[0] == t.v[1] || t.v[1] == t.v[2])
    throw std::invalid_argument("triple has repeated vertices");
  if (t.v[0] < 1) throw std::invalid_argument("vertices are 1-based");
  return t;
}

std::uint64_t Triple::mask() const {
  assert(v[2] <= 64);
  return (1ULL << (v[0] - 1)) | (1ULL << (v[1] - 1)) | (1ULL << (v[2] - 1));
}

std::string Triple::str() const {
  return std::to_string(v[0]) + " " + std::to_string(v[1]) + " " +
         std::to_string(v[2]);
}

SmallSet SmallSet::of(std::initializer_list<Vertex> xs) {
  if (xs.size() < 1 || xs.size() > 3)
    throw std::invalid_argument("SmallSet has 1, 2 or 3 elements");
  SmallSet s;
  s.size = static_cast<int>(xs.size());
  std::copy(xs.begin(), xs.end(), s.v.begin());
  std::sort(s.v.begin(), s.v.begin() + s.size);
  for (int i = 0; i + 1 < s.size; ++i)
    if (s.v[i] == s.v[i + 1])
      throw std::invalid_argument("SmallSet has repeated vertices");
  if (s.v[0] < 1) throw std::invalid_argument("vertices are 1-based");
  return s;
}

SmallSet SmallSet::from_triple(const Triple& t) {
  SmallSet s;
  s.size = 3;
  s.v = t.v;
  return s;
}

bool SmallSet::contains(Vertex x) const {
  for (int i = 0; i < size; ++i)
    if (v[i] == x) return true;
  return false;
}

std::uint64_t SmallSet::mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < size; ++i) {
    assert(v[i] <= 64);
    m |= 1ULL << (v[i] - 1);
  }
  return m;
}

std::string SmallSet::str() const {
  std::string s;
  for (int i = 0; i < size; ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const SmallSet& a, const SmallSet& b) {
  int k = std::min(a.size, b.size);
  for (int i = 0; i < k; ++i)
    if (a.v[i] != b.v[i]) return a.v[i] <=> b.v[i];
  return a.size <=> b.size;
}

TripleSystem::TripleSystem(int n, std::vector<Triple> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
    if (edges_[i] == edges_[i + 1])
      throw std::invalid_argument("duplicate edge " + edges_[i].str());
  for (const Triple& t : edges_)
    if (t.max() > n_)
      throw std::invalid_argument("edge " + t.str() + " exceeds n=" +
                                  std::to_string(n_));
}

bool TripleSystem::contains(const Triple& t) const {
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

TripleSystem TripleSystem::with_edge(const Triple& t) const {
  if (contains(t)) return *this;
  std::vector<Triple> e = edges_;
  e.insert(std::upper_bound(e.begin(), e.end(), t), t);
  TripleSystem r;
  r.n_ = n_;
  r.edges_ = std::move(e);
  if (t.max() > n_) throw std::invalid_argument("edge exceeds vertex set");
  return r;
}

TripleSystem TripleSystem::without_edge(const Triple& t) const {
  TripleSystem r;
  r.n_ = n_;
  r.edges_ = edges_;
  auto it = std::lower_bound(r.edges_.begin(), r.edges_.end(), t);
  if (it != r.edges_.end() && *it == t) r.edges_.erase(it);
  return r;
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  if (n >= 3) out.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c) out.push_back(Triple{{a, b, c}});
  return out;
}

TripleSystem complete_system(int n) { return TripleSystem(n, all_triples(n)); }

std::vector<std::array<Vertex, 2>> link(const TripleSystem& f, Vertex v) {
  if (v < 1 || v > f.n())
    throw std::invalid_argument("link: vertex out of range");
  std::vector<std::array<Vertex, 2>> out;
  for (const Triple& t : f.edges()) {
    if (!t.contains(v)) continue;
    std::array<Vertex, 2> p{};
    int k = 0;
    for (Vertex x : t.v)
      if (x != v) p[k++] = x;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TripleSystem residual(const TripleSystem& f, Vertex v) {
  if (v < 1 || v > f.n())
    throw std::invalid_argument("residual: vertex out of range");
  std::vector<Triple> e;
  for (const Triple& t : f.edges())
    if (!t.contains(v)) e.push_back(t);
  return TripleSystem(f.n(), std::move(e));
}

TripleSystem drop_prefix(const TripleSystem& f, int q) {
  if (q < 0 || q >= f.n())
    throw std::invalid_argument("drop_prefix: need 0 <= q < n");
  std::vector<Triple> e;
  for (const Triple& t : f.edges()) {
    if (t.min() <= q) continue;
    e.push_back(Triple{{t.v[0] - q, t.v[1] - q, t.v[2] - q}});
  }
  return TripleSystem(f.n() - q, std::move(e));
}

TraceFamily trace(const TripleSystem& f, int m) {
  if (m < 1 || m > f.n())
    throw std::invalid_argument("trace: need 1 <= m <= n");
  std::vector<SmallSet> members;
  for (const Triple& t : f.edges()) {
    SmallSet s;
    for (Vertex x : t.v)
      if (x <= m) s.v[s.size++] = x;
    if (s.size == 0)
      throw std::invalid_argument("trace: edge " + t.str() +
                                  " is disjoint from the window");
    members.push_back(s);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return TraceFamily{m, std::move(members)};
}

TripleSystem read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long n = -1, m = -1;
  std::vector<Triple> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw ParseError(line_no, "expected header 'n m'");
      std::string rest;
      if (ls >> rest) throw ParseError(line_no, "trailing tokens in header");
      continue;
    }
    long a, b, c;
    if (!(ls >> a >> b >> c))
      throw ParseError(line_no, "expected three vertices");
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "trailing tokens after edge");
    if (!(1 <= a && a < b && b < c && c <= n))
      throw ParseError(line_no, "vertices must be strictly increasing in [1,n]");
    edges.push_back(Triple{{static_cast<Vertex>(a), static_cast<Vertex>(b),
                            static_cast<Vertex>(c)}});
  }
  if (n < 0) throw ParseError(line_no, "missing header 'n m'");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(line_no, "header announced " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  try {
    return TripleSystem(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

TripleSystem read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const TripleSystem& f) {
  out << f.n() << ' ' << f.size() << '\n';
  for (const Triple& t : f.edges()) out << t.str() << '\n';
}

void write_edge_list_file(const std::string& path, const TripleSystem& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(out, f);
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace emc
