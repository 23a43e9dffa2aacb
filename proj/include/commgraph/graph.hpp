#pragma once
// Commuting graphs: vertices are the noncentral elements, edges join distinct
// commuting pairs. Adjacency is kept as one bit row per vertex so component
// and diameter sweeps run word-parallel.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/bits.hpp"
#include "commgraph/group.hpp"
#include "commgraph/structure.hpp"

namespace commgraph {

struct CommutingGraph {
  const Group* parent = nullptr;
  std::vector<int> vertices;           // ascending element indices
  std::vector<int> vertex_of_element;  // -1 for central elements
  std::vector<Bitset> adj;             // over vertex positions

  bool empty() const { return vertices.empty(); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool adjacent(int u, int v) const { return adj[u].test(v); }
};

inline CommutingGraph build_commuting_graph(const Group& g) {
  CommutingGraph cg;
  cg.parent = &g;
  Subgroup z = center(g);
  cg.vertex_of_element.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x)
    if (!z.contains(x)) {
      cg.vertex_of_element[x] = cg.vertex_count();
      cg.vertices.push_back(x);
    }
  int v = cg.vertex_count();
  cg.adj.assign(v, Bitset(v));
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (g.mul(cg.vertices[i], cg.vertices[j]) == g.mul(cg.vertices[j], cg.vertices[i])) {
        cg.adj[i].set(j);
        cg.adj[j].set(i);
      }
  return cg;
}

struct ComponentPartition {
  std::vector<int> component_of;             // per vertex position
  std::vector<std::vector<int>> components;  // vertex positions, by minimal element
  std::vector<int> diameters;                // per component
  std::vector<bool> complete;                // diameter <= 1
  std::vector<std::pair<int, int>> extremal; // vertex pair attaining the diameter

  int count() const { return static_cast<int>(components.size()); }
  bool connected() const { return count() == 1; }
  int max_diameter() const {
    int d = 0;
    for (int x : diameters) d = std::max(d, x);
    return d;
  }
};

namespace detail {

// Union-find over vertex positions.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Eccentricity of `source` inside its component: BFS where each level ORs the
// rows of the frontier and masks off the visited set. far_out, when given,
// receives a vertex at that distance.
inline int eccentricity(const CommutingGraph& g, int source, int* far_out = nullptr) {
  int v = g.vertex_count();
  Bitset visited(v), frontier(v);
  visited.set(source);
  frontier.set(source);
  int depth = 0;
  if (far_out) *far_out = source;
  while (true) {
    Bitset next(v);
    frontier.for_each([&](int u) { next |= g.adj[u]; });
    if (!next.and_not(visited)) return depth;
    visited |= next;
    if (far_out) *far_out = next.find_first();
    frontier = std::move(next);
    ++depth;
  }
}

}  // namespace detail

inline ComponentPartition components(const CommutingGraph& g) {
  if (g.empty()) throw EmptyGraphError("commuting graph has no vertices");
  int v = g.vertex_count();

  detail::UnionFind uf(v);
  for (int i = 0; i < v; ++i)
    g.adj[i].for_each([&](int j) {
      if (j > i) uf.unite(i, j);
    });

  ComponentPartition part;
  part.component_of.assign(v, -1);
  // Vertices are in ascending element order, so scanning positions ascending
  // yields components sorted by their minimal element.
  for (int i = 0; i < v; ++i) {
    int root = uf.find(i);
    if (part.component_of[root] < 0) {
      part.component_of[root] = part.count();
      part.components.emplace_back();
    }
    int c = part.component_of[root];
    part.component_of[i] = c;
    part.components[c].push_back(i);
  }

  part.diameters.assign(part.count(), 0);
  part.extremal.assign(part.count(), {-1, -1});
  for (int c = 0; c < part.count(); ++c) {
    int d = -1;
    for (int u : part.components[c]) {
      int far = u;
      int e = detail::eccentricity(g, u, &far);
      if (e > d) {
        d = e;
        part.extremal[c] = {u, far};
      }
    }
    part.diameters[c] = d;
  }
  part.complete.resize(part.count());
  for (int c = 0; c < part.count(); ++c) part.complete[c] = part.diameters[c] <= 1;
  return part;
}

// ---- quotient graph ----

struct QuotientGraph {
  QuotientMap map;      // projection G -> G/Z(G)
  CommutingGraph graph; // commuting graph of the quotient

  // graph.parent aims at map.group, so moves must re-point it.
  explicit QuotientGraph(QuotientMap m)
      : map(std::move(m)), graph(build_commuting_graph(map.group)) {}
  QuotientGraph(const QuotientGraph&) = delete;
  QuotientGraph& operator=(const QuotientGraph&) = delete;
  QuotientGraph(QuotientGraph&& o) noexcept
      : map(std::move(o.map)), graph(std::move(o.graph)) {
    graph.parent = &map.group;
  }
  QuotientGraph& operator=(QuotientGraph&& o) noexcept {
    map = std::move(o.map);
    graph = std::move(o.graph);
    graph.parent = &map.group;
    return *this;
  }
};

inline QuotientGraph quotient_graph(const Group& g) {
  std::string name = g.name().empty() ? "G/Z" : g.name() + "/Z";
  return QuotientGraph(quotient(g, center(g), std::move(name)));
}

// ---- adjacency lift check ----

// For x, y outside Z2: commuting in G implies the images commute in G/Z.
// The converse needs every central commutator value trivial; it is checked
// exactly when that hypothesis holds.
struct LiftCheckResult {
  bool forward_ok = true;
  std::optional<std::pair<int, int>> forward_counterexample;
  bool converse_applicable = false;
  bool converse_ok = true;
  std::optional<std::pair<int, int>> converse_counterexample;
};

inline LiftCheckResult adjacency_lift_check(const Group& g) {
  LiftCheckResult r;
  Subgroup z = center(g);
  Subgroup z2 = second_center(g);
  ElementSet comm = commutator_set(g);
  bool c_cap_z_trivial = true;
  for (int x = z.bits().find_next(0); x >= 0; x = z.bits().find_next(x))
    if (comm.contains(x)) {
      c_cap_z_trivial = false;
      break;
    }
  r.converse_applicable = c_cap_z_trivial;

  QuotientMap q = quotient(g, z, "liftaux");
  for (int x = 0; x < g.order(); ++x) {
    if (z2.contains(x)) continue;
    for (int y = x + 1; y < g.order(); ++y) {
      if (z2.contains(y)) continue;
      bool comm_g = g.mul(x, y) == g.mul(y, x);
      int xb = q.projection[x], yb = q.projection[y];
      // "~" includes equality, so same-coset pairs count as adjacent images.
      bool comm_q = xb == yb || q.group.mul(xb, yb) == q.group.mul(yb, xb);
      if (comm_g && !comm_q && r.forward_ok) {
        r.forward_ok = false;
        r.forward_counterexample = {x, y};
      }
      if (c_cap_z_trivial && comm_q && !comm_g && r.converse_ok) {
        r.converse_ok = false;
        r.converse_counterexample = {x, y};
      }
    }
  }
  return r;
}

// ---- component correspondence ----

// Under the hypothesis that no nontrivial commutator value is central, the
// components of the two graphs correspond one to one: the preimage (minus the
// center) of each quotient component is a single component of the group's
// graph, with equal diameter, except that a component consisting of one coset
// becomes a complete component of size |Z| and diameter 1 (when |Z| > 1).
struct CorrespondenceEntry {
  int quotient_component = -1;
  int group_component = -1;
  bool singleton_coset = false;
  bool ok = false;
  std::string detail;
};

struct CorrespondenceResult {
  bool ok = true;
  std::vector<CorrespondenceEntry> entries;
};

inline CorrespondenceResult component_correspondence(const Group& g) {
  Subgroup z = center(g);
  ElementSet comm = commutator_set(g);
  for (int x = z.bits().find_next(0); x >= 0; x = z.bits().find_next(x))
    if (comm.contains(x))
      throw HypothesisViolatedError(
          "component correspondence needs every central commutator trivial");

  CommutingGraph gg = build_commuting_graph(g);
  if (gg.empty()) throw EmptyGraphError("abelian group: commuting graph is empty");
  ComponentPartition gp = components(gg);

  QuotientMap q = quotient(g, z, "corraux");
  CommutingGraph qg = build_commuting_graph(q.group);
  ComponentPartition qp = components(qg);

  CorrespondenceResult res;
  std::vector<char> matched(gp.count(), 0);
  int zsize = z.size();
  for (int c = 0; c < qp.count(); ++c) {
    CorrespondenceEntry e;
    e.quotient_component = c;
    e.singleton_coset = qp.components[c].size() == 1 && zsize > 1;

    // Collect the preimage vertices in G of this quotient component.
    std::vector<int> member_components;
    int preimage = 0;
    for (int x = 0; x < g.order(); ++x) {
      int vx = gg.vertex_of_element[x];
      if (vx < 0) continue;
      int qv = qg.vertex_of_element[q.projection[x]];
      if (qv < 0 || qp.component_of[qv] != c) continue;
      ++preimage;
      member_components.push_back(gp.component_of[vx]);
    }
    std::sort(member_components.begin(), member_components.end());
    member_components.erase(
        std::unique(member_components.begin(), member_components.end()),
        member_components.end());

    if (member_components.size() != 1) {
      e.ok = false;
      e.detail = "preimage spans " + std::to_string(member_components.size()) +
                 " components";
    } else {
      e.group_component = member_components[0];
      matched[e.group_component] = 1;
      int gsize = static_cast<int>(gp.components[e.group_component].size());
      int gdiam = gp.diameters[e.group_component];
      if (gsize != preimage) {
        e.ok = false;
        e.detail = "component has extra vertices outside the preimage";
      } else if (e.singleton_coset) {
        e.ok = gsize == zsize && gdiam == 1;
        if (!e.ok)
          e.detail = "singleton coset should lift to a complete component of size " +
                     std::to_string(zsize);
      } else {
        e.ok = gdiam == qp.diameters[c];
        if (!e.ok)
          e.detail = "diameter " + std::to_string(gdiam) + " vs quotient " +
                     std::to_string(qp.diameters[c]);
      }
    }
    if (!e.ok) res.ok = false;
    res.entries.push_back(std::move(e));
  }
  for (int c = 0; c < gp.count(); ++c)
    if (!matched[c]) {
      res.ok = false;
      CorrespondenceEntry e;
      e.group_component = c;
      e.detail = "group component has no quotient counterpart";
      res.entries.push_back(std::move(e));
    }
  return res;
}

// ---- Frobenius component census ----

struct CensusResult {
  bool ok = true;
  int expected_components = 0;
  int actual_components = 0;
  int max_diameter = 0;
  std::string detail;
};

// Centerless Frobenius group: one component for the kernel and |N| for the
// complement conjugates, every component of diameter at most 2.
inline CensusResult frobenius_component_census(const Group& g,
                                               const FrobeniusStructure& fs) {
  if (center(g).size() != 1)
    throw HypothesisViolatedError("census needs a centerless group");
  CommutingGraph cg = build_commuting_graph(g);
  ComponentPartition part = components(cg);
  CensusResult r;
  r.expected_components = 1 + fs.kernel.size();
  r.actual_components = part.count();
  r.max_diameter = part.max_diameter();
  r.ok = r.actual_components == r.expected_components && r.max_diameter <= 2;
  if (!r.ok)
    r.detail = "expected " + std::to_string(r.expected_components) +
               " components of diameter <= 2, found " +
               std::to_string(r.actual_components) + " with max diameter " +
               std::to_string(r.max_diameter);
  return r;
}

// Centerless 2-Frobenius group: 1 + |K| components; the |K| components away
// from L \ K are complete; the remaining one has diameter at most 6.
inline CensusResult frobenius_component_census(const Group& g,
                                               const TwoFrobeniusStructure& ts) {
  if (center(g).size() != 1)
    throw HypothesisViolatedError("census needs a centerless group");
  CommutingGraph cg = build_commuting_graph(g);
  ComponentPartition part = components(cg);
  CensusResult r;
  r.expected_components = 1 + ts.k.size();
  r.actual_components = part.count();
  r.max_diameter = part.max_diameter();
  int complete = 0;
  for (int c = 0; c < part.count(); ++c)
    if (part.complete[c]) ++complete;
  r.ok = r.actual_components == r.expected_components &&
         complete >= r.expected_components - 1 && r.max_diameter <= 6;
  if (!r.ok)
    r.detail = "expected " + std::to_string(r.expected_components) +
               " components (" + std::to_string(r.expected_components - 1) +
               " complete, one of diameter <= 6), found " +
               std::to_string(r.actual_components) + " with " +
               std::to_string(complete) + " complete, max diameter " +
               std::to_string(r.max_diameter);
  return r;
}

}  // namespace commgraph
