#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqfp/complex.hpp"
#include "eqfp/coset_enum.hpp"
#include "eqfp/pi1.hpp"

namespace eqfp {

/// A computation exceeded one of the configured caps (coset table size,
/// cover search size, ...). Maps to the resource-cap exit code.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Spanning tree, edge-path presentation and fundamental group of one
/// connected component of a fixed subcomplex.
///
/// Non-tree edges are the presentation generators; 2-cells contribute the
/// relators. Transport along a tree edge is trivial, so canonical lifts and
/// basepoint data cost nothing downstream.
struct ComponentTopology {
  int basepoint = 0;
  std::vector<int> vertices;                      // sorted component vertices
  std::map<int, int> tree_parent;                 // vertex -> parent, basepoint -> -1
  std::map<std::pair<int, int>, int> edge_gen;    // oriented (u<v) -> generator, -1 = tree
  Presentation pres;
  Pi1Group pi1;
  std::vector<std::pair<int, int>> gen_edges;     // generator -> its (u<v) edge

  Pi1Elem transport_edge(int from, int to) const {
    if (from == to) return {0};
    auto it = edge_gen.find({std::min(from, to), std::max(from, to)});
    if (it == edge_gen.end()) throw std::logic_error("transport over a non-edge");
    if (it->second < 0) return {0};
    Pi1Elem g = pi1.generator(it->second);
    return from < to ? g : pi1.inv(g);
  }

  /// Product of edge transports along a vertex walk (repeated vertices allowed).
  Pi1Elem transport_path(const std::vector<int>& walk) const {
    Pi1Elem v = pi1.id();
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
      v = pi1.mul(v, transport_edge(walk[i], walk[i + 1]));
    return v;
  }

  /// Tree geodesic basepoint -> v (inclusive); transport along it is trivial.
  std::vector<int> tree_path(int v) const {
    std::vector<int> path;
    for (int cur = v; cur != -1; cur = tree_parent.at(cur)) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
  }

  /// The edge loop representing a presentation generator.
  std::vector<int> generator_loop(int gen) const {
    auto [u, v] = gen_edges.at(gen);
    std::vector<int> loop = tree_path(u);
    std::vector<int> back = tree_path(v);
    std::reverse(back.begin(), back.end());
    loop.insert(loop.end(), back.begin(), back.end());
    return loop;
  }

  /// Edge loop at the basepoint representing a group element.
  std::vector<int> element_loop(Pi1Elem e) const {
    std::vector<int> loop{basepoint};
    auto append = [&](int gen, bool forward) {
      std::vector<int> piece = generator_loop(gen);
      if (!forward) std::reverse(piece.begin(), piece.end());
      loop.insert(loop.end(), piece.begin() + 1, piece.end());
    };
    if (pi1.is_finite()) {
      for (int gi : pi1.group().word(static_cast<int>(e.v))) {
        // word letters index construction generators == presentation generators
        append(gi, true);
      }
    } else {
      long long k = e.v;
      for (long long i = 0; i < std::llabs(k); ++i) append(0, k > 0);
    }
    return loop;
  }
};

inline ComponentTopology build_component_topology(const GComplex& x,
                                                  const SubcomplexView& comp,
                                                  int coset_cap,
                                                  const std::string& what) {
  ComponentTopology t;
  t.vertices = comp.vertices();
  if (t.vertices.empty()) throw std::logic_error("empty component");
  t.basepoint = t.vertices.front();

  std::map<int, std::vector<int>> adj;
  for (int v : t.vertices) adj[v];
  if (comp.cells.size() > 1)
    for (int e : comp.cells[1]) {
      const auto& verts = x.cell(1, e);
      adj[verts[0]].push_back(verts[1]);
      adj[verts[1]].push_back(verts[0]);
    }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

  t.tree_parent[t.basepoint] = -1;
  std::queue<int> todo;
  todo.push(t.basepoint);
  std::set<std::pair<int, int>> tree_edges;
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    for (int v : adj.at(u)) {
      if (t.tree_parent.count(v)) continue;
      t.tree_parent[v] = u;
      tree_edges.insert({std::min(u, v), std::max(u, v)});
      todo.push(v);
    }
  }
  if (static_cast<int>(t.tree_parent.size()) != static_cast<int>(t.vertices.size()))
    throw std::logic_error("component is not connected");

  if (comp.cells.size() > 1)
    for (int e : comp.cells[1]) {
      const auto& verts = x.cell(1, e);
      std::pair<int, int> key{verts[0], verts[1]};
      if (tree_edges.count(key)) {
        t.edge_gen[key] = -1;
      } else {
        t.edge_gen[key] = static_cast<int>(t.gen_edges.size());
        t.gen_edges.push_back(key);
      }
    }

  t.pres.num_generators = static_cast<int>(t.gen_edges.size());
  auto letter = [&](int a, int b) -> int {  // signed presentation letter or 0 for tree
    auto it = t.edge_gen.at({std::min(a, b), std::max(a, b)});
    if (it < 0) return 0;
    return a < b ? it + 1 : -(it + 1);
  };
  if (comp.cells.size() > 2)
    for (int f : comp.cells[2]) {
      const auto& verts = x.cell(2, f);
      Word w;
      for (auto [a, b] : {std::pair{verts[0], verts[1]}, {verts[1], verts[2]},
                          {verts[2], verts[0]}}) {
        int l = letter(a, b);
        if (l != 0) w.push_back(l);
      }
      if (!w.empty()) t.pres.relators.push_back(std::move(w));
    }

  if (t.pres.num_generators == 0) {
    t.pi1 = Pi1Group::finite(std::make_shared<FiniteGroup>(), {});
  } else if (t.pres.relators.empty()) {
    if (t.pres.num_generators == 1) {
      t.pi1 = Pi1Group::infinite_cyclic();
    } else {
      throw ResourceCapError("pi_1 of " + what + " is a free group of rank " +
                             std::to_string(t.pres.num_generators) + ", not finite");
    }
  } else {
    auto res = todd_coxeter(t.pres, coset_cap);
    if (!res)
      throw ResourceCapError("pi_1 of " + what + " not finite within coset cap " +
                             std::to_string(coset_cap));
    t.pi1 = Pi1Group::finite(std::make_shared<FiniteGroup>(std::move(res->group)),
                             std::move(res->generator_elements));
  }
  return t;
}

/// An isomorphism class of the fundamental category: an object site plus the
/// fundamental-group data of its representative component.
struct FundObject {
  ObjectSite site;
  ComponentTopology topo;

  std::string id() const { return site.id(); }
};

inline std::vector<FundObject> fundamental_objects(const GComplex& x, int coset_cap) {
  std::vector<FundObject> objects;
  for (ObjectSite& site : enumerate_object_sites(x)) {
    std::string what = "component " + site.id();
    ComponentTopology topo = build_component_topology(x, site.comp, coset_cap, what);
    objects.push_back(FundObject{std::move(site), std::move(topo)});
  }
  return objects;
}

/// Smallest group element a with a^-1 H_src a <= H_dst whose translate of
/// dst's basepoint lands in src's component; this is exactly when
/// Mor(src, dst) is nonempty.
inline std::optional<int> morphism_conjugator(const GComplex& x, const ObjectSite& src,
                                              const ObjectSite& dst, int skip_below = 0) {
  const FiniteGroup& g = x.group();
  for (int a = skip_below; a < g.order(); ++a) {
    Subgroup conj = conjugate_subgroup(g, src.H, g.inv(a));
    if (!std::includes(dst.H.members.begin(), dst.H.members.end(), conj.members.begin(),
                       conj.members.end()))
      continue;
    int y = x.act_vertex(a, dst.comp.vertices().front());
    if (std::binary_search(src.comp.vertices().begin(), src.comp.vertices().end(), y))
      return a;
  }
  return std::nullopt;
}

inline bool morphism_exists(const GComplex& x, const ObjectSite& src, const ObjectSite& dst) {
  return morphism_conjugator(x, src, dst).has_value();
}

/// Transport of an element of dst's fundamental group into src's along the
/// morphism given by conjugator a and a connecting path (default: the tree
/// geodesic from src's basepoint to a * dst-basepoint).
inline Pi1Elem transport_element(const GComplex& x, const FundObject& src,
                                 const FundObject& dst, int conjugator,
                                 Pi1Elem beta,
                                 const std::vector<int>* path_override = nullptr) {
  std::vector<int> loop = dst.topo.element_loop(beta);
  std::vector<int> translated;
  translated.reserve(loop.size());
  for (int v : loop) translated.push_back(x.act_vertex(conjugator, v));
  std::vector<int> path = path_override ? *path_override
                                        : src.topo.tree_path(translated.front());
  if (path.front() != src.topo.basepoint || path.back() != translated.front())
    throw std::logic_error("connecting path must run basepoint -> a*dst-basepoint");
  Pi1Elem val = src.topo.transport_path(path);
  val = src.topo.pi1.mul(val, src.topo.transport_path(translated));
  std::vector<int> back = path;
  std::reverse(back.begin(), back.end());
  return src.topo.pi1.mul(val, src.topo.transport_path(back));
}

}  // namespace eqfp
