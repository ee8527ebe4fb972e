#pragma once

#include <memory>

#include "eqfp/complex.hpp"
#include "eqfp/perm_group.hpp"

namespace eqfp::fixtures {

inline std::shared_ptr<const FiniteGroup> trivial_group() {
  return std::make_shared<FiniteGroup>();
}

inline std::shared_ptr<const FiniteGroup> z2() {
  return std::make_shared<FiniteGroup>(2, std::vector<Perm>{{1, 0}});
}

inline std::vector<Perm> action_from_generators(const FiniteGroup& g, int nverts,
                                                const std::vector<Perm>& gen_perms) {
  std::vector<Perm> act(g.order());
  for (int e = 0; e < g.order(); ++e) {
    Perm p = identity_perm(nverts);
    for (int gi : g.word(e)) p = compose(p, gen_perms[gi]);
    act[e] = p;
  }
  return act;
}

/// Boundary of the 3-simplex: S^2 with 4 vertices, trivial action.
inline GComplex tetra_s2() {
  auto g = trivial_group();
  return GComplex(4, g, {identity_perm(4)},
                  {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// Octahedron: equator square 0-3, poles 4 (north) and 5 (south).
inline std::vector<std::vector<int>> octahedron_faces() {
  return {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4},
          {0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {0, 3, 5}};
}

inline GComplex octahedron_trivial() {
  auto g = trivial_group();
  return GComplex(6, g, {identity_perm(6)}, octahedron_faces());
}

/// Z/2 swaps the poles; the equator circle is fixed.
inline GComplex octahedron_reflection() {
  auto g = z2();
  return GComplex(6, g, action_from_generators(*g, 6, {{0, 1, 2, 3, 5, 4}}),
                  octahedron_faces());
}

/// Z/2 rotates the equator by pi; only the poles are fixed.
inline GComplex octahedron_rotation() {
  auto g = z2();
  return GComplex(6, g, action_from_generators(*g, 6, {{2, 3, 0, 1, 4, 5}}),
                  octahedron_faces());
}

/// 16-cell boundary: S^3 with vertices i and i+4 antipodal; the antipodal
/// Z/2 action is free.
inline std::vector<std::vector<int>> cross16_facets() {
  std::vector<std::vector<int>> tops;
  for (int a : {0, 4})
    for (int b : {1, 5})
      for (int c : {2, 6})
        for (int d : {3, 7}) tops.push_back({a, b, c, d});
  return tops;
}

inline GComplex cross16_free() {
  auto g = z2();
  return GComplex(8, g, action_from_generators(*g, 8, {{4, 5, 6, 7, 0, 1, 2, 3}}),
                  cross16_facets());
}

inline GComplex cross16_trivial() {
  auto g = trivial_group();
  return GComplex(8, g, {identity_perm(8)}, cross16_facets());
}

/// Minimal 6-vertex triangulation of RP^2, trivial action.
inline GComplex rp2_trivial() {
  auto g = trivial_group();
  return GComplex(6, g, {identity_perm(6)},
                  {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                   {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

/// Suspension of the 4-simplex boundary: S^4 with the pole swap, whose fixed
/// set is the equatorial S^3 in codimension one.
inline GComplex s4_suspension() {
  auto g = z2();
  std::vector<std::vector<int>> tops;
  for (int drop = 0; drop < 5; ++drop) {
    std::vector<int> tet;
    for (int v = 0; v < 5; ++v)
      if (v != drop) tet.push_back(v);
    for (int pole : {5, 6}) {
      std::vector<int> cell = tet;
      cell.push_back(pole);
      tops.push_back(cell);
    }
  }
  return GComplex(7, g, action_from_generators(*g, 7, {{0, 1, 2, 3, 4, 6, 5}}), tops);
}

/// A single point with the trivial group.
inline GComplex point_trivial() {
  auto g = trivial_group();
  return GComplex(1, g, {identity_perm(1)}, {{0}});
}

/// A degree-2 self-map of the octahedral S^2, given on the barycentric
/// subdivision: the equator octagon wraps twice around the equator square,
/// side barycenters collapse toward the poles.
struct SubdividedMapFixture {
  GComplex target;
  SdLevel sd;
  std::vector<int> f;  // Sd vertex -> target vertex
};

inline SubdividedMapFixture octahedron_degree2() {
  SubdividedMapFixture out;
  out.target = octahedron_trivial();
  out.sd = barycentric_subdivide(out.target);
  const GComplex& x = out.target;
  const SdLevel& sd = out.sd;
  out.f.assign(sd.complex.num_vertices(), -1);
  auto set_vertex = [&](int v, int img) { out.f[sd.cell_to_vert[0][v]] = img; };
  auto set_edge = [&](int a, int b, int img) {
    std::vector<int> e{std::min(a, b), std::max(a, b)};
    out.f[sd.cell_to_vert[1][x.cell_index(1, e)]] = img;
  };
  auto set_face = [&](std::vector<int> tri, int img) {
    std::sort(tri.begin(), tri.end());
    out.f[sd.cell_to_vert[2][x.cell_index(2, tri)]] = img;
  };
  const int doubled[4] = {0, 2, 0, 2};   // E_i -> E_{2i mod 4}
  const int between[4] = {1, 3, 1, 3};   // barycenter of (E_i, E_{i+1}) -> E_{2i+1 mod 4}
  for (int i = 0; i < 4; ++i) {
    set_vertex(i, doubled[i]);
    set_edge(i, (i + 1) % 4, between[i]);
    for (int pole : {4, 5}) {
      set_edge(i, pole, pole);
      set_face({i, (i + 1) % 4, pole}, between[i]);
    }
  }
  set_vertex(4, 4);
  set_vertex(5, 5);
  return out;
}

}  // namespace eqfp::fixtures
