#pragma once

#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "eqfp/complex.hpp"
#include "eqfp/fundamental.hpp"
#include "eqfp/group_ring.hpp"
#include "eqfp/pi1.hpp"

namespace eqfp {

/// Explicit universal cover of a component with finite fundamental group.
/// Sheets are indexed by pi_1 elements in canonical order; a cover cell is a
/// pair (base cell, sheet of its minimal vertex), and the canonical lift of a
/// base cell sits in sheet 0 (the identity).
struct UniversalCover {
  int sheets = 1;
  std::vector<int> base_verts;             // sorted component vertices
  std::map<int, int> base_pos;             // base vertex -> position
  GComplex complex;                        // the cover as a plain complex
  std::vector<std::vector<std::pair<int, int>>> cell_to_base;  // per dim: (X cell, sheet)
  std::vector<std::map<std::pair<int, int>, int>> base_to_cell;
  std::vector<Perm> deck;                  // per pi_1 element: cover vertex perm
  std::vector<Perm> whx_lifts;             // per WH_x member: chosen lift (cover vertex perm)

  int vert(int base_vertex, int sheet) const {
    return base_pos.at(base_vertex) * sheets + sheet;
  }
  int vert_base(int cover_vertex) const { return base_verts[cover_vertex / sheets]; }
  int vert_sheet(int cover_vertex) const { return cover_vertex % sheets; }

  /// Cover cell under a vertex permutation of the cover.
  int act_cell(const Perm& p, int dim, int cell) const {
    std::vector<int> verts;
    for (int v : complex.cell(dim, cell)) verts.push_back(p[v]);
    std::sort(verts.begin(), verts.end());
    int idx = complex.cell_index(dim, verts);
    if (idx < 0) throw std::logic_error("cover action does not preserve cells");
    return idx;
  }
};

inline UniversalCover build_cover(const GComplex& x, const FundObject& obj) {
  const ComponentTopology& topo = obj.topo;
  if (!topo.pi1.is_finite())
    throw std::logic_error("explicit covers need finite pi_1");
  const FiniteGroup& pi = topo.pi1.group();
  UniversalCover uc;
  uc.sheets = pi.order();
  uc.base_verts = topo.vertices;
  for (int i = 0; i < static_cast<int>(uc.base_verts.size()); ++i)
    uc.base_pos[uc.base_verts[i]] = i;

  const SubcomplexView& comp = obj.site.comp;
  auto lift_cell = [&](int p, int cell, int sheet) {
    const std::vector<int>& verts = x.cell(p, cell);
    std::vector<int> cv;
    cv.reserve(verts.size());
    for (int v : verts) {
      Pi1Elem t = topo.pi1.mul(Pi1Elem{sheet}, topo.transport_edge(verts[0], v));
      cv.push_back(uc.vert(v, static_cast<int>(t.v)));
    }
    std::sort(cv.begin(), cv.end());
    return cv;
  };

  std::vector<std::vector<int>> tops;
  for (int p = 0; p <= x.dim(); ++p)
    for (int cell : comp.cells[p])
      for (int s = 0; s < uc.sheets; ++s) tops.push_back(lift_cell(p, cell, s));
  int nverts = static_cast<int>(uc.base_verts.size()) * uc.sheets;
  auto trivial = std::make_shared<FiniteGroup>();
  uc.complex = GComplex(nverts, trivial, {identity_perm(nverts)}, tops);

  // Sheet labels are consistent exactly when the cover has |pi_1| copies of
  // every base cell.
  uc.cell_to_base.resize(uc.complex.dim() + 1);
  uc.base_to_cell.resize(uc.complex.dim() + 1);
  for (int p = 0; p <= uc.complex.dim(); ++p) {
    if (uc.complex.num_cells(p) !=
        static_cast<int>(comp.cells[p].size()) * uc.sheets)
      throw std::logic_error("cover has inconsistent sheet structure");
    uc.cell_to_base[p].resize(uc.complex.num_cells(p));
    for (int i = 0; i < uc.complex.num_cells(p); ++i) {
      const std::vector<int>& verts = uc.complex.cell(p, i);
      std::vector<int> base;
      for (int v : verts) base.push_back(uc.vert_base(v));
      std::sort(base.begin(), base.end());
      int bidx = x.cell_index(p, base);
      int sheet = uc.vert_sheet(*std::min_element(
          verts.begin(), verts.end(),
          [&](int a, int b) { return uc.vert_base(a) < uc.vert_base(b); }));
      uc.cell_to_base[p][i] = {bidx, sheet};
      uc.base_to_cell[p][{bidx, sheet}] = i;
    }
  }

  for (int g = 0; g < pi.order(); ++g) {
    Perm d(nverts);
    for (int i = 0; i < static_cast<int>(uc.base_verts.size()); ++i)
      for (int s = 0; s < uc.sheets; ++s)
        d[i * uc.sheets + s] = i * uc.sheets + pi.mul(g, s);
    uc.deck.push_back(std::move(d));
  }

  // One lift per WH_x member, normalised to send the basepoint lift
  // (basepoint, id) to (w * basepoint, id); extended over the cover by
  // breadth-first edge transport.
  for (const Perm& wperm : obj.site.whx_vertex_perms) {
    Perm lift(nverts, -1);
    std::vector<std::vector<int>> adj(nverts);
    for (int e = 0; e < uc.complex.num_cells(1); ++e) {
      const auto& verts = uc.complex.cell(1, e);
      adj[verts[0]].push_back(verts[1]);
      adj[verts[1]].push_back(verts[0]);
    }
    int start = uc.vert(topo.basepoint, 0);
    lift[start] = uc.vert(wperm[topo.basepoint], 0);
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop();
      for (int v : adj[u]) {
        if (lift[v] >= 0) continue;
        int bu = uc.vert_base(u), bv = uc.vert_base(v);
        int wu = wperm[bu], wv = wperm[bv];
        Pi1Elem t = topo.transport_edge(wu, wv);
        int sheet = static_cast<int>(
            topo.pi1.mul(Pi1Elem{uc.vert_sheet(lift[u])}, t).v);
        lift[v] = uc.vert(wv, sheet);
        todo.push(v);
      }
    }
    for (int v : lift)
      if (v < 0) throw std::logic_error("cover is not connected");
    uc.whx_lifts.push_back(std::move(lift));
  }
  return uc;
}

/// Aut(x) as the extension 1 -> pi_1 -> Aut(x) -> WH_x -> 1. Elements are
/// pairs (deck element, Weyl member) multiplied through the chosen lifts;
/// the enumerated group is the left-regular permutation action on pairs, and
/// the (possibly unfaithful) action on cover vertices is kept alongside.
struct AutExtension {
  FiniteGroup aut;
  int num_whx = 1;
  std::vector<int> pair_to_aut;                 // g * num_whx + wpos -> aut element
  std::vector<std::pair<int, int>> aut_to_pair; // aut element -> (g, wpos)
  std::vector<int> pi1_to_aut;                  // deck embedding
  std::vector<int> section;                     // wpos -> aut element of (0, w)
  std::vector<int> aut_to_whx;                  // aut element -> wpos
  std::vector<Perm> cover_action;               // aut element -> cover vertex perm
};

inline int match_deck(const UniversalCover& uc, const Perm& candidate) {
  for (int g = 0; g < static_cast<int>(uc.deck.size()); ++g)
    if (uc.deck[g] == candidate) return g;
  throw std::logic_error("permutation is not a deck transformation");
}

inline AutExtension aut_extension(const GComplex& x, const FundObject& obj,
                                  const UniversalCover& uc) {
  const FiniteGroup& pi = obj.topo.pi1.group();
  const FiniteGroup& wh = obj.site.WH.group;
  const std::vector<int>& whx = obj.site.whx;
  const int np = pi.order();
  const int nw = static_cast<int>(whx.size());
  auto wpos_of = [&](int wh_elem) {
    auto it = std::find(whx.begin(), whx.end(), wh_elem);
    if (it == whx.end()) throw std::logic_error("WH_x is not closed");
    return static_cast<int>(it - whx.begin());
  };

  // conj[w][g']: lift_w deck_g' lift_w^-1; cocycle[w][w']: lift_w lift_w' lift_ww'^-1.
  std::vector<std::vector<int>> conj(nw, std::vector<int>(np));
  for (int w = 0; w < nw; ++w) {
    Perm inv_lift = inverse(uc.whx_lifts[w]);
    for (int g = 0; g < np; ++g)
      conj[w][g] = match_deck(uc, compose(uc.whx_lifts[w], compose(uc.deck[g], inv_lift)));
  }
  std::vector<std::vector<std::pair<int, int>>> prod(nw, std::vector<std::pair<int, int>>(nw));
  for (int w = 0; w < nw; ++w)
    for (int w2 = 0; w2 < nw; ++w2) {
      int ww2 = wpos_of(wh.mul(whx[w], whx[w2]));
      int kappa = match_deck(
          uc, compose(compose(uc.whx_lifts[w], uc.whx_lifts[w2]), inverse(uc.whx_lifts[ww2])));
      prod[w][w2] = {kappa, ww2};
    }
  auto pair_mul = [&](std::pair<int, int> a, std::pair<int, int> b) {
    auto [kappa, ww2] = prod[a.second][b.second];
    int g = pi.mul(pi.mul(a.first, conj[a.second][b.first]), kappa);
    return std::pair<int, int>{g, ww2};
  };

  const int n = np * nw;
  auto pid = [&](std::pair<int, int> p) { return p.first * nw + p.second; };
  std::vector<Perm> left(n, Perm(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      left[a][b] = pid(pair_mul({a / nw, a % nw}, {b / nw, b % nw}));

  AutExtension ext;
  ext.num_whx = nw;
  ext.aut = FiniteGroup(n, left);
  if (ext.aut.order() != n)
    throw std::logic_error("Aut(x) extension is not a group of the expected order");
  ext.pair_to_aut.resize(n);
  ext.aut_to_pair.resize(n);
  for (int a = 0; a < n; ++a) {
    int e = ext.aut.index_of(left[a]);
    ext.pair_to_aut[a] = e;
    ext.aut_to_pair[e] = {a / nw, a % nw};
  }
  for (int g = 0; g < np; ++g) ext.pi1_to_aut.push_back(ext.pair_to_aut[g * nw]);
  for (int w = 0; w < nw; ++w) ext.section.push_back(ext.pair_to_aut[w]);
  ext.aut_to_whx.resize(n);
  ext.cover_action.resize(n);
  for (int e = 0; e < n; ++e) {
    auto [g, w] = ext.aut_to_pair[e];
    ext.aut_to_whx[e] = w;
    ext.cover_action[e] = compose(uc.deck[g], uc.whx_lifts[w]);
  }

  // Exactness: the deck embedding is injective with image the kernel of the
  // projection to WH_x, and |Aut| = |pi_1| |WH_x| by construction.
  std::set<int> image(ext.pi1_to_aut.begin(), ext.pi1_to_aut.end());
  if (static_cast<int>(image.size()) != np)
    throw std::logic_error("pi_1 does not embed in Aut(x)");
  for (int e = 0; e < n; ++e)
    if ((ext.aut_to_whx[e] == 0) != (image.count(e) > 0))
      throw std::logic_error("Aut(x) extension is not exact");
  return ext;
}

/// Lift of the (possibly subdivided) self-map to the covers: the domain is
/// Sd^r of the cover, the lift is anchored at the basepoint lift, and the
/// composite chain matrices f_# sd^r act on the cover's cells.
struct CoverMapLift {
  std::vector<SdLevel> levels;          // subdivisions of the cover complex
  const GComplex* domain = nullptr;     // cover or last level
  std::vector<int> fvert;               // domain cover vertex -> cover vertex
  std::vector<int> domain_proj;         // domain cover vertex -> domain base (Sd^r X) vertex
  // full[p]: column = cover p-cell, entries row cell -> integer coefficient
  std::vector<std::vector<std::map<int, long long>>> full;
  std::vector<int> phi_hat;             // pi_1 element -> pi_1 element under the map
  std::vector<int> delta_w;             // per WH_x member: lift discrepancy in pi_1
};

/// Induced permutation of Sd vertices from a permutation of the parent
/// complex's vertices.
inline Perm induced_sd_perm(const GComplex& parent, const SdLevel& sd, const Perm& p) {
  Perm out(sd.complex.num_vertices());
  for (int v = 0; v < sd.complex.num_vertices(); ++v) {
    CellRef c = sd.vert_to_cell[v];
    std::vector<int> verts;
    for (int u : parent.cell(c.dim, c.idx)) verts.push_back(p[u]);
    std::sort(verts.begin(), verts.end());
    out[v] = sd.cell_to_vert[c.dim][parent.cell_index(c.dim, verts)];
  }
  return out;
}

inline CoverMapLift lift_map(const GComplex& x, const FundObject& obj, const UniversalCover& uc,
                             const std::vector<SdLevel>& x_levels,
                             const std::vector<int>& f_on_domain) {
  CoverMapLift lift;
  const int r = static_cast<int>(x_levels.size());
  const ComponentTopology& topo = obj.topo;

  // Subdivide the cover r times, tracking the projection to the subdivided
  // base complex at each level.
  std::vector<const GComplex*> cover_chain{&uc.complex};
  std::vector<int> proj;  // current-level cover vertex -> current-level base vertex
  proj.resize(uc.complex.num_vertices());
  for (int v = 0; v < uc.complex.num_vertices(); ++v) proj[v] = uc.vert_base(v);
  // cell projections for the current level
  const GComplex* base_now = &x;
  for (int level = 0; level < r; ++level) {
    lift.levels.push_back(barycentric_subdivide(*cover_chain.back()));
    const SdLevel& csd = lift.levels.back();
    const SdLevel& bsd = x_levels[level];
    std::vector<int> next(csd.complex.num_vertices());
    for (int v = 0; v < csd.complex.num_vertices(); ++v) {
      CellRef c = csd.vert_to_cell[v];
      std::vector<int> bverts;
      for (int u : cover_chain.back()->cell(c.dim, c.idx)) bverts.push_back(proj[u]);
      std::sort(bverts.begin(), bverts.end());
      bverts.erase(std::unique(bverts.begin(), bverts.end()), bverts.end());
      int bidx = base_now->cell_index(c.dim, bverts);
      if (bidx < 0) throw std::logic_error("cover projection is not simplicial");
      next[v] = bsd.cell_to_vert[c.dim][bidx];
    }
    proj = std::move(next);
    cover_chain.push_back(&lift.levels.back().complex);
    base_now = &bsd.complex;
  }
  lift.domain = cover_chain.back();
  lift.domain_proj = proj;

  // Vertex lift by BFS over the domain cover's 1-skeleton, anchored at the
  // basepoint lift.
  const GComplex& dom = *lift.domain;
  std::vector<std::vector<int>> adj(dom.num_vertices());
  for (int e = 0; e < dom.num_cells(1); ++e) {
    const auto& verts = dom.cell(1, e);
    adj[verts[0]].push_back(verts[1]);
    adj[verts[1]].push_back(verts[0]);
  }
  lift.fvert.assign(dom.num_vertices(), -1);
  int start = uc.vert(topo.basepoint, 0);
  // the basepoint vertex keeps its id through subdivisions of the cover
  for (int level = 0; level < r; ++level)
    start = lift.levels[level].cell_to_vert[0][start];
  int fx0 = f_on_domain[lift.domain_proj[start]];
  lift.fvert[start] = uc.vert(fx0, 0);
  std::queue<int> todo;
  todo.push(start);
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    for (int v : adj[u]) {
      if (lift.fvert[v] >= 0) continue;
      int fu = f_on_domain[lift.domain_proj[u]];
      int fv = f_on_domain[lift.domain_proj[v]];
      if (fu == fv) {
        lift.fvert[v] = lift.fvert[u];
      } else {
        Pi1Elem t = topo.transport_edge(fu, fv);
        int sheet = static_cast<int>(
            topo.pi1.mul(Pi1Elem{uc.vert_sheet(lift.fvert[u])}, t).v);
        lift.fvert[v] = uc.vert(fv, sheet);
      }
      todo.push(v);
    }
  }
  for (int v : lift.fvert)
    if (v < 0) throw std::logic_error("domain cover is not connected");
  // Global consistency of the lift: simplicial on every domain cover cell.
  for (int p = 0; p <= dom.dim(); ++p)
    for (int i = 0; i < dom.num_cells(p); ++i) {
      std::vector<int> img;
      for (int v : dom.cell(p, i)) img.push_back(lift.fvert[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (uc.complex.cell_index(static_cast<int>(img.size()) - 1, img) < 0)
        throw std::logic_error("map lift is not simplicial on the cover");
    }

  // Chain matrices of f_# on the last level, then composed with sd^r.
  auto image_term = [&](int p, const std::vector<int>& cell_verts)
      -> std::optional<std::pair<int, int>> {
    std::vector<int> img;
    img.reserve(cell_verts.size());
    for (int v : cell_verts) img.push_back(lift.fvert[v]);
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    int idx = uc.complex.cell_index(p, sorted);
    if (idx < 0) throw std::logic_error("degenerate image cell mismatch");
    return std::make_pair(idx, permutation_sign(img));
  };

  lift.full.resize(uc.complex.dim() + 1);
  // sd^r as cumulative terms per cover cell
  std::vector<std::vector<std::vector<std::pair<int, int>>>> terms(uc.complex.dim() + 1);
  for (int p = 0; p <= uc.complex.dim(); ++p) {
    terms[p].resize(uc.complex.num_cells(p));
    for (int i = 0; i < uc.complex.num_cells(p); ++i) terms[p][i] = {{i, 1}};
  }
  const GComplex* level_complex = &uc.complex;
  for (int level = 0; level < r; ++level) {
    auto op = sd_chain_operator(*level_complex, lift.levels[level]);
    for (int p = 0; p <= uc.complex.dim(); ++p)
      for (auto& col : terms[p]) {
        std::map<int, int> acc;
        for (auto [cell, sign] : col)
          for (const SdTerm& t : op[p][cell]) acc[t.cell] += sign * t.sign;
        col.clear();
        for (auto [cell, coeff] : acc)
          if (coeff != 0) col.push_back({cell, coeff});
      }
    level_complex = &lift.levels[level].complex;
  }
  for (int p = 0; p <= uc.complex.dim(); ++p) {
    lift.full[p].resize(uc.complex.num_cells(p));
    for (int i = 0; i < uc.complex.num_cells(p); ++i) {
      std::map<int, long long> acc;
      for (auto [dcell, coeff] : terms[p][i]) {
        auto term = image_term(p, lift.domain->cell(p, dcell));
        if (term) acc[term->first] += static_cast<long long>(coeff) * term->second;
      }
      for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
      lift.full[p][i] = std::move(acc);
    }
  }

  // phi-hat: F deck_g = deck_{phi(g)} F, matched at the basepoint lift and
  // verified everywhere.
  const FiniteGroup& pi = topo.pi1.group();
  std::vector<Perm> deck_domain;
  for (int g = 0; g < pi.order(); ++g) {
    Perm d = uc.deck[g];
    const GComplex* parent = &uc.complex;
    for (int level = 0; level < r; ++level) {
      d = induced_sd_perm(*parent, lift.levels[level], d);
      parent = &lift.levels[level].complex;
    }
    deck_domain.push_back(std::move(d));
  }
  for (int g = 0; g < pi.order(); ++g) {
    int lhs = lift.fvert[deck_domain[g][start]];
    int rhs0 = lift.fvert[start];
    int h = pi.mul(uc.vert_sheet(lhs), pi.inv(uc.vert_sheet(rhs0)));
    if (uc.deck[h][rhs0] != lhs) throw std::logic_error("phi-hat mismatch at basepoint");
    for (int v = 0; v < dom.num_vertices(); ++v)
      if (lift.fvert[deck_domain[g][v]] != uc.deck[h][lift.fvert[v]])
        throw std::logic_error("map lift is not deck-equivariant");
    lift.phi_hat.push_back(h);
  }

  // delta_w: F lift_w = deck_{delta_w} lift_w F.
  for (const Perm& wl : uc.whx_lifts) {
    Perm wd = wl;
    const GComplex* parent = &uc.complex;
    for (int level = 0; level < r; ++level) {
      wd = induced_sd_perm(*parent, lift.levels[level], wd);
      parent = &lift.levels[level].complex;
    }
    int lhs = lift.fvert[wd[start]];
    int rhs0 = wl[lift.fvert[start]];
    int h = pi.mul(uc.vert_sheet(lhs), pi.inv(uc.vert_sheet(rhs0)));
    if (uc.deck[h][rhs0] != lhs) throw std::logic_error("delta_w mismatch at basepoint");
    for (int v = 0; v < dom.num_vertices(); ++v)
      if (lift.fvert[wd[v]] != uc.deck[h][wl[lift.fvert[v]]])
        throw std::logic_error("map lift does not normalize the Weyl lifts");
    lift.delta_w.push_back(h);
  }
  return lift;
}

/// phi' on Aut(x): (g, w) |-> (phi_hat(g) delta_w, w).
inline GroupHom phi_prime(const FiniteGroup& pi, const AutExtension& ext,
                          const CoverMapLift& lift) {
  std::vector<int> images(ext.aut.order());
  for (int e = 0; e < ext.aut.order(); ++e) {
    auto [g, w] = ext.aut_to_pair[e];
    int img_g = pi.mul(lift.phi_hat[g], lift.delta_w[w]);
    images[e] = ext.pair_to_aut[img_g * ext.num_whx + w];
  }
  return make_hom_from_element_images(ext.aut, ext.aut, std::move(images));
}

/// Free (or stabilizer-weighted) basis of the cover's cellular chain complex
/// over Z Aut(x): one orbit representative per Aut-orbit of cover cells, the
/// relative mode dropping every cell over the singular part.
struct OrbitBasis {
  std::vector<int> reps;
  std::vector<int> orbit_of;                 // cover cell -> orbit, -1 excluded
  std::vector<int> elem_to_rep;              // cover cell -> some a with a(rep) = cell
  std::vector<std::vector<int>> stabilizer;  // per orbit: aut elements fixing rep
};

struct EquivChainComplex {
  bool relative = true;
  std::vector<OrbitBasis> basis;  // per dimension
  // boundary[p]: per column orbit of dim p, entries row orbit -> ring element
  std::vector<std::vector<std::map<int, ZRingElement>>> boundary;
};

struct EquivChainMap {
  std::vector<std::vector<std::map<int, ZRingElement>>> entries;
};

inline EquivChainComplex relative_chain_complex(const GComplex& x, const FundObject& obj,
                                                const UniversalCover& uc,
                                                const AutExtension& ext, bool relative) {
  EquivChainComplex cc;
  cc.relative = relative;
  cc.basis.resize(uc.complex.dim() + 1);
  for (int p = 0; p <= uc.complex.dim(); ++p) {
    OrbitBasis& ob = cc.basis[p];
    ob.orbit_of.assign(uc.complex.num_cells(p), -2);  // -2 unvisited, -1 excluded
    ob.elem_to_rep.assign(uc.complex.num_cells(p), -1);
    for (int i = 0; i < uc.complex.num_cells(p); ++i) {
      if (ob.orbit_of[i] != -2) continue;
      auto [bcell, sheet] = uc.cell_to_base[p][i];
      if (relative && obj.site.comp_singular.contains(p, bcell)) {
        // the whole orbit lies over the singular part
        for (int a = 0; a < ext.aut.order(); ++a) {
          int img = uc.act_cell(ext.cover_action[a], p, i);
          if (ob.orbit_of[img] == -2 || ob.orbit_of[img] == -1)
            ob.orbit_of[img] = -1;
          else
            throw std::logic_error("singular orbit overlaps an included one");
        }
        continue;
      }
      int orbit = static_cast<int>(ob.reps.size());
      ob.reps.push_back(i);
      ob.stabilizer.push_back({});
      for (int a = 0; a < ext.aut.order(); ++a) {
        int img = uc.act_cell(ext.cover_action[a], p, i);
        if (img == i) ob.stabilizer[orbit].push_back(a);
        if (ob.orbit_of[img] == -2) {
          ob.orbit_of[img] = orbit;
          ob.elem_to_rep[img] = a;
        } else if (ob.orbit_of[img] != orbit) {
          throw std::logic_error("inconsistent orbit decomposition");
        }
      }
    }
    if (relative)
      for (int o = 0; o < static_cast<int>(ob.reps.size()); ++o)
        if (ob.stabilizer[o].size() != 1)
          throw std::logic_error("relative basis cell has a nontrivial stabilizer");
  }
  cc.boundary.resize(uc.complex.dim() + 1);
  for (int p = 1; p <= uc.complex.dim(); ++p) {
    cc.boundary[p].resize(cc.basis[p].reps.size());
    for (std::size_t o = 0; o < cc.basis[p].reps.size(); ++o) {
      for (auto [face, sign] : boundary_faces(uc.complex, p, cc.basis[p].reps[o])) {
        int row = cc.basis[p - 1].orbit_of[face];
        if (row < 0) continue;  // relative mode: singular faces vanish
        cc.boundary[p][o][row].add(cc.basis[p - 1].elem_to_rep[face], sign);
      }
    }
  }
  return cc;
}

/// Product in the group ring of `g`.
inline ZRingElement ring_mul(const FiniteGroup& g, const ZRingElement& a, const ZRingElement& b) {
  ZRingElement out;
  for (const auto& [x, cx] : a.coeff)
    for (const auto& [y, cy] : b.coeff) out.add(g.mul(x, y), cx * cy);
  return out;
}

inline ZRingElement ring_apply_hom(const GroupHom& h, const ZRingElement& a) {
  ZRingElement out;
  for (const auto& [x, c] : a.coeff) out.add(h(x), c);
  return out;
}

/// d o d = 0 over Z Aut(x); meaningful for free bases (relative mode).
inline bool boundary_squares_to_zero(const FiniteGroup& aut, const EquivChainComplex& cc) {
  for (int p = 2; p < static_cast<int>(cc.boundary.size()); ++p)
    for (std::size_t col = 0; col < cc.boundary[p].size(); ++col) {
      std::map<int, ZRingElement> acc;
      // d(a v) = a d(v): scalars multiply on the left in column order
      for (const auto& [mid, a] : cc.boundary[p][col])
        for (const auto& [row, b] : cc.boundary[p - 1][mid]) acc[row] += ring_mul(aut, a, b);
      for (const auto& [row, v] : acc)
        if (!v.is_zero()) return false;
    }
  return true;
}

/// The lifted chain map commutes with the boundaries over Z Aut(x), with the
/// phi'-twist on the scalar side.
inline bool chain_map_commutes(const FiniteGroup& aut, const GroupHom& phi,
                               const EquivChainComplex& cc, const EquivChainMap& m) {
  for (int p = 1; p < static_cast<int>(cc.boundary.size()); ++p)
    for (std::size_t col = 0; col < cc.boundary[p].size(); ++col) {
      // F(d v) with F(a w) = phi(a) F(w)
      std::map<int, ZRingElement> lhs;
      for (const auto& [mid, a] : cc.boundary[p][col])
        for (const auto& [row, b] : m.entries[p - 1][mid])
          lhs[row] += ring_mul(aut, ring_apply_hom(phi, a), b);
      // d(F v)
      std::map<int, ZRingElement> rhs;
      for (const auto& [mid, b] : m.entries[p][col])
        for (const auto& [row, a] : cc.boundary[p][mid]) rhs[row] += ring_mul(aut, b, a);
      std::set<int> rows;
      for (const auto& [r, v] : lhs) rows.insert(r);
      for (const auto& [r, v] : rhs) rows.insert(r);
      for (int r : rows) {
        ZRingElement l = lhs.count(r) ? lhs.at(r) : ZRingElement{};
        ZRingElement rr = rhs.count(r) ? rhs.at(r) : ZRingElement{};
        if (!(l == rr)) return false;
      }
    }
  return true;
}

/// Full-matrix chain-map identity on the cover: d F = F d as integer
/// matrices over all cover cells (works in absolute mode too).
inline bool full_matrices_commute(const UniversalCover& uc, const CoverMapLift& lift) {
  for (int p = 1; p <= uc.complex.dim(); ++p)
    for (int col = 0; col < uc.complex.num_cells(p); ++col) {
      std::map<int, long long> lhs;  // d(F col)
      for (auto [mid, c] : lift.full[p][col])
        for (auto [row, sign] : boundary_faces(uc.complex, p, mid)) lhs[row] += c * sign;
      std::map<int, long long> rhs;  // F(d col)
      for (auto [mid, sign] : boundary_faces(uc.complex, p, col))
        for (auto [row, c] : lift.full[p - 1][mid]) rhs[row] += sign * c;
      for (auto& [k, v] : lhs)
        if (v != (rhs.count(k) ? rhs[k] : 0)) return false;
      for (auto& [k, v] : rhs)
        if (v != (lhs.count(k) ? lhs[k] : 0)) return false;
    }
  return true;
}

inline EquivChainMap equiv_chain_map(const UniversalCover& uc, const AutExtension& ext,
                                     const EquivChainComplex& cc, const CoverMapLift& lift) {
  EquivChainMap m;
  m.entries.resize(uc.complex.dim() + 1);
  for (int p = 0; p <= uc.complex.dim(); ++p) {
    m.entries[p].resize(cc.basis[p].reps.size());
    for (std::size_t o = 0; o < cc.basis[p].reps.size(); ++o)
      for (auto [cell, coeff] : lift.full[p][cc.basis[p].reps[o]]) {
        int row = cc.basis[p].orbit_of[cell];
        if (row < 0) continue;
        m.entries[p][o][row].add(cc.basis[p].elem_to_rep[cell], coeff);
      }
  }
  return m;
}

}  // namespace eqfp
