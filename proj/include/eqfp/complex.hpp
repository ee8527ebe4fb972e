#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqfp/perm_group.hpp"

namespace eqfp {

struct CellRef {
  int dim = 0;
  int idx = 0;
  bool operator==(const CellRef&) const = default;
  bool operator<(const CellRef& o) const {
    return dim != o.dim ? dim < o.dim : idx < o.idx;
  }
};

/// Finite simplicial complex with a simplicial action of a finite group.
/// Cells are stored per dimension as sorted vertex tuples in lexicographic
/// order; every vertex is a 0-cell. The complex is closed under faces by
/// construction.
class GComplex {
public:
  GComplex() = default;

  GComplex(int nverts, std::shared_ptr<const FiniteGroup> group,
           std::vector<Perm> vertex_action, const std::vector<std::vector<int>>& top_simplices)
      : nverts_(nverts), group_(std::move(group)), vertex_action_(std::move(vertex_action)) {
    if (nverts < 1) throw std::invalid_argument("complex needs at least one vertex");
    if (static_cast<int>(vertex_action_.size()) != group_->order())
      throw std::invalid_argument("one vertex permutation per group element required");
    for (const Perm& p : vertex_action_)
      if (!is_permutation(p, nverts)) throw std::invalid_argument("invalid vertex action");

    std::set<std::vector<int>> all;
    for (int v = 0; v < nverts; ++v) all.insert({v});
    for (std::vector<int> s : top_simplices) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.empty()) throw std::invalid_argument("empty simplex");
      for (int v : s)
        if (v < 0 || v >= nverts) throw std::invalid_argument("simplex vertex out of range");
      // all nonempty subsets
      const int m = static_cast<int>(s.size());
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> face;
        for (int b = 0; b < m; ++b)
          if (mask & (1u << b)) face.push_back(s[b]);
        all.insert(std::move(face));
      }
    }
    int maxdim = 0;
    for (const auto& s : all) maxdim = std::max<int>(maxdim, static_cast<int>(s.size()) - 1);
    cells_.assign(maxdim + 1, {});
    for (const auto& s : all) cells_[s.size() - 1].push_back(s);
    index_.resize(maxdim + 1);
    for (int p = 0; p <= maxdim; ++p)
      for (int i = 0; i < static_cast<int>(cells_[p].size()); ++i) index_[p][cells_[p][i]] = i;
  }

  int num_vertices() const { return nverts_; }
  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  int num_cells(int p) const {
    return p >= 0 && p <= dim() ? static_cast<int>(cells_[p].size()) : 0;
  }
  long long total_cells() const {
    long long t = 0;
    for (int p = 0; p <= dim(); ++p) t += num_cells(p);
    return t;
  }
  const std::vector<int>& cell(int p, int i) const { return cells_[p][i]; }
  int cell_index(int p, const std::vector<int>& sorted_verts) const {
    if (p < 0 || p > dim()) return -1;
    auto it = index_[p].find(sorted_verts);
    return it == index_[p].end() ? -1 : it->second;
  }

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  int act_vertex(int g, int v) const { return vertex_action_[g][v]; }
  const Perm& vertex_perm(int g) const { return vertex_action_[g]; }

  std::vector<int> act_cell_verts(int g, int p, int i) const {
    std::vector<int> w;
    w.reserve(p + 1);
    for (int v : cells_[p][i]) w.push_back(vertex_action_[g][v]);
    std::sort(w.begin(), w.end());
    return w;
  }
  int act_cell(int g, int p, int i) const { return cell_index(p, act_cell_verts(g, p, i)); }

  /// First (g, cell) whose image is not a cell, if any.
  std::optional<std::pair<int, CellRef>> action_violation() const {
    for (int g = 0; g < group_->order(); ++g)
      for (int p = 0; p <= dim(); ++p)
        for (int i = 0; i < num_cells(p); ++i)
          if (act_cell(g, p, i) < 0) return std::make_pair(g, CellRef{p, i});
    return std::nullopt;
  }

  /// First (g, cell) fixed setwise but not pointwise, if any.
  std::optional<std::pair<int, CellRef>> regularity_violation() const {
    for (int g = 0; g < group_->order(); ++g)
      for (int p = 1; p <= dim(); ++p)
        for (int i = 0; i < num_cells(p); ++i) {
          if (act_cell(g, p, i) != i) continue;
          for (int v : cells_[p][i])
            if (vertex_action_[g][v] != v) return std::make_pair(g, CellRef{p, i});
        }
    return std::nullopt;
  }

private:
  int nverts_ = 1;
  std::shared_ptr<const FiniteGroup> group_ = std::make_shared<FiniteGroup>();
  std::vector<Perm> vertex_action_{Perm{0}};
  std::vector<std::vector<std::vector<int>>> cells_{{{0}}};
  std::vector<std::map<std::vector<int>, int>> index_{{{{0}, 0}}};
};

/// Face-closed subset of a complex's cells, stored as sorted index lists per
/// dimension (always sized dim+1; vertex ids equal 0-cell indices).
struct SubcomplexView {
  std::vector<std::vector<int>> cells;

  bool contains(int p, int i) const {
    if (p < 0 || p >= static_cast<int>(cells.size())) return false;
    return std::binary_search(cells[p].begin(), cells[p].end(), i);
  }
  bool empty() const {
    for (const auto& c : cells)
      if (!c.empty()) return false;
    return true;
  }
  /// Max dimension of a present cell; nullopt for the empty subcomplex.
  std::optional<int> dim() const {
    for (int p = static_cast<int>(cells.size()) - 1; p >= 0; --p)
      if (!cells[p].empty()) return p;
    return std::nullopt;
  }
  const std::vector<int>& vertices() const { return cells.at(0); }
  long long total_cells() const {
    long long t = 0;
    for (const auto& c : cells) t += c.size();
    return t;
  }
  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t p = 0; p < cells.size(); ++p)
      chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(cells[p].size());
    return chi;
  }
  bool operator==(const SubcomplexView&) const = default;
};

inline SubcomplexView full_view(const GComplex& x) {
  SubcomplexView v;
  v.cells.resize(x.dim() + 1);
  for (int p = 0; p <= x.dim(); ++p) {
    v.cells[p].resize(x.num_cells(p));
    std::iota(v.cells[p].begin(), v.cells[p].end(), 0);
  }
  return v;
}

/// X^H: cells all of whose vertices are fixed by every element of H.
inline SubcomplexView fixed_subcomplex(const GComplex& x, const Subgroup& h) {
  SubcomplexView view;
  view.cells.resize(x.dim() + 1);
  std::vector<bool> vfixed(x.num_vertices(), true);
  for (int v = 0; v < x.num_vertices(); ++v)
    for (int g : h.members)
      if (x.act_vertex(g, v) != v) {
        vfixed[v] = false;
        break;
      }
  for (int p = 0; p <= x.dim(); ++p)
    for (int i = 0; i < x.num_cells(p); ++i) {
      bool ok = true;
      for (int v : x.cell(p, i))
        if (!vfixed[v]) {
          ok = false;
          break;
        }
      if (ok) view.cells[p].push_back(i);
    }
  return view;
}

/// Pointwise stabilizer of a cell (equal to the setwise one on regular
/// complexes).
inline Subgroup isotropy(const GComplex& x, int p, int i) {
  std::vector<int> members;
  for (int g = 0; g < x.group().order(); ++g) {
    bool fixes = true;
    for (int v : x.cell(p, i))
      if (x.act_vertex(g, v) != v) {
        fixes = false;
        break;
      }
    if (fixes) members.push_back(g);
  }
  return Subgroup{std::move(members)};
}

/// X^{>H} within a fixed subcomplex: cells whose isotropy strictly contains H.
inline SubcomplexView singular_subcomplex(const GComplex& x, const Subgroup& h,
                                          const SubcomplexView& fixed) {
  SubcomplexView view;
  view.cells.resize(x.dim() + 1);
  for (int p = 0; p <= x.dim(); ++p)
    for (int i : fixed.cells[p])
      if (isotropy(x, p, i).order() != h.order()) view.cells[p].push_back(i);
  return view;
}

/// Connected components of a subcomplex via its 1-skeleton, ordered by
/// minimal vertex.
inline std::vector<SubcomplexView> components(const GComplex& x, const SubcomplexView& view) {
  if (view.empty()) return {};
  std::map<int, int> root;  // vertex -> union-find parent
  for (int v : view.vertices()) root[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  if (view.cells.size() > 1)
    for (int e : view.cells[1]) {
      const auto& verts = x.cell(1, e);
      int a = find(verts[0]), b = find(verts[1]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, int> comp_id;  // root vertex -> component index (root order = min vertex order)
  for (int v : view.vertices()) comp_id.emplace(find(v), 0);
  int k = 0;
  for (auto& [r, id] : comp_id) id = k++;
  std::vector<SubcomplexView> comps(k);
  for (auto& c : comps) c.cells.resize(x.dim() + 1);
  for (int p = 0; p < static_cast<int>(view.cells.size()); ++p)
    for (int i : view.cells[p]) comps[comp_id.at(find(x.cell(p, i)[0]))].cells[p].push_back(i);
  return comps;
}

/// Groups components into orbits under the given vertex permutations
/// (e.g. Weyl group lifts); each orbit is sorted, orbits ordered by first
/// member.
inline std::vector<std::vector<int>> component_orbits(const std::vector<SubcomplexView>& comps,
                                                      const std::vector<Perm>& vertex_perms) {
  const int n = static_cast<int>(comps.size());
  std::map<int, int> comp_of_vertex;
  for (int c = 0; c < n; ++c)
    for (int v : comps[c].vertices()) comp_of_vertex[v] = c;
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (const Perm& g : vertex_perms)
    for (int c = 0; c < n; ++c) {
      int image = comp_of_vertex.at(g[comps[c].vertices().front()]);
      int a = find(c), b = find(image);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> buckets;
  for (int c = 0; c < n; ++c) buckets[find(c)].push_back(c);
  std::vector<std::vector<int>> orbits;
  for (auto& [r, v] : buckets) orbits.push_back(std::move(v));
  return orbits;
}

/// One object site per (conjugacy class of isotropy subgroups, Weyl orbit of
/// fixed-set components): the combinatorial skeleton of Is Pi(G, X).
struct ObjectSite {
  int h_class = 0;
  Subgroup H;
  WeylGroup WH;
  SubcomplexView fixed;     // X^H
  SubcomplexView singular;  // X^{>H}
  std::vector<SubcomplexView> comps;
  std::vector<std::vector<int>> orbits;
  int orbit_index = 0;
  int comp_index = 0;                 // representative component
  SubcomplexView comp;                // comps[comp_index]
  SubcomplexView comp_singular;       // singular cells inside comp
  std::vector<int> whx;               // WH elements stabilizing comp
  std::vector<Perm> whx_vertex_perms; // their vertex action on X (via lifts)

  int basepoint() const { return comp.vertices().front(); }
  std::string id() const {
    return "H" + std::to_string(h_class) + ".c" + std::to_string(comp.vertices().front());
  }
};

inline std::vector<ObjectSite> enumerate_object_sites(const GComplex& x) {
  std::vector<ObjectSite> sites;
  const FiniteGroup& g = x.group();
  std::vector<Subgroup> hreps = subgroup_conjugacy_classes(g);
  for (int hc = 0; hc < static_cast<int>(hreps.size()); ++hc) {
    const Subgroup& h = hreps[hc];
    SubcomplexView fixed = fixed_subcomplex(x, h);
    if (fixed.empty()) continue;
    WeylGroup wh = weyl_group(g, h);
    SubcomplexView sing = singular_subcomplex(x, h, fixed);
    std::vector<SubcomplexView> comps = components(x, fixed);
    std::vector<Perm> wh_perms;
    for (int w = 0; w < wh.group.order(); ++w) wh_perms.push_back(x.vertex_perm(wh.lift[w]));
    std::vector<std::vector<int>> orbits = component_orbits(comps, wh_perms);
    std::map<int, int> comp_of_vertex;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
      for (int v : comps[c].vertices()) comp_of_vertex[v] = c;
    for (int oi = 0; oi < static_cast<int>(orbits.size()); ++oi) {
      ObjectSite s;
      s.h_class = hc;
      s.H = h;
      s.WH = wh;
      s.fixed = fixed;
      s.singular = sing;
      s.comps = comps;
      s.orbits = orbits;
      s.orbit_index = oi;
      s.comp_index = orbits[oi].front();
      s.comp = comps[s.comp_index];
      s.comp_singular.cells.resize(x.dim() + 1);
      for (int p = 0; p <= x.dim(); ++p)
        for (int i : s.comp.cells[p])
          if (sing.contains(p, i)) s.comp_singular.cells[p].push_back(i);
      for (int w = 0; w < wh.group.order(); ++w) {
        int image = comp_of_vertex.at(wh_perms[w][s.comp.vertices().front()]);
        if (image == s.comp_index) {
          s.whx.push_back(w);
          s.whx_vertex_perms.push_back(wh_perms[w]);
        }
      }
      sites.push_back(std::move(s));
    }
  }
  return sites;
}

/// Standard gap hypotheses, evaluated per object site.
struct GapRow {
  std::string object_id;
  int dim = 0;
  std::optional<int> singular_dim;
  bool dim_ok = false;
  bool codim_ok = false;
  bool ok() const { return dim_ok && codim_ok; }
  std::string diagnosis() const {
    if (ok()) return "ok";
    std::string d;
    if (!dim_ok) d += "dim " + std::to_string(dim) + " < 3";
    if (!codim_ok) {
      if (!d.empty()) d += "; ";
      d += "codimension-" + std::to_string(dim - *singular_dim) + " singular set";
    }
    return d;
  }
};

struct GapReport {
  std::vector<GapRow> rows;
  bool all_ok = true;
};

inline GapReport check_gap_hypotheses(const std::vector<ObjectSite>& sites) {
  GapReport rep;
  for (const ObjectSite& s : sites) {
    GapRow row;
    row.object_id = s.id();
    row.dim = s.comp.dim().value();
    row.singular_dim = s.comp_singular.dim();
    row.dim_ok = row.dim >= 3;
    row.codim_ok = !row.singular_dim || (row.dim - *row.singular_dim >= 2);
    rep.all_ok = rep.all_ok && row.ok();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline GapReport check_gap_hypotheses(const GComplex& x) {
  return check_gap_hypotheses(enumerate_object_sites(x));
}

/// Simplicial self-map data; the domain is the r-th barycentric subdivision
/// of the target (r = 0 means plain vertex self-map).
struct GSimplicialMap {
  std::vector<int> vertex_images;  // domain vertex -> target vertex
};

inline std::optional<std::string> check_simpliciality(const GComplex& domain,
                                                      const GComplex& target,
                                                      const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != domain.num_vertices())
    return "map must assign an image to every domain vertex";
  for (int v : f)
    if (v < 0 || v >= target.num_vertices()) return "map image vertex out of range";
  for (int p = 0; p <= domain.dim(); ++p)
    for (int i = 0; i < domain.num_cells(p); ++i) {
      std::vector<int> img;
      for (int v : domain.cell(p, i)) img.push_back(f[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (target.cell_index(static_cast<int>(img.size()) - 1, img) < 0)
        return "image of simplex (dim " + std::to_string(p) + ", index " + std::to_string(i) +
               ") is not a simplex";
    }
  return std::nullopt;
}

inline std::optional<std::string> check_equivariance(const GComplex& domain,
                                                     const GComplex& target,
                                                     const std::vector<int>& f) {
  for (int g = 0; g < domain.group().order(); ++g)
    for (int v = 0; v < domain.num_vertices(); ++v)
      if (f[domain.act_vertex(g, v)] != target.act_vertex(g, f[v]))
        return "map does not commute with group element " + std::to_string(g) +
               " at vertex " + std::to_string(v);
  return std::nullopt;
}

/// One barycentric subdivision, with dictionaries between new vertices and
/// parent cells. The group action carries over canonically.
struct SdLevel {
  GComplex complex;
  std::vector<CellRef> vert_to_cell;            // Sd vertex -> parent cell
  std::vector<std::vector<int>> cell_to_vert;   // [dim][idx] -> Sd vertex
};

inline SdLevel barycentric_subdivide(const GComplex& x) {
  SdLevel sd;
  int nv = 0;
  sd.cell_to_vert.resize(x.dim() + 1);
  for (int p = 0; p <= x.dim(); ++p) {
    sd.cell_to_vert[p].resize(x.num_cells(p));
    for (int i = 0; i < x.num_cells(p); ++i) {
      sd.cell_to_vert[p][i] = nv++;
      sd.vert_to_cell.push_back(CellRef{p, i});
    }
  }
  // Top simplices: one flag per permutation of each cell's vertices.
  std::vector<std::vector<int>> tops;
  for (int p = 0; p <= x.dim(); ++p)
    for (int i = 0; i < x.num_cells(p); ++i) {
      const std::vector<int>& verts = x.cell(p, i);
      std::vector<int> order(verts.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        std::vector<int> flag;
        std::vector<int> prefix;
        for (int pos : order) {
          prefix.push_back(verts[pos]);
          std::vector<int> sorted = prefix;
          std::sort(sorted.begin(), sorted.end());
          int ci = x.cell_index(static_cast<int>(sorted.size()) - 1, sorted);
          flag.push_back(sd.cell_to_vert[sorted.size() - 1][ci]);
        }
        tops.push_back(std::move(flag));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  std::vector<Perm> action;
  for (int g = 0; g < x.group().order(); ++g) {
    Perm perm(nv);
    for (int v = 0; v < nv; ++v) {
      CellRef c = sd.vert_to_cell[v];
      perm[v] = sd.cell_to_vert[c.dim][x.act_cell(g, c.dim, c.idx)];
    }
    action.push_back(std::move(perm));
  }
  sd.complex = GComplex(nv, x.group_ptr(), std::move(action), tops);
  return sd;
}

inline int permutation_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

/// Barycentric subdivision chain operator: for each parent p-cell, the
/// signed flag p-cells inside it. Satisfies d(sd) = (sd)d.
struct SdTerm {
  int cell = 0;  // Sd cell index (same dimension as the parent)
  int sign = 1;
  std::vector<int> flag_positions;  // for each flag vertex, position of the
                                    // added parent vertex (permutation)
};

inline std::vector<std::vector<std::vector<SdTerm>>> sd_chain_operator(const GComplex& x,
                                                                       const SdLevel& sd) {
  std::vector<std::vector<std::vector<SdTerm>>> op(x.dim() + 1);
  for (int p = 0; p <= x.dim(); ++p) {
    op[p].resize(x.num_cells(p));
    for (int i = 0; i < x.num_cells(p); ++i) {
      const std::vector<int>& verts = x.cell(p, i);
      std::vector<int> order(verts.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        std::vector<int> flag_verts;
        std::vector<int> prefix;
        for (int pos : order) {
          prefix.push_back(verts[pos]);
          std::vector<int> sorted = prefix;
          std::sort(sorted.begin(), sorted.end());
          int ci = x.cell_index(static_cast<int>(sorted.size()) - 1, sorted);
          flag_verts.push_back(sd.cell_to_vert[sorted.size() - 1][ci]);
        }
        std::vector<int> sorted_flag = flag_verts;
        std::sort(sorted_flag.begin(), sorted_flag.end());
        int cell = sd.complex.cell_index(p, sorted_flag);
        int sign = permutation_sign(order) * permutation_sign(flag_verts);
        op[p][i].push_back(SdTerm{cell, sign, order});
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return op;
}

/// Boundary of a p-cell as (face index, sign) pairs; faces drop one vertex,
/// signs alternate by position.
inline std::vector<std::pair<int, int>> boundary_faces(const GComplex& x, int p, int i) {
  std::vector<std::pair<int, int>> out;
  if (p == 0) return out;
  const std::vector<int>& verts = x.cell(p, i);
  for (int k = 0; k <= p; ++k) {
    std::vector<int> face;
    face.reserve(p);
    for (int j = 0; j <= p; ++j)
      if (j != k) face.push_back(verts[j]);
    out.emplace_back(x.cell_index(p - 1, face), k % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace eqfp
