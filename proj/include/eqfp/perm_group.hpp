#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqfp {

/// A permutation of {0,...,n-1} stored as its image tuple.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// (a*b)(x) = a(b(x)); b acts first.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<int>(x);
  return c;
}

inline bool is_permutation(const Perm& a, int n) {
  if (static_cast<int>(a.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : a) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// A finite group of permutations with every element enumerated.
///
/// Elements are kept in lexicographic order of their image tuples; the
/// identity is always element 0 and the order is reproducible across runs,
/// which downstream code relies on for representatives and report layout.
class FiniteGroup {
public:
  FiniteGroup() : degree_(1) { init({}, 1); }

  explicit FiniteGroup(int degree, std::vector<Perm> generators)
      : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
    for (const Perm& g : generators)
      if (!is_permutation(g, degree))
        throw std::invalid_argument("generator is not a permutation of the stated degree");
    init(std::move(generators), degree);
  }

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& perm(int e) const { return elements_[e]; }
  const std::vector<Perm>& elements() const { return elements_; }

  /// Indices (into the canonical element order) of the construction generators.
  const std::vector<int>& generator_indices() const { return generator_indices_; }

  int index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("permutation not in group");
    return it->second;
  }
  bool contains(const Perm& p) const { return index_.find(p) != index_.end(); }

  int mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[a * order() + b];
    return index_of(compose(elements_[a], elements_[b]));
  }
  int inv(int a) const { return inverse_[a]; }

  /// A word in the construction generators evaluating to element e
  /// (entries are generator positions, applied left to right).
  const std::vector<int>& word(int e) const { return words_[e]; }

  bool operator==(const FiniteGroup& o) const {
    return degree_ == o.degree_ && elements_ == o.elements_;
  }

private:
  void init(std::vector<Perm> gens, int degree) {
    const Perm id = identity_perm(degree);
    std::map<Perm, std::vector<int>> reached;  // element -> word in gens
    reached.emplace(id, std::vector<int>{});
    std::queue<Perm> todo;
    todo.push(id);
    while (!todo.empty()) {
      Perm cur = todo.front();
      todo.pop();
      const std::vector<int>& w = reached.at(cur);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Perm nxt = compose(cur, gens[i]);
        if (reached.count(nxt)) continue;
        std::vector<int> nw = w;
        nw.push_back(static_cast<int>(i));
        reached.emplace(std::move(nxt), std::move(nw));
        todo.push(compose(cur, gens[i]));
      }
    }
    elements_.reserve(reached.size());
    for (const auto& [p, w] : reached) elements_.push_back(p);
    std::sort(elements_.begin(), elements_.end());
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i) index_[elements_[i]] = i;
    words_.resize(elements_.size());
    for (auto& [p, w] : reached) words_[index_.at(p)] = std::move(w);
    inverse_.resize(elements_.size());
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
      inverse_[i] = index_.at(inverse(elements_[i]));
    generator_indices_.reserve(gens.size());
    for (const Perm& g : gens) generator_indices_.push_back(index_.at(g));
    if (elements_.size() <= 1024) {
      const int n = order();
      mul_table_.resize(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          mul_table_[a * n + b] = index_.at(compose(elements_[a], elements_[b]));
    }
  }

  int degree_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  std::vector<int> inverse_;
  std::vector<int> generator_indices_;
  std::vector<std::vector<int>> words_;
  std::vector<int> mul_table_;
};

/// Subgroup of a parent group, stored as sorted element indices.
struct Subgroup {
  std::vector<int> members;  // sorted, starts with 0 (identity)

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int e) const {
    return std::binary_search(members.begin(), members.end(), e);
  }
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
  }
};

inline Subgroup trivial_subgroup() { return Subgroup{{0}}; }

inline Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

/// Closure of a seed set under multiplication and inverse.
inline Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
  std::set<int> got{0};
  std::queue<int> todo;
  todo.push(0);
  for (int e : seed)
    if (got.insert(e).second) todo.push(e);
  std::vector<int> gens = std::move(seed);
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop();
    for (int b : gens) {
      int ab = g.mul(a, b);
      if (got.insert(ab).second) todo.push(ab);
      int ia = g.inv(a);
      if (got.insert(ia).second) todo.push(ia);
    }
    int ia = g.inv(a);
    if (got.insert(ia).second) todo.push(ia);
  }
  Subgroup s;
  s.members.assign(got.begin(), got.end());
  return s;
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  for (int a : h.members)
    for (int b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  return !h.members.empty() && h.members.front() == 0;
}

inline Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int by) {
  std::vector<int> m;
  m.reserve(h.members.size());
  int byi = g.inv(by);
  for (int e : h.members) m.push_back(g.mul(g.mul(by, e), byi));
  std::sort(m.begin(), m.end());
  return Subgroup{std::move(m)};
}

/// Every subgroup of g, by closure-join search. Exponential in principle,
/// meant for the small acting groups this engine deals with.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> seen;
  std::queue<Subgroup> todo;
  Subgroup triv = trivial_subgroup();
  seen.insert(triv);
  todo.push(triv);
  while (!todo.empty()) {
    Subgroup s = todo.front();
    todo.pop();
    for (int e = 1; e < g.order(); ++e) {
      if (s.contains(e)) continue;
      std::vector<int> seed = s.members;
      seed.push_back(e);
      Subgroup t = subgroup_closure(g, std::move(seed));
      if (seen.insert(t).second) todo.push(t);
    }
  }
  return std::vector<Subgroup>(seen.begin(), seen.end());
}

/// One representative per conjugacy class of subgroups, sorted by order
/// then by canonical member list.
inline std::vector<Subgroup> subgroup_conjugacy_classes(const FiniteGroup& g) {
  std::vector<Subgroup> subs = all_subgroups(g);
  std::set<Subgroup> done;
  std::vector<Subgroup> reps;
  for (const Subgroup& s : subs) {  // subs is sorted, so reps are minimal
    if (done.count(s)) continue;
    reps.push_back(s);
    for (int e = 0; e < g.order(); ++e) done.insert(conjugate_subgroup(g, s, e));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> m;
  for (int e = 0; e < g.order(); ++e)
    if (conjugate_subgroup(g, h, e) == h) m.push_back(e);
  return Subgroup{std::move(m)};
}

inline bool subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  for (int e = 0; e < g.order(); ++e) {
    Subgroup c = conjugate_subgroup(g, h, e);
    if (std::includes(k.members.begin(), k.members.end(), c.members.begin(), c.members.end()))
      return true;
  }
  return false;
}

/// The Weyl group N_G(H)/H as a permutation group on the cosets of H in
/// N_G(H), together with the quotient map and a canonical lift per element.
struct WeylGroup {
  FiniteGroup group;            // WH, canonically ordered
  Subgroup normalizer_in_g;     // N_G(H)
  std::vector<int> quotient;    // position in normalizer members -> WH element
  std::vector<int> lift;        // WH element -> G element (minimal coset member)
};

inline WeylGroup weyl_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("weyl_group: not a subgroup");
  Subgroup n = normalizer(g, h);
  // Cosets xH for x in N, each as its sorted member list; rep = min member.
  std::map<int, int> coset_of;  // G element -> coset id
  std::vector<int> coset_rep;
  for (int x : n.members) {
    if (coset_of.count(x)) continue;
    int id = static_cast<int>(coset_rep.size());
    int rep = x;
    std::vector<int> mem;
    for (int e : h.members) mem.push_back(g.mul(x, e));
    for (int y : mem) {
      coset_of[y] = id;
      rep = std::min(rep, y);
    }
    coset_rep.push_back(rep);
  }
  // Reindex cosets by rep order; coset of the identity comes first.
  std::vector<int> order_ids(coset_rep.size());
  std::iota(order_ids.begin(), order_ids.end(), 0);
  std::sort(order_ids.begin(), order_ids.end(),
            [&](int a, int b) { return coset_rep[a] < coset_rep[b]; });
  std::vector<int> new_id(coset_rep.size());
  for (std::size_t i = 0; i < order_ids.size(); ++i) new_id[order_ids[i]] = static_cast<int>(i);
  for (auto& [e, c] : coset_of) c = new_id[c];
  std::vector<int> rep_sorted(coset_rep.size());
  for (std::size_t i = 0; i < coset_rep.size(); ++i) rep_sorted[new_id[i]] = coset_rep[i];

  const int nc = static_cast<int>(coset_rep.size());
  // n acts on cosets by left multiplication.
  auto coset_perm = [&](int x) {
    Perm p(nc);
    for (int c = 0; c < nc; ++c) p[c] = coset_of.at(g.mul(x, rep_sorted[c]));
    return p;
  };
  std::vector<Perm> gens;
  for (int x : n.members) gens.push_back(coset_perm(x));
  WeylGroup w{FiniteGroup(nc, gens), std::move(n), {}, {}};
  w.quotient.reserve(w.normalizer_in_g.members.size());
  for (int x : w.normalizer_in_g.members)
    w.quotient.push_back(w.group.index_of(coset_perm(x)));
  w.lift.assign(w.group.order(), -1);
  for (std::size_t i = 0; i < w.normalizer_in_g.members.size(); ++i) {
    int x = w.normalizer_in_g.members[i];
    int e = w.quotient[i];
    if (w.lift[e] < 0 || x < w.lift[e]) w.lift[e] = x;
  }
  return w;
}

/// Homomorphism between enumerated groups, given on every element.
struct GroupHom {
  std::vector<int> images;  // source element index -> target element index

  int operator()(int e) const { return images[e]; }
};

/// Builds a hom from images of the construction generators, filling in all
/// elements via their stored generator words; multiplicativity is checked
/// on all pairs.
inline GroupHom make_hom(const FiniteGroup& src, const FiniteGroup& tgt,
                         const std::vector<int>& gen_images) {
  if (gen_images.size() != src.generator_indices().size())
    throw std::invalid_argument("make_hom: one image per generator required");
  GroupHom h;
  h.images.resize(src.order());
  for (int e = 0; e < src.order(); ++e) {
    int v = 0;
    for (int gi : src.word(e)) v = tgt.mul(v, gen_images[gi]);
    h.images[e] = v;
  }
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (tgt.mul(h.images[a], h.images[b]) != h.images[src.mul(a, b)])
        throw std::invalid_argument("make_hom: images are not multiplicative");
  return h;
}

inline GroupHom make_hom_from_element_images(const FiniteGroup& src, const FiniteGroup& tgt,
                                             std::vector<int> images) {
  if (static_cast<int>(images.size()) != src.order())
    throw std::invalid_argument("hom: one image per element required");
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (tgt.mul(images[a], images[b]) != images[src.mul(a, b)])
        throw std::invalid_argument("hom: images are not multiplicative");
  return GroupHom{std::move(images)};
}

}  // namespace eqfp
