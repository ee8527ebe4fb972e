#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "eqfp/perm_group.hpp"
#include "eqfp/rational.hpp"

namespace eqfp {

/// Element of a group ring over an enumerated group. Zero coefficients are
/// never stored.
template <typename Coeff>
struct GroupRingElement {
  std::map<int, Coeff> coeff;  // element index -> coefficient

  void add(int g, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, fresh] = coeff.emplace(g, c);
    if (!fresh) {
      it->second += c;
      if (it->second == Coeff(0)) coeff.erase(it);
    }
  }
  bool is_zero() const { return coeff.empty(); }
  bool operator==(const GroupRingElement&) const = default;

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [g, c] : o.coeff) add(g, c);
    return *this;
  }
};

using ZRingElement = GroupRingElement<long long>;
using QRingElement = GroupRingElement<Rat>;

template <typename Coeff>
Coeff augmentation(const GroupRingElement<Coeff>& r) {
  Coeff s(0);
  for (const auto& [g, c] : r.coeff) s += c;
  return s;
}

/// Formal sum over twisted-conjugacy classes, keyed by the canonical
/// representative of each class. Works for both backends: finite groups key
/// by ambient element index, infinite-cyclic ones by a canonical integer.
template <typename Coeff>
struct ClassRingElement {
  std::map<long long, Coeff> coeff;

  void add(long long cls, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, fresh] = coeff.emplace(cls, c);
    if (!fresh) {
      it->second += c;
      if (it->second == Coeff(0)) coeff.erase(it);
    }
  }
  bool is_zero() const { return coeff.empty(); }
  int essential_count() const { return static_cast<int>(coeff.size()); }
  bool operator==(const ClassRingElement&) const = default;

  ClassRingElement& operator+=(const ClassRingElement& o) {
    for (const auto& [g, c] : o.coeff) add(g, c);
    return *this;
  }
  ClassRingElement operator*(const Coeff& s) const {
    ClassRingElement r;
    for (const auto& [g, c] : coeff) r.add(g, c * s);
    return r;
  }
};

using ZClassElement = ClassRingElement<long long>;
using QClassElement = ClassRingElement<Rat>;

template <typename Coeff>
Coeff augmentation(const ClassRingElement<Coeff>& r) {
  Coeff s(0);
  for (const auto& [g, c] : r.coeff) s += c;
  return s;
}

/// Orbit partition of a subset of `ambient` under alpha |-> twist(gamma) *
/// alpha * gamma^-1 for all gamma. The subset must be stable under these
/// moves (it is whenever it is the kernel-side of an extension the twist
/// respects); representatives are minimal element indices.
struct TwistedClassSet {
  std::vector<int> members;                // sorted ambient element indices
  std::vector<std::vector<int>> classes;   // sorted; classes ordered by rep
  std::vector<int> class_of_member;        // parallel to members

  int num_classes() const { return static_cast<int>(classes.size()); }
  int rep(int cls) const { return classes[cls].front(); }

  int class_of(int ambient_element) const {
    auto it = std::lower_bound(members.begin(), members.end(), ambient_element);
    if (it == members.end() || *it != ambient_element)
      throw std::invalid_argument("element not in the twisted class domain");
    return class_of_member[it - members.begin()];
  }
};

inline TwistedClassSet twisted_classes(const FiniteGroup& ambient, const GroupHom& twist,
                                       std::vector<int> members) {
  std::sort(members.begin(), members.end());
  const int n = static_cast<int>(members.size());
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto pos = [&](int e) {
    auto it = std::lower_bound(members.begin(), members.end(), e);
    if (it == members.end() || *it != e)
      throw std::invalid_argument("twisted_classes: member set not stable under twisting");
    return static_cast<int>(it - members.begin());
  };
  for (int i = 0; i < n; ++i)
    for (int gamma = 0; gamma < ambient.order(); ++gamma) {
      int img = ambient.mul(ambient.mul(twist(gamma), members[i]), ambient.inv(gamma));
      int a = find(i), b = find(pos(img));
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  TwistedClassSet cs;
  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) buckets[find(i)].push_back(members[i]);
  cs.class_of_member.resize(n);
  for (auto& [root, elems] : buckets) {
    int id = static_cast<int>(cs.classes.size());
    for (int e : elems) cs.class_of_member[pos(e)] = id;
    cs.classes.push_back(std::move(elems));
  }
  cs.members = std::move(members);
  return cs;
}

/// Reidemeister classes of pi under phi: orbits of alpha |-> phi(gamma) alpha gamma^-1.
inline TwistedClassSet twisted_conjugacy_classes(const FiniteGroup& pi, const GroupHom& phi) {
  std::vector<int> all(pi.order());
  std::iota(all.begin(), all.end(), 0);
  return twisted_classes(pi, phi, std::move(all));
}

/// Injection of an enumerated subgroup into an ambient group, element by element.
struct SubgroupEmbedding {
  std::vector<int> image;  // source element -> ambient element

  static SubgroupEmbedding checked(const FiniteGroup& src, const FiniteGroup& ambient,
                                   std::vector<int> image) {
    if (static_cast<int>(image.size()) != src.order())
      throw std::invalid_argument("embedding: one image per element required");
    std::set<int> seen;
    for (int v : image) {
      if (v < 0 || v >= ambient.order() || !seen.insert(v).second)
        throw std::invalid_argument("embedding not injective");
    }
    for (int a = 0; a < src.order(); ++a)
      for (int b = 0; b < src.order(); ++b)
        if (ambient.mul(image[a], image[b]) != image[src.mul(a, b)])
          throw std::invalid_argument("embedding not a homomorphism");
    return SubgroupEmbedding{std::move(image)};
  }
};

/// The trace map Z Aut(x) -> Z pi_1(...)_phi': coefficients outside the
/// embedded subgroup are dropped, the rest are summed per twisted class.
template <typename Coeff>
ClassRingElement<Coeff> trace_projection(const GroupRingElement<Coeff>& r,
                                         const TwistedClassSet& classes) {
  ClassRingElement<Coeff> out;
  for (const auto& [g, c] : r.coeff) {
    auto it = std::lower_bound(classes.members.begin(), classes.members.end(), g);
    if (it == classes.members.end() || *it != g) continue;
    out.add(classes.rep(classes.class_of_member[it - classes.members.begin()]), c);
  }
  return out;
}

}  // namespace eqfp
