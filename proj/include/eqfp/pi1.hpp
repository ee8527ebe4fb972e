#pragma once

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "eqfp/coset_enum.hpp"
#include "eqfp/group_ring.hpp"
#include "eqfp/perm_group.hpp"

namespace eqfp {

/// Element of a fundamental group in either backend: an element index of the
/// enumerated regular representation, or an integer winding number.
struct Pi1Elem {
  long long v = 0;
  bool operator==(const Pi1Elem&) const = default;
  bool operator<(const Pi1Elem& o) const { return v < o.v; }
};

/// Fundamental group of a component. Finite groups come out of coset
/// enumeration; a component with no 2-cells and one independent loop is
/// handled symbolically as the infinite cyclic group.
class Pi1Group {
public:
  enum class Kind { Finite, InfiniteCyclic };

  static Pi1Group finite(std::shared_ptr<const FiniteGroup> g, std::vector<int> gen_elems) {
    Pi1Group p;
    p.kind_ = Kind::Finite;
    p.grp_ = std::move(g);
    p.gen_elems_ = std::move(gen_elems);
    return p;
  }
  static Pi1Group infinite_cyclic() {
    Pi1Group p;
    p.kind_ = Kind::InfiniteCyclic;
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_trivial() const { return is_finite() && grp_->order() == 1; }
  long long order() const {
    if (!is_finite()) throw std::logic_error("order of infinite pi_1");
    return grp_->order();
  }
  const FiniteGroup& group() const {
    if (!is_finite()) throw std::logic_error("no enumerated group for infinite pi_1");
    return *grp_;
  }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return grp_; }
  const std::vector<int>& generator_elements() const { return gen_elems_; }

  int num_generators() const {
    return is_finite() ? static_cast<int>(gen_elems_.size()) : 1;
  }

  Pi1Elem id() const { return {0}; }
  Pi1Elem generator(int i) const {
    if (is_finite()) return {gen_elems_.at(i)};
    if (i != 0) throw std::out_of_range("infinite cyclic group has one generator");
    return {1};
  }
  Pi1Elem mul(Pi1Elem a, Pi1Elem b) const {
    if (is_finite()) return {grp_->mul(static_cast<int>(a.v), static_cast<int>(b.v))};
    return {a.v + b.v};
  }
  Pi1Elem inv(Pi1Elem a) const {
    if (is_finite()) return {grp_->inv(static_cast<int>(a.v))};
    return {-a.v};
  }
  Pi1Elem pow(Pi1Elem a, long long k) const {
    if (!is_finite()) return {a.v * k};
    Pi1Elem r = id(), base = k < 0 ? inv(a) : a;
    long long n = k < 0 ? -k : k;
    for (; n > 0; --n) r = mul(r, base);
    return r;
  }

private:
  Kind kind_ = Kind::Finite;
  std::shared_ptr<const FiniteGroup> grp_;
  std::vector<int> gen_elems_;
};

/// alpha |-> eps * alpha + c on the integers; eps is +-1.
struct ZAffineMove {
  long long eps = 1;
  long long c = 0;
};

/// Twisted-conjugacy structure on the infinite cyclic group: gamma ranges
/// over an extension of WH_x by Z, which boils down to translations by
/// (d-1)Z plus finitely many affine moves.
struct ZTwistData {
  long long degree = 1;             // phi-hat multiplier on Z
  std::vector<ZAffineMove> moves;   // one per Weyl element acting on the component

  // Orbit structure: translations by `modulus`Z (0 = none), optionally folded
  // by alpha |-> reflect_offset - alpha.
  long long modulus = 0;
  bool has_reflection = false;
  long long reflect_offset = 0;

  void finalize() {
    auto g = [](long long a, long long b) { return std::gcd(a, b); };
    modulus = std::llabs(degree - 1);
    has_reflection = false;
    reflect_offset = 0;
    for (const auto& m : moves) {
      if (m.eps == 1) {
        modulus = g(modulus, m.c);
      } else if (!has_reflection) {
        has_reflection = true;
        reflect_offset = m.c;
      } else {
        modulus = g(modulus, m.c - reflect_offset);
      }
    }
  }

  static long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
  }

  long long class_key(long long alpha) const {
    if (modulus > 0) {
      long long a = mod(alpha, modulus);
      if (!has_reflection) return a;
      return std::min(a, mod(reflect_offset - alpha, modulus));
    }
    if (!has_reflection) return alpha;
    long long b = reflect_offset - alpha;
    return std::min(alpha, b);
  }

  std::optional<long long> num_classes() const {
    if (modulus == 0) return std::nullopt;
    if (!has_reflection) return modulus;
    long long fixed = 0;
    for (long long x = 0; x < modulus; ++x)
      if (mod(2 * x - reflect_offset, modulus) == 0) ++fixed;
    return (modulus + fixed) / 2;
  }
};

/// Per-object twisted-class bookkeeping: canonicalizes a pi_1 element to the
/// key of its Reidemeister class under the Aut(x)-twisting.
struct ClassContext {
  Pi1Group::Kind kind = Pi1Group::Kind::Finite;

  // Finite backend: classes of the embedded pi_1 inside Aut(x).
  std::shared_ptr<const FiniteGroup> aut;
  std::vector<int> pi1_in_aut;  // pi_1 element index -> Aut element index
  TwistedClassSet classes;

  // Infinite cyclic backend.
  ZTwistData ztwist;

  long long class_key(Pi1Elem a) const {
    if (kind == Pi1Group::Kind::Finite)
      return classes.rep(classes.class_of(pi1_in_aut.at(static_cast<std::size_t>(a.v))));
    return ztwist.class_key(a.v);
  }

  std::optional<long long> num_classes() const {
    if (kind == Pi1Group::Kind::Finite) return classes.num_classes();
    return ztwist.num_classes();
  }

  std::vector<long long> all_class_keys() const {
    if (kind == Pi1Group::Kind::Finite) {
      std::vector<long long> keys;
      keys.reserve(classes.classes.size());
      for (int c = 0; c < classes.num_classes(); ++c) keys.push_back(classes.rep(c));
      return keys;
    }
    if (!ztwist.num_classes()) throw std::logic_error("cannot enumerate infinitely many classes");
    std::set<long long> keys;
    for (long long x = 0; x < ztwist.modulus; ++x) keys.insert(ztwist.class_key(x));
    return std::vector<long long>(keys.begin(), keys.end());
  }
};

}  // namespace eqfp
