#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eqfp/group_ring.hpp"
#include "eqfp/pi1.hpp"

using namespace eqfp;

namespace {

FiniteGroup z_n(int n) {
  Perm cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return FiniteGroup(n, {cyc});
}

GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<int> img(g.order());
  std::iota(img.begin(), img.end(), 0);
  return GroupHom{std::move(img)};
}

GroupHom inversion_hom(const FiniteGroup& g) {
  std::vector<int> img(g.order());
  for (int e = 0; e < g.order(); ++e) img[e] = g.inv(e);
  return make_hom_from_element_images(g, g, std::move(img));
}

// Brute-force twisted classes: repeatedly merge alpha with phi(gamma) alpha gamma^-1.
std::vector<std::set<int>> brute_classes(const FiniteGroup& g, const GroupHom& phi) {
  std::vector<int> cls(g.order());
  std::iota(cls.begin(), cls.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < g.order(); ++a)
      for (int c = 0; c < g.order(); ++c) {
        int img = g.mul(g.mul(phi(c), a), g.inv(c));
        int x = std::min(cls[a], cls[img]), y = std::max(cls[a], cls[img]);
        if (x != y) {
          for (int& v : cls)
            if (v == y) v = x;
          changed = true;
        }
      }
  }
  std::map<int, std::set<int>> buckets;
  for (int a = 0; a < g.order(); ++a) buckets[cls[a]].insert(a);
  std::vector<std::set<int>> out;
  for (auto& [k, s] : buckets) out.push_back(std::move(s));
  return out;
}

}  // namespace

TEST_CASE("twisted conjugacy classes") {
  SECTION("Z/2 with identity twist has two classes") {
    FiniteGroup g = z_n(2);
    auto cs = twisted_conjugacy_classes(g, identity_hom(g));
    REQUIRE(cs.num_classes() == 2);
  }
  SECTION("Z/3 with inversion twist has one class") {
    FiniteGroup g = z_n(3);
    auto cs = twisted_conjugacy_classes(g, inversion_hom(g));
    REQUIRE(cs.num_classes() == 1);
  }
  SECTION("trivial group has one class") {
    FiniteGroup g;
    auto cs = twisted_conjugacy_classes(g, identity_hom(g));
    REQUIRE(cs.num_classes() == 1);
  }
  SECTION("identity twist on abelian groups gives |G| classes") {
    for (int n : {2, 3, 4, 6, 8}) {
      FiniteGroup g = z_n(n);
      REQUIRE(twisted_conjugacy_classes(g, identity_hom(g)).num_classes() == n);
    }
  }
  SECTION("matches brute force and is a stable partition") {
    FiniteGroup s3(3, {{1, 0, 2}, {0, 2, 1}});
    for (const GroupHom& phi : {identity_hom(s3)}) {
      auto cs = twisted_conjugacy_classes(s3, phi);
      auto brute = brute_classes(s3, phi);
      REQUIRE(cs.num_classes() == static_cast<int>(brute.size()));
      // per-element membership stability under every twisting move
      for (int a = 0; a < s3.order(); ++a)
        for (int c = 0; c < s3.order(); ++c) {
          int img = s3.mul(s3.mul(phi(c), a), s3.inv(c));
          REQUIRE(cs.class_of(a) == cs.class_of(img));
        }
      // representatives are minimal
      for (const auto& cls : cs.classes)
        REQUIRE(*std::min_element(cls.begin(), cls.end()) == cls.front());
    }
  }
}

TEST_CASE("trace projection") {
  // Aut = Z/4 = <g>, pi_1 = {e, g^2}; r = 1*g + 2*g^2 + 1*g^3 projects to 2*[g^2]
  FiniteGroup z4 = z_n(4);
  int gen = z4.generator_indices()[0];
  int g2 = z4.mul(gen, gen);
  int g3 = z4.mul(g2, gen);
  std::vector<int> members{0, g2};
  auto cs = twisted_classes(z4, identity_hom(z4), members);
  REQUIRE(cs.num_classes() == 2);

  ZRingElement r;
  r.add(gen, 1);
  r.add(g2, 2);
  r.add(g3, 1);
  auto projected = trace_projection(r, cs);
  REQUIRE(projected.coeff.size() == 1);
  REQUIRE(projected.coeff.at(g2) == 2);

  SECTION("zero projects to zero") {
    REQUIRE(trace_projection(ZRingElement{}, cs).is_zero());
  }
  SECTION("projection is the identity on classes when Aut = pi_1") {
    FiniteGroup z2 = z_n(2);
    auto cs2 = twisted_conjugacy_classes(z2, identity_hom(z2));
    ZRingElement s;
    s.add(0, 3);
    s.add(1, 5);
    auto p = trace_projection(s, cs2);
    REQUIRE(p.coeff.at(0) == 3);
    REQUIRE(p.coeff.at(1) == 5);
  }
}

TEST_CASE("trace projection is invariant under twisted conjugation") {
  // proj(phi(h) r h^-1) == proj(r) for pi_1 elements h: the well-definedness
  // that makes the trace map a trace.
  FiniteGroup z4 = z_n(4);
  GroupHom phi = identity_hom(z4);
  std::vector<int> members{0, z4.mul(z4.generator_indices()[0], z4.generator_indices()[0])};
  auto cs = twisted_classes(z4, phi, members);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    ZRingElement r;
    for (int e = 0; e < z4.order(); ++e) r.add(e, static_cast<int>(rng() % 7) - 3);
    for (int h : members) {
      ZRingElement conj;
      for (const auto& [g, c] : r.coeff) conj.add(z4.mul(z4.mul(phi(h), g), z4.inv(h)), c);
      REQUIRE(trace_projection(conj, cs) == trace_projection(r, cs));
    }
  }
}

TEST_CASE("augmentation") {
  FiniteGroup z2 = z_n(2);
  auto cs = twisted_conjugacy_classes(z2, identity_hom(z2));
  SECTION("2a - 1 augments to 1") {
    ZClassElement v;
    v.add(cs.rep(0), -1);
    v.add(cs.rep(1), 2);
    REQUIRE(augmentation(v) == 1);
  }
  SECTION("zero augments to zero") { REQUIRE(augmentation(ZClassElement{}) == 0); }
  SECTION("3e + 5t augments to 8") {
    ZClassElement v;
    v.add(0, 3);
    v.add(1, 5);
    REQUIRE(augmentation(v) == 8);
  }
  SECTION("additive, class generators map to 1") {
    ZClassElement a, b;
    a.add(0, 2);
    b.add(1, -7);
    ZClassElement sum = a;
    sum += b;
    REQUIRE(augmentation(sum) == augmentation(a) + augmentation(b));
    ZClassElement gen;
    gen.add(1, 1);
    REQUIRE(augmentation(gen) == 1);
  }
}

TEST_CASE("embedding validation") {
  FiniteGroup z2 = z_n(2);
  FiniteGroup z4 = z_n(4);
  int g2 = z4.mul(z4.generator_indices()[0], z4.generator_indices()[0]);
  REQUIRE_NOTHROW(SubgroupEmbedding::checked(z2, z4, {0, g2}));
  REQUIRE_THROWS(SubgroupEmbedding::checked(z2, z4, {0, 0}));   // not injective
  REQUIRE_THROWS(SubgroupEmbedding::checked(z2, z4, {0, z4.generator_indices()[0]}));  // not a hom
}

TEST_CASE("infinite cyclic twisted classes") {
  SECTION("identity twist, no Weyl moves: classes are the integers") {
    ZTwistData t;
    t.degree = 1;
    t.finalize();
    REQUIRE_FALSE(t.num_classes().has_value());
    REQUIRE(t.class_key(5) == 5);
    REQUIRE(t.class_key(-2) == -2);
  }
  SECTION("degree d folds to |d-1| classes") {
    ZTwistData t;
    t.degree = 3;
    t.finalize();
    REQUIRE(t.num_classes() == 2);
    REQUIRE(t.class_key(0) == t.class_key(2));
    REQUIRE(t.class_key(0) != t.class_key(1));
  }
  SECTION("degree 0 (constant map) folds everything") {
    ZTwistData t;
    t.degree = 0;
    t.finalize();
    REQUIRE(t.num_classes() == 1);
    REQUIRE(t.class_key(41) == t.class_key(-7));
  }
  SECTION("reflection move folds alpha with c - alpha") {
    ZTwistData t;
    t.degree = 1;
    t.moves.push_back({-1, 0});
    t.finalize();
    REQUIRE_FALSE(t.num_classes().has_value());
    REQUIRE(t.class_key(3) == t.class_key(-3));
    REQUIRE(t.class_key(3) != t.class_key(4));
  }
  SECTION("orbit structure matches a brute-force closure") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      ZTwistData t;
      t.degree = static_cast<long long>(rng() % 7) - 3;
      int nmoves = rng() % 3;
      for (int i = 0; i < nmoves; ++i)
        t.moves.push_back({rng() % 2 ? 1LL : -1LL, static_cast<long long>(rng() % 9) - 4});
      t.finalize();
      // brute force orbits on a window of integers, using generators of the
      // twisting: translations by (d-1) and the affine moves
      auto step = [&](long long a) {
        std::vector<long long> out{a + (t.degree - 1), a - (t.degree - 1)};
        for (const auto& m : t.moves) out.push_back(m.eps * a + m.c);
        return out;
      };
      for (long long a = -6; a <= 6; ++a)
        for (long long b : step(a)) REQUIRE(t.class_key(a) == t.class_key(b));
    }
  }
}
