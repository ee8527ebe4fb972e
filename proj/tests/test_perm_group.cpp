#include <catch2/catch_amalgamated.hpp>

#include "eqfp/perm_group.hpp"

using namespace eqfp;

namespace {

FiniteGroup s3() { return FiniteGroup(3, {{1, 0, 2}, {0, 2, 1}}); }
FiniteGroup z2() { return FiniteGroup(2, {{1, 0}}); }

// Independent check that a list of subgroups is exactly the set of
// subsets closed under the group operations.
int brute_force_subgroup_count(const FiniteGroup& g) {
  int n = g.order();
  REQUIRE(n <= 16);
  int count = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain identity
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1u)) continue;
      if (!(mask >> g.inv(a) & 1u)) closed = false;
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> b & 1u) && !(mask >> g.mul(a, b) & 1u)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("element enumeration and canonical order") {
  FiniteGroup g = s3();
  REQUIRE(g.order() == 6);
  REQUIRE(g.perm(0) == identity_perm(3));  // identity is element 0
  for (int i = 1; i < g.order(); ++i) REQUIRE(g.perm(i - 1) < g.perm(i));
  // group laws via the derived tables
  for (int a = 0; a < 6; ++a) {
    REQUIRE(g.mul(a, g.inv(a)) == 0);
    REQUIRE(g.mul(0, a) == a);
    for (int b = 0; b < 6; ++b)
      REQUIRE(g.perm(g.mul(a, b)) == compose(g.perm(a), g.perm(b)));
  }
  // stored words evaluate back to their elements
  for (int e = 0; e < g.order(); ++e) {
    int v = 0;
    for (int gi : g.word(e)) v = g.mul(v, g.generator_indices()[gi]);
    REQUIRE(v == e);
  }
}

TEST_CASE("trivial group") {
  FiniteGroup g;
  REQUIRE(g.order() == 1);
  REQUIRE(g.degree() == 1);
  REQUIRE(subgroup_conjugacy_classes(g).size() == 1);
}

TEST_CASE("subgroup conjugacy classes") {
  SECTION("Z/2 has two classes") {
    auto reps = subgroup_conjugacy_classes(z2());
    REQUIRE(reps.size() == 2);
    REQUIRE(reps[0].order() == 1);
    REQUIRE(reps[1].order() == 2);
  }
  SECTION("S3 has four classes, sorted by order") {
    FiniteGroup g = s3();
    auto reps = subgroup_conjugacy_classes(g);
    REQUIRE(reps.size() == 4);
    std::vector<int> orders;
    for (const auto& h : reps) orders.push_back(h.order());
    REQUIRE(orders == std::vector<int>{1, 2, 3, 6});
    // oracle: S3 has 6 subgroups in total (1, three C2, C3, S3)
    REQUIRE(all_subgroups(g).size() == 6);
    REQUIRE(brute_force_subgroup_count(g) == 6);
    for (const auto& h : reps) REQUIRE(is_subgroup(g, h));
  }
  SECTION("Z/4 subgroup lattice") {
    FiniteGroup g(4, {{1, 2, 3, 0}});
    REQUIRE(brute_force_subgroup_count(g) == static_cast<int>(all_subgroups(g).size()));
  }
}

TEST_CASE("weyl groups") {
  SECTION("WH of the trivial subgroup of Z/2 is Z/2") {
    FiniteGroup g = z2();
    WeylGroup w = weyl_group(g, trivial_subgroup());
    REQUIRE(w.group.order() == 2);
  }
  SECTION("WH of C3 in S3 is Z/2") {
    FiniteGroup g = s3();
    auto reps = subgroup_conjugacy_classes(g);
    const Subgroup& c3 = reps[2];
    REQUIRE(c3.order() == 3);
    WeylGroup w = weyl_group(g, c3);
    REQUIRE(w.normalizer_in_g.order() == 6);  // C3 is normal in S3
    REQUIRE(w.group.order() == 2);
  }
  SECTION("WH of G in G is trivial") {
    FiniteGroup g = s3();
    WeylGroup w = weyl_group(g, full_subgroup(g));
    REQUIRE(w.group.order() == 1);
  }
  SECTION("quotient map is a surjective homomorphism") {
    FiniteGroup g = s3();
    auto reps = subgroup_conjugacy_classes(g);
    WeylGroup w = weyl_group(g, reps[1]);  // a C2
    REQUIRE(w.normalizer_in_g.order() == 2);
    REQUIRE(w.group.order() == 1);
    WeylGroup w3 = weyl_group(g, reps[2]);
    const auto& n = w3.normalizer_in_g.members;
    for (std::size_t i = 0; i < n.size(); ++i)
      for (std::size_t j = 0; j < n.size(); ++j) {
        int prod = g.mul(n[i], n[j]);
        auto it = std::find(n.begin(), n.end(), prod);
        REQUIRE(it != n.end());
        REQUIRE(w3.group.mul(w3.quotient[i], w3.quotient[j]) ==
                w3.quotient[it - n.begin()]);
      }
    for (int e = 0; e < w3.group.order(); ++e) {
      int lift = w3.lift[e];
      auto it = std::find(n.begin(), n.end(), lift);
      REQUIRE(it != n.end());
      REQUIRE(w3.quotient[it - n.begin()] == e);
    }
  }
}

TEST_CASE("subconjugacy") {
  FiniteGroup g = s3();
  auto reps = subgroup_conjugacy_classes(g);
  REQUIRE(subconjugate(g, reps[0], reps[1]));
  REQUIRE(subconjugate(g, reps[1], reps[3]));
  REQUIRE_FALSE(subconjugate(g, reps[1], reps[2]));  // C2 not inside C3
  REQUIRE_FALSE(subconjugate(g, reps[3], reps[2]));
}

TEST_CASE("homs validate multiplicativity") {
  FiniteGroup g = z2();
  REQUIRE_NOTHROW(make_hom(g, g, {1}));
  FiniteGroup z4(4, {{1, 2, 3, 0}});
  // Z/4 -> Z/2 sending the generator to the flip
  REQUIRE_NOTHROW(make_hom(z4, g, {1}));
  // an assignment of all elements that is not a hom
  REQUIRE_THROWS(make_hom_from_element_images(z4, z4, {0, 0, 1, 0}));
}
