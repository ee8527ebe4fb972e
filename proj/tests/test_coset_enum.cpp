#include <catch2/catch_amalgamated.hpp>

#include "eqfp/coset_enum.hpp"

using namespace eqfp;

namespace {

// Presentations of groups whose orders are classical facts; the enumerator
// must also hand back a permutation group in which every relator closes,
// which is rechecked here independently of the internal validation.
struct Case {
  const char* name;
  Presentation pres;
  int order;
};

std::vector<Case> catalog() {
  std::vector<Case> cases;
  for (int n = 1; n <= 24; ++n)
    cases.push_back({"cyclic", {1, {Word(n, 1)}}, n});
  cases.push_back({"klein four", {2, {{1, 1}, {2, 2}, {1, 2, 1, 2}}}, 4});
  cases.push_back({"S3", {2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}}, 6});
  cases.push_back({"D4", {2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}}}, 8});
  cases.push_back({"Q8", {2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}}, 8});
  cases.push_back({"A4", {2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2}}}, 12});
  cases.push_back({"D6", {2, {{1, 1}, {2, 2}, Word{1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}}, 12});
  cases.push_back({"S4", {2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}}}, 24});
  return cases;
}

}  // namespace

TEST_CASE("presented groups of order <= 24") {
  for (const Case& c : catalog()) {
    INFO(c.name << " expected order " << c.order);
    auto res = todd_coxeter(c.pres, 50000);
    REQUIRE(res.has_value());
    REQUIRE(res->group.order() == c.order);
    // regular representation: degree equals order
    REQUIRE(res->group.degree() == c.order);
    // relators evaluate to the identity
    for (const Word& w : c.pres.relators)
      REQUIRE(evaluate_word(res->group, res->generator_elements, w) == 0);
    // generators generate
    std::vector<Perm> gens;
    for (int e : res->generator_elements) gens.push_back(res->group.perm(e));
    REQUIRE(FiniteGroup(res->group.degree(), gens).order() == c.order);
  }
}

TEST_CASE("free group overflows the cap") {
  Presentation pres{1, {}};
  REQUIRE_FALSE(todd_coxeter(pres, 100).has_value());
}

TEST_CASE("empty presentation gives the trivial group") {
  auto res = todd_coxeter(Presentation{0, {}}, 10);
  REQUIRE(res.has_value());
  REQUIRE(res->group.order() == 1);
}

TEST_CASE("order two from a single relator") {
  auto res = todd_coxeter(Presentation{1, {{1, 1}}}, 100);
  REQUIRE(res.has_value());
  REQUIRE(res->group.order() == 2);
}

TEST_CASE("relators with inverses") {
  // <a, b | a b a^-1 b^-1, a^3, b^3> = Z/3 x Z/3
  Presentation pres{2, {{1, 2, -1, -2}, {1, 1, 1}, {2, 2, 2}}};
  auto res = todd_coxeter(pres, 1000);
  REQUIRE(res.has_value());
  REQUIRE(res->group.order() == 9);
}

TEST_CASE("cap boundary is exact enough to finish small groups") {
  // Z/6 needs exactly 6 live cosets; a generous cap well below the default
  auto res = todd_coxeter(Presentation{1, {Word(6, 1)}}, 20);
  REQUIRE(res.has_value());
  REQUIRE(res->group.order() == 6);
}
