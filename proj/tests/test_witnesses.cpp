#include "doctest.h"

#include <queue>

#include "ockham/classifier.hpp"
#include "ockham/duality.hpp"
#include "ockham/morphisms.hpp"
#include "ockham/piggyback.hpp"
#include "ockham/relations.hpp"
#include "ockham/witnesses.hpp"

using namespace ockham;

namespace {

using Pairs = std::vector<std::vector<Elem>>;

Pairs strict_pairs(const Relation& r) {
  Pairs out;
  for (const auto& t : r.tuples())
    if (t[0] != t[1]) out.push_back(t);
  return out;
}

// Distance in the comparability graph of the order.
std::size_t distance(const Structure& s, Elem from, Elem to) {
  const auto& leq = s.rel("leq");
  std::vector<std::size_t> dist(s.size(), SIZE_MAX);
  std::queue<Elem> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    Elem a = q.front();
    q.pop();
    for (Elem b = 0; b < Elem(s.size()); ++b)
      if (dist[b] == SIZE_MAX && (leq.contains(std::vector<Elem>{a, b}) || leq.contains(std::vector<Elem>{b, a}))) {
        dist[b] = dist[a] + 1;
        q.push(b);
      }
  }
  return dist[to];
}

OckhamAlgebra boolean_square() {
  return algebra_from_order(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3, 2, 1, 0});
}

}  // namespace

TEST_CASE("fixed alter egos and bridges") {
  auto k = witness_catalog("kleene_ego");
  CHECK(k.labels() == std::vector<std::string>{"0", "a", "1"});
  CHECK(strict_pairs(k.rel("leq")) == Pairs{{0, 1}, {2, 1}});
  CHECK(k.rel("s") == Relation::from_tuples(3, 1, {{0}, {2}}));

  auto b1 = witness_catalog("gen1_bridge");
  CHECK(strict_pairs(b1.rel("leq")) == Pairs{{0, 1}, {2, 1}});
  CHECK(b1.rel("s") == Relation::from_tuples(3, 1, {{0}}));

  auto a2 = witness_catalog("a2_ego");
  CHECK(a2.labels() == std::vector<std::string>{"0", "a", "b", "1"});
  CHECK(strict_pairs(a2.rel("leq")) == Pairs{{0, 1}, {2, 3}});
  CHECK(a2.rel("s") == Relation::from_tuples(4, 1, {{0}, {3}}));

  auto a56 = witness_catalog("a56_ego");
  auto extra = strict_pairs(a56.rel("tri"));
  CHECK(extra == Pairs{{0, 1}, {1, 0}, {3, 2}});
  CHECK(strict_pairs(a56.rel("leq")) == Pairs{{0, 1}, {3, 2}});

  auto b2 = witness_catalog("gen2_bridge");
  CHECK(b2.size() == 4);
  CHECK(b2.labels() == std::vector<std::string>{"0", "a", "1", "b"});
  CHECK(strict_pairs(b2.rel("tri")) == Pairs{{0, 1}, {1, 0}, {2, 3}});

  CHECK_THROWS_AS(witness_catalog("nope"), StructuralError);
  CHECK_THROWS_AS(witness_algebra("nope"), StructuralError);
}

TEST_CASE("host algebras") {
  CHECK(is_alter_ego(witness_algebra("kleene"), witness_catalog("kleene_ego")));
  CHECK(is_alter_ego(witness_algebra("a2"), witness_catalog("a2_ego")));
  CHECK(is_alter_ego(witness_algebra("a5"), witness_catalog("a56_ego")));
  CHECK(is_alter_ego(witness_algebra("a6"), witness_catalog("a56_ego")));

  CHECK(isomorphic(dual_algebra(catalog_space(CatalogKind::Y3)), witness_algebra("kleene")).has_value());
  CHECK(isomorphic(dual_algebra(catalog_space(CatalogKind::Y2)), witness_algebra("a2")).has_value());
  CHECK(isomorphic(dual_algebra(catalog_space(CatalogKind::Y5)), witness_algebra("a5")).has_value());
  CHECK(isomorphic(dual_algebra(catalog_space(CatalogKind::Y6)), witness_algebra("a6")).has_value());
  CHECK(witness_algebra("a5").neg_map() == std::vector<Elem>{3, 3, 0, 0});
  CHECK(witness_algebra("a6").neg_map() == std::vector<Elem>{3, 3, 1, 0});
  CHECK(isomorphic(dual_space(witness_algebra("a2")), catalog_space(CatalogKind::Y2)).has_value());

  CHECK(isomorphic(dual_algebra(catalog_space(CatalogKind::Y1)), boolean_square()).has_value());
  auto y4 = dual_algebra(catalog_space(CatalogKind::Y4));
  CHECK(y4.size() == 4);
  auto pair = non_permuting_pair(y4);
  REQUIRE(pair.has_value());
  CHECK(pair->first != pair->second);
  CHECK_FALSE(non_permuting_pair(boolean_square()).has_value());
}

TEST_CASE("congruences") {
  // Every congruence of the 2-element Boolean algebra is trivial or total.
  auto two = algebra_from_order(2, {{0, 1}}, {1, 0});
  CHECK(congruences(two) == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
  CHECK(congruences(boolean_square()).size() == 4);
  for (const auto& c : congruences(witness_algebra("kleene"))) {
    CHECK(c.size() == 3);
    CHECK(c[0] == 0);
  }
  // Simple: collapsing 0 with a forces 1 with a.
  CHECK(congruences(witness_algebra("kleene")).size() == 2);
}

TEST_CASE("crown and fence families") {
  auto c2 = family_member(Family::Crown, 2);
  CHECK(c2.size() == 4);
  CHECK(strict_pairs(c2.rel("leq")) == Pairs{{0, 1}, {0, 3}, {2, 1}, {2, 3}});
  CHECK(c2.rel("s") == Relation::from_tuples(4, 1, {{0}}));
  for (std::size_t n : {2, 3, 4}) {
    auto c = family_member(Family::Crown, n);
    CHECK(c.size() == 2 * n);
    CHECK(distance(c, 0, Elem(n)) == n);
  }
  auto f1 = family_member(Family::Fence, 1);
  CHECK(f1.size() == 3);
  CHECK(strict_pairs(f1.rel("leq")) == Pairs{{0, 1}, {2, 1}});
  // L = {0, 2}, U = {1}: tri = L² ∪ U² ∪ L×U.
  CHECK(f1.rel("tri") == Relation::from_tuples(3, 2, {{0, 0}, {0, 2}, {2, 0}, {2, 2}, {1, 1}, {0, 1}, {2, 1}}));
  auto f2 = family_member(Family::Fence, 2);
  CHECK(f2.size() == 5);
  CHECK(distance(f2, 0, 4) == 4);
  CHECK_THROWS_AS(family_member(Family::Crown, 1), StructuralError);
  CHECK_THROWS_AS(family_member(Family::Fence, 0), StructuralError);

  for (std::size_t n : {2, 3}) CHECK(isp_member(family_member(Family::Crown, n), family_bridge(Family::Crown)).member);
  for (std::size_t n : {1, 2, 3}) CHECK(isp_member(family_member(Family::Fence, n), family_bridge(Family::Fence)).member);
}

TEST_CASE("psi maps are not morphisms, but their restrictions are") {
  CHECK(psi_map(Family::Crown, 2) == Map{0, 0, 2, 0});
  auto crown_bad = first_violation(family_member(Family::Crown, 2), family_bridge(Family::Crown), psi_map(Family::Crown, 2));
  REQUIRE(crown_bad.has_value());
  CHECK(crown_bad->find("leq") != std::string::npos);

  CHECK(psi_map(Family::Fence, 1) == Map{3, 3, 2});
  auto fence_bad = first_violation(family_member(Family::Fence, 1), family_bridge(Family::Fence), psi_map(Family::Fence, 1));
  REQUIRE(fence_bad.has_value());
  CHECK(fence_bad->find("tri") != std::string::npos);
  CHECK(fence_bad->find("(0,2)") != std::string::npos);

  for (std::size_t n : {2, 3, 4}) {
    auto x = family_member(Family::Crown, n);
    auto psi = psi_map(Family::Crown, n);
    CHECK_FALSE(is_morphism(x, family_bridge(Family::Crown), psi));
    std::vector<Elem> rest;
    for (Elem e = 0; e < Elem(x.size()); ++e)
      if (e != Elem(n)) rest.push_back(e);
    auto sub = induced_substructure(x, rest);
    Map restricted;
    for (Elem e : sub.index_map) restricted.push_back(psi[e]);
    CHECK(is_morphism(sub.structure, family_bridge(Family::Crown), restricted));
  }
  for (std::size_t n : {1, 2, 3}) {
    auto x = family_member(Family::Fence, n);
    auto psi = psi_map(Family::Fence, n);
    CHECK_FALSE(is_morphism(x, family_bridge(Family::Fence), psi));
    for (Elem drop : {Elem(0), Elem(2 * n)}) {
      std::vector<Elem> rest;
      for (Elem e = 0; e < Elem(x.size()); ++e)
        if (e != drop) rest.push_back(e);
      auto sub = induced_substructure(x, rest);
      Map restricted;
      for (Elem e : sub.index_map) restricted.push_back(psi[e]);
      CHECK(is_morphism(sub.structure, family_bridge(Family::Fence), restricted));
    }
  }
}

TEST_CASE("bridge embeddings") {
  auto bridge = witness_catalog("gen1_bridge");
  auto into_k = embedding_check(bridge, witness_catalog("kleene_ego"), {{0, 0}, {1, 1}, {2, 1}});
  CHECK(into_k.ok);
  CHECK(into_k.violation.empty());
  CHECK(embedding_check(bridge, witness_catalog("a2_ego"), {{0, 3}, {1, 3}, {1, 2}}).ok);
  CHECK(embedding_check(witness_catalog("gen2_bridge"), witness_catalog("a56_ego"), {{0}, {1}, {3}, {2}}).ok);

  auto constant = embedding_check(bridge, witness_catalog("kleene_ego"), {{0, 0}, {0, 0}, {0, 0}});
  CHECK_FALSE(constant.ok);
  CHECK_FALSE(constant.violation.empty());
  // Injective and preserving but not reflecting s.
  auto loose = embedding_check(bridge, witness_catalog("kleene_ego"), {{0, 0}, {1, 1}, {2, 2}});
  CHECK_FALSE(loose.ok);
}

TEST_CASE("infinitude hypothesis") {
  auto kleene = witness_catalog("kleene_ego");
  auto a56 = witness_catalog("a56_ego");
  auto crown = infinitude_hypothesis_check(Family::Crown, kleene, 2, 3);
  CHECK(crown.holds);
  CHECK(crown.omegas > 0);
  CHECK(is_morphism(family_bridge(Family::Crown), kleene, crown.rho));
  auto fence = infinitude_hypothesis_check(Family::Fence, a56, 1, 2);
  CHECK(fence.holds);
  CHECK(infinitude_hypothesis_check(Family::Crown, witness_catalog("a2_ego"), 2, 3).holds);
  CHECK(infinitude_hypothesis_check(Family::Crown, kleene, 2, 4).holds);
  CHECK(infinitude_hypothesis_check(Family::Fence, a56, 1, 3).holds);

  auto same = infinitude_hypothesis_check(Family::Crown, kleene, 3, 3);
  CHECK_FALSE(same.holds);
  CHECK_FALSE(same.detail.empty());
}

TEST_CASE("growth evidence") {
  auto kleene = witness_catalog("kleene_ego");
  auto g = growth_evidence(Family::Crown, kleene, 3);
  REQUIRE(g.relations.size() == 2);
  CHECK(g.relations[0].arity() == 4);
  CHECK(g.relations[1].arity() == 6);
  CHECK(g.pairwise_inequivalent);
  CHECK_FALSE(equivalent(g.relations[0], g.relations[1]));
  CHECK(equivalent(g.relations[0], g.relations[0]));
  CHECK(is_compatible(witness_algebra("kleene"), g.relations[1]));

  auto a2 = growth_evidence(Family::Crown, witness_catalog("a2_ego"), 3);
  CHECK(a2.pairwise_inequivalent);
}
