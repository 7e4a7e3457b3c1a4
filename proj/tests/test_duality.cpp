#include "doctest.h"
#include "oracle.hpp"

#include <set>

#include "ockham/classifier.hpp"
#include "ockham/duality.hpp"
#include "ockham/morphisms.hpp"
#include "ockham/piggyback.hpp"
#include "ockham/relations.hpp"
#include "ockham/witnesses.hpp"

using namespace ockham;

namespace {

std::vector<OckhamSpace> all_spaces(std::size_t n) {
  std::vector<OckhamSpace> out;
  for (const auto& le : oracle::labelled_orders(n))
    oracle::for_each_map(n, n, [&](const Map& g) {
      if (oracle::is_ockham_space(n, le, g)) out.push_back(OckhamSpace::make(n, oracle::pairs_of(n, le), g));
    });
  return out;
}

std::vector<OckhamSpace> catalog_spaces(std::size_t max_m) {
  std::vector<OckhamSpace> out;
  for (std::size_t m = 1; m <= max_m; m += 2)
    for (auto k : {CatalogKind::C, CatalogKind::D, CatalogKind::Dop}) out.push_back(catalog_space(k, m));
  for (auto k : obstacle_kinds()) out.push_back(catalog_space(k));
  return out;
}

// The subalgebra of a x b carried by a binary compatible relation, elements in relation order.
OckhamAlgebra relation_algebra(const OckhamAlgebra& a, const OckhamAlgebra& b, const Relation& r) {
  auto tuples = r.tuples();
  auto index = [&](Elem x, Elem y) {
    return Elem(std::find(tuples.begin(), tuples.end(), std::vector<Elem>{x, y}) - tuples.begin());
  };
  RawAlgebra raw;
  raw.size = tuples.size();
  raw.join.assign(raw.size, std::vector<Elem>(raw.size));
  raw.meet = raw.join;
  for (std::size_t i = 0; i < raw.size; ++i) {
    const auto& s = tuples[i];
    raw.neg.push_back(index(a.neg(s[0]), b.neg(s[1])));
    for (std::size_t j = 0; j < raw.size; ++j) {
      const auto& t = tuples[j];
      raw.join[i][j] = index(a.join(s[0], t[0]), b.join(s[1], t[1]));
      raw.meet[i][j] = index(a.meet(s[0], t[0]), b.meet(s[1], t[1]));
    }
  }
  raw.bot = index(a.bot(), b.bot());
  raw.top = index(a.top(), b.top());
  return OckhamAlgebra::from_raw(raw);
}

Map projection(const Relation& r, int coord) {
  Map p;
  for (const auto& t : r.tuples()) p.push_back(t[coord]);
  return p;
}

std::vector<Map> algebra_homs(const OckhamAlgebra& a, const OckhamAlgebra& b, HomMode mode = HomMode::All) {
  return hom_search(algebra_structure(a), algebra_structure(b), mode);
}

// A in HS(B) for algebras, by explicit subalgebra enumeration.
bool algebra_divisor(const OckhamAlgebra& a, const OckhamAlgebra& b) {
  const std::size_t n = b.size();
  auto sa = algebra_structure(a);
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    if (!(mask >> b.bot() & 1) || !(mask >> b.top() & 1)) continue;
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      if (!(mask >> b.neg(Elem(x)) & 1)) closed = false;
      for (std::size_t y = 0; y < n && closed; ++y)
        if ((mask >> y & 1) && (!(mask >> b.join(Elem(x), Elem(y)) & 1) || !(mask >> b.meet(Elem(x), Elem(y)) & 1)))
          closed = false;
    }
    if (!closed) continue;
    std::vector<Elem> subset;
    for (std::size_t e = 0; e < n; ++e)
      if (mask >> e & 1) subset.push_back(Elem(e));
    if (subset.size() < a.size()) continue;
    auto z = induced_substructure(algebra_structure(b), subset).structure;
    if (first_hom(z, sa, HomMode::Surjective)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("dual objects of the small examples") {
  auto s1 = dual_algebra(catalog_space(CatalogKind::D, 1));
  CHECK(dual_algebra_points(catalog_space(CatalogKind::D, 1)) == std::vector<std::string>{"00", "01", "11"});
  CHECK(s1.neg_map() == std::vector<Elem>{2, 0, 0});
  CHECK(isomorphic(dual_space(s1), catalog_space(CatalogKind::D, 1)).has_value());

  auto boolean2 = dual_algebra(catalog_space(CatalogKind::C, 1));
  CHECK(boolean2.size() == 2);
  CHECK(boolean2.neg_map() == std::vector<Elem>{1, 0});
  CHECK(isomorphic(dual_space(boolean2), catalog_space(CatalogKind::C, 1)).has_value());

  auto k_d3 = dual_algebra(catalog_space(CatalogKind::D, 3));
  CHECK(dual_space(k_d3).size() == 4);
  CHECK(dual_algebra_points(catalog_space(CatalogKind::D, 3)) ==
        std::vector<std::string>{"0000", "0001", "0010", "0011", "0100", "0101", "0110", "0111", "1001", "1011",
                                 "1101", "1111"});

  auto h_a2 = dual_space(witness_algebra("a2"));
  CHECK(isomorphic(h_a2, catalog_space(CatalogKind::Y2)).has_value());
}

TEST_CASE("dual points agree with brute-force enumeration") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : all_spaces(n)) {
      auto pts = dual_algebra_points(x);
      REQUIRE(pts == oracle::up_set_strings(x));
      auto a = dual_algebra(x);
      CHECK(validate_ockham_algebra(a.to_raw()).ok());
      CHECK(dual_space_points(a) == oracle::filter_strings(a));
    }
}

TEST_CASE("round trips on the catalog") {
  for (const auto& x : catalog_spaces(5)) {
    auto rt = round_trip(x);
    CHECK(isomorphic(rt.double_dual, x).has_value());
    auto a = dual_algebra(x);
    auto art = round_trip(a);
    CHECK(isomorphic(art.double_dual, a).has_value());
  }
  // Unit spot check e(a)(x) = x(a) on S1.
  auto s1 = dual_algebra(catalog_space(CatalogKind::D, 1));
  auto h = dual_space(s1);
  auto rt = round_trip(s1);
  auto kh_points = dual_algebra_points(h);
  for (Elem a = 0; a < Elem(s1.size()); ++a) {
    const std::string& alpha = kh_points[rt.unit[a]];
    for (Elem x = 0; x < Elem(h.size()); ++x) CHECK(alpha[x] == h.label(x)[a]);
  }
}

TEST_CASE("dual morphisms") {
  for (std::size_t m : {1, 3, 5}) {
    auto d = catalog_space(CatalogKind::D, m);
    auto kg = dual_of_space_morphism(d, d, d.g_map());
    CHECK(kg == alternating_alter_ego(m).structure.op("u"));
    Map id(d.size());
    for (std::size_t e = 0; e < d.size(); ++e) id[e] = Elem(e);
    auto kid = dual_of_space_morphism(d, d, id);
    for (std::size_t e = 0; e < kid.size(); ++e) CHECK(kid[e] == Elem(e));
  }
  // Contravariant functoriality on endomorphisms of K(D_3).
  auto a = dual_algebra(catalog_space(CatalogKind::D, 3));
  auto endos = algebra_homs(a, a);
  REQUIRE(endos.size() >= 2);
  for (const auto& p : endos)
    for (const auto& q : endos) {
      Map qp(a.size());
      for (std::size_t e = 0; e < a.size(); ++e) qp[e] = q[p[e]];
      auto hp = dual_of_algebra_morphism(a, a, p), hq = dual_of_algebra_morphism(a, a, q);
      auto hqp = dual_of_algebra_morphism(a, a, qp);
      for (std::size_t x = 0; x < hqp.size(); ++x) CHECK(hqp[x] == hp[hq[x]]);
    }

  // Diagonal S1 -> S1 x S1 is injective, so its dual is surjective.
  auto s1 = dual_algebra(catalog_space(CatalogKind::D, 1));
  auto full = Relation::full(3, 2);
  auto sq = relation_algebra(s1, s1, full);
  Map phi;
  for (Elem e = 0; e < 3; ++e) phi.push_back(Elem(full.encode(std::vector<Elem>{e, e})));
  CHECK(is_algebra_morphism(s1, sq, phi));
  CHECK(is_surjective(dual_of_algebra_morphism(s1, sq, phi), dual_space(s1).size()));
}

TEST_CASE("injective iff dual surjective, surjective iff dual order-embedding") {
  std::vector<OckhamAlgebra> algs;
  for (const auto& x : catalog_spaces(3)) {
    auto a = dual_algebra(x);
    if (a.size() <= 12) algs.push_back(a);
  }
  std::size_t homs = 0;
  for (const auto& a : algs)
    for (const auto& b : algs)
      for (const auto& phi : algebra_homs(a, b)) {
        auto h = dual_of_algebra_morphism(a, b, phi);
        const std::size_t ha = dual_space(a).size();
        std::set<Elem> img(phi.begin(), phi.end());
        const bool injective = img.size() == a.size();
        const bool surjective = img.size() == b.size();
        std::set<Elem> himg(h.begin(), h.end());
        CHECK(injective == (himg.size() == ha));
        auto hb = dual_space(b), hsa = dual_space(a);
        bool order_embedding = true;
        for (Elem x = 0; x < Elem(hb.size()); ++x)
          for (Elem y = 0; y < Elem(hb.size()); ++y)
            if (hb.leq(x, y) != hsa.leq(h[x], h[y])) order_embedding = false;
        CHECK(surjective == order_embedding);
        ++homs;
      }
  CHECK(homs > 50);
}

TEST_CASE("projections of subalgebras of squares are jointly surjective on duals") {
  for (const char* name : {"kleene", "s1"}) {
    OckhamAlgebra b = std::string(name) == "kleene" ? witness_algebra("kleene")
                                                    : dual_algebra(catalog_space(CatalogKind::D, 1));
    for (const auto& r : enumerate_compatible(as_fin_algebra(b), 2)) {
      auto ra = relation_algebra(b, b, r);
      auto h1 = dual_of_algebra_morphism(ra, b, projection(r, 0));
      auto h2 = dual_of_algebra_morphism(ra, b, projection(r, 1));
      std::set<Elem> covered(h1.begin(), h1.end());
      covered.insert(h2.begin(), h2.end());
      CHECK(covered.size() == dual_space(ra).size());
    }
  }
}

TEST_CASE("binary compatible relations are recovered from their duals") {
  for (auto [kind, m] : std::vector<std::pair<CatalogKind, std::size_t>>{
           {CatalogKind::C, 1}, {CatalogKind::C, 3}, {CatalogKind::D, 1}}) {
    auto x = catalog_space(kind, m);
    auto a = dual_algebra(x);
    auto a_points = dual_algebra_points(x);
    auto counit = round_trip(x).counit;
    auto rels = enumerate_compatible(as_fin_algebra(a), 2);
    CHECK_FALSE(rels.empty());
    for (const auto& r : rels) {
      auto ra = relation_algebra(a, a, r);
      auto hr = dual_space(ra);
      Map phi[2];
      for (int i = 0; i < 2; ++i) {
        auto hp = dual_of_algebra_morphism(ra, a, projection(r, i));
        for (std::size_t e = 0; e < x.size(); ++e) phi[i].push_back(hp[counit[e]]);
      }
      std::set<std::vector<Elem>> rebuilt;
      for (const auto& alpha : dual_algebra_points(hr)) {
        std::vector<Elem> pair;
        for (int i = 0; i < 2; ++i) {
          std::string s;
          for (std::size_t e = 0; e < x.size(); ++e) s += alpha[phi[i][e]];
          pair.push_back(Elem(std::find(a_points.begin(), a_points.end(), s) - a_points.begin()));
        }
        rebuilt.insert(pair);
      }
      auto expected = r.tuples();
      CHECK(std::vector<std::vector<Elem>>(rebuilt.begin(), rebuilt.end()) == expected);
    }
  }
}

TEST_CASE("divisors transfer across the duality") {
  std::vector<std::pair<OckhamSpace, OckhamAlgebra>> objs;
  for (const auto& x : catalog_spaces(3)) {
    auto a = dual_algebra(x);
    if (a.size() <= 12) objs.emplace_back(x, a);
  }
  for (const auto& [x, a] : objs)
    for (const auto& [y, b] : objs) CHECK(algebra_divisor(a, b) == divisor(x, y).has_value());
}

TEST_CASE("caps guard the enumerations") {
  CHECK_THROWS_AS(dual_algebra(catalog_space(CatalogKind::C, 5), Caps::parse("space=3")), ResourceError);
  CHECK_THROWS_AS(dual_space(witness_algebra("a2"), Caps::parse("algebra=3")), ResourceError);
}
