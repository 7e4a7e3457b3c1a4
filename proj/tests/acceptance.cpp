#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"

#include "ockham/classifier.hpp"
#include "ockham/duality.hpp"
#include "ockham/morphisms.hpp"
#include "ockham/piggyback.hpp"
#include "ockham/relations.hpp"
#include "ockham/witnesses.hpp"

using namespace ockham;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int index, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note << " exception: " << e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = elapsed < budget_seconds;
  bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("AC%-2d %s  %-44s %8.3fs / %gs  %s%s\n", index, pass ? "PASS" : "FAIL", title, elapsed, budget_seconds,
              in_time ? "" : "[over budget] ", out.note.str().c_str());
  std::fflush(stdout);
}

std::set<std::string> atom_strings(const CaFormula& f) {
  std::set<std::string> out;
  for (const auto& atom : f.atoms) {
    CaFormula single;
    single.arity = f.arity;
    single.atoms = {atom};
    out.insert(single.to_string("s"));
  }
  return out;
}

// Isomorphism-class representatives among labelled spaces, bucketed by a cheap invariant.
std::vector<OckhamSpace> spaces_up_to_iso(std::size_t n) {
  std::map<std::vector<std::size_t>, std::vector<OckhamSpace>> buckets;
  std::vector<OckhamSpace> reps;
  for (auto& x : oracle::all_spaces(n)) {
    std::vector<std::size_t> key;
    for (Elem a = 0; a < Elem(n); ++a) {
      std::size_t down = 0, up = 0;
      for (Elem b = 0; b < Elem(n); ++b) {
        down += x.leq(b, a);
        up += x.leq(a, b);
      }
      key.push_back(down * 64 + up * 8 + (x.g(a) == a));
    }
    std::sort(key.begin(), key.end());
    auto& bucket = buckets[key];
    bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const OckhamSpace& y) { return isomorphic(x, y); });
    if (!seen) {
      bucket.push_back(x);
      reps.push_back(x);
    }
  }
  return reps;
}

bool evidence_verifies(const OckhamSpace& x, const Verdict& v) {
  if (v.finitely_many) {
    if (!v.finite || v.infinite) return false;
    auto target = catalog_space(v.finite->kind, v.finite->m);
    return is_embedding(to_structure(x), to_structure(target), v.finite->isomorphism) &&
           is_surjective(v.finite->isomorphism, target.size());
  }
  if (!v.infinite || v.finite) return false;
  const auto& w = v.infinite->witness;
  auto sub = induced_subspace(x, w.subset).space;
  auto obstacle = catalog_space(v.infinite->obstacle);
  return is_morphism(to_structure(sub), to_structure(obstacle), w.surjection) &&
         is_surjective(w.surjection, obstacle.size());
}

Structure ordered_u_structure(std::size_t n, const std::vector<std::pair<Elem, Elem>>& strict, const Map& u) {
  std::vector<std::vector<Elem>> tuples;
  for (Elem a = 0; a < Elem(n); ++a) tuples.push_back({a, a});
  for (auto [a, b] : strict) tuples.push_back({a, b});
  return Structure(alternating_alter_ego(1).structure.signature(), n, {u}, {Relation::from_tuples(n, 2, tuples)});
}

std::vector<std::vector<Elem>> generating_sets(const Structure& x) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = x.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Elem> s;
    for (std::size_t e = 0; e < n; ++e)
      if ((mask >> e) & 1) s.push_back(Elem(e));
    if (generates(x, s)) out.push_back(s);
  }
  return out;
}

std::vector<Elem> diagonal(const Relation& r) {
  std::vector<Elem> out;
  for (Elem a = 0; a < Elem(r.carrier()); ++a)
    if (r.contains(std::vector<Elem>(r.arity(), a))) out.push_back(a);
  return out;
}

Elem by_label(const Structure& s, const std::string& label) {
  for (Elem e = 0; e < Elem(s.size()); ++e)
    if (s.label(e) == label) return e;
  throw StructuralError("no element labelled " + label);
}

std::set<Map> powers_of(const Map& u) {
  std::set<Map> out;
  Map p(u.size());
  std::iota(p.begin(), p.end(), 0);
  while (out.insert(p).second)
    for (auto& e : p) e = u[e];
  return out;
}

OckhamAlgebra boolean_square() { return algebra_from_order(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3, 2, 1, 0}); }

}  // namespace

int main() {
  criterion(1, "two-element lattice: leq vs rho, census", 1.0, [](Outcome& o) {
    auto leq = Relation::from_tuples(2, 2, {{0, 0}, {0, 1}, {1, 1}});
    auto rho = Relation::from_tuples(2, 4, {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}});
    auto lattice = two_element_lattice();
    o.expect(is_compatible(lattice, leq) && is_compatible(lattice, rho), "both relations compatible");
    o.expect(equivalent(leq, rho), "leq and rho equivalent");
    auto leq_from_rho = ca_definable(leq, rho);
    auto rho_from_leq = ca_definable(rho, leq);
    o.expect(leq_from_rho && rho_from_leq, "both directions definable");
    if (!o.ok) return;
    auto short_leq = minimize_formula(*leq_from_rho, leq, rho);
    auto short_rho = minimize_formula(*rho_from_leq, rho, leq);
    o.expect(atom_strings(short_leq) == std::set<std::string>{"s(x1,x1,x2,x2)"}, "leq = rho(a,a,b,b)");
    o.expect(atom_strings(short_rho) == std::set<std::string>{"s(x1,x2)", "s(x1,x3)", "x3=x4"},
             "rho = a<=b & a<=c & c=d");
    o.expect(short_leq.evaluate(rho) == leq && short_rho.evaluate(leq) == rho, "formulas evaluate back");
    auto classes = census(lattice, 3);
    o.expect(classes.size() == 2, "census has 2 classes");
    std::set<Relation> reps;
    for (const auto& c : classes) reps.insert(c.representative);
    o.expect(reps == std::set<Relation>{Relation::full(2, 1), leq}, "representatives are {0,1} and leq");
    o.note << "classes=" << classes.size() << " rho<-leq: " << short_rho.to_string("s");
  });

  criterion(2, "duality goldens and round trips", 10.0, [](Outcome& o) {
    o.expect(dual_algebra_points(catalog_space(CatalogKind::D, 1)) == std::vector<std::string>{"00", "01", "11"},
             "K(D1) strings");
    std::vector<std::string> d3{"0000", "0001", "0010", "0011", "0100", "0101",
                                "0110", "0111", "1001", "1011", "1101", "1111"};
    o.expect(dual_algebra_points(catalog_space(CatalogKind::D, 3)) == d3, "K(D3) strings");
    std::vector<OckhamSpace> spaces;
    for (auto kind : {CatalogKind::C, CatalogKind::D, CatalogKind::Dop})
      for (std::size_t m : {1, 3, 5}) spaces.push_back(catalog_space(kind, m));
    for (auto kind : obstacle_kinds()) spaces.push_back(catalog_space(kind));
    for (const auto& x : spaces) {
      auto there = round_trip(x);
      o.expect(isomorphic(there.double_dual, x).has_value(), "H(K(X)) iso X");
      auto a = dual_algebra(x);
      auto back = round_trip(a);
      o.expect(isomorphic(back.double_dual, a).has_value(), "K(H(A)) iso A");
      o.expect(isomorphic(dual_space(a), x).has_value(), "H(A) iso X");
    }
    o.note << "spaces=" << spaces.size() << " |K(D3)|=" << d3.size();
  });

  criterion(3, "finite-relations criteria agree, size <= 4", 300.0, [](Outcome& o) {
    std::size_t total = 0, finite = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& x : spaces_up_to_iso(n)) {
        ++total;
        bool by_catalog = catalog_match(x).has_value();
        bool by_obstacles = std::none_of(obstacle_kinds().begin(), obstacle_kinds().end(),
                                         [&](CatalogKind k) { return divisor(catalog_space(k), x).has_value(); });
        o.expect(by_catalog == by_obstacles, "criteria agree");
        auto verdict = classify_space(x);
        o.expect(verdict.finitely_many == by_catalog, "verdict matches");
        o.expect(evidence_verifies(x, verdict), "evidence re-verifies");
        finite += by_catalog;
      }
    o.note << "spaces=" << total << " finitely_many=" << finite;
  });

  criterion(4, "quasi-primality", 300.0, [](Outcome& o) {
    o.expect(is_quasiprimal(dual_algebra(catalog_space(CatalogKind::C, 1))), "K(C1) quasiprimal");
    o.expect(is_quasiprimal(dual_algebra(catalog_space(CatalogKind::C, 3))), "K(C3) quasiprimal");
    o.expect(!is_quasiprimal(alternating_alter_ego(1).algebra), "S1 not quasiprimal");
    o.expect(!is_quasiprimal(dual_algebra(catalog_space(CatalogKind::Y3))), "K(Y3) not quasiprimal");
    o.expect(!is_quasiprimal(dual_algebra(catalog_space(CatalogKind::Y2))), "K(Y2) not quasiprimal");
    std::size_t total = 0, positive = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& x : spaces_up_to_iso(n)) {
        auto match = catalog_match(x);
        bool expected = match && match->kind == CatalogKind::C && match->m % 2 == 1;
        bool got = is_quasiprimal(dual_algebra(x));
        o.expect(got == expected, "criterion agrees with dual iso C_m");
        ++total;
        positive += got;
      }
    o.note << "algebras=" << total << " quasiprimal=" << positive;
  });

  criterion(5, "alternating alter egos S1 and S3", 10.0, [](Outcome& o) {
    auto s1 = alternating_alter_ego(1);
    o.expect(s1.structure.labels() == std::vector<std::string>{"00", "01", "11"}, "S1 labels");
    o.expect(s1.structure.op("u") == Map{0, 2, 2}, "S1 u");
    o.expect(s1.structure.rel("leq") == Relation::from_tuples(3, 2, {{0, 0}, {1, 1}, {2, 2}, {1, 2}}), "S1 order");

    auto s3 = alternating_alter_ego(3);
    const auto& m = s3.structure;
    o.expect(m.labels() == std::vector<std::string>{"0000", "0001", "0010", "0011", "0100", "0101", "0110", "0111",
                                                    "1001", "1011", "1101", "1111"},
             "S3 labels");
    const std::vector<std::pair<std::string, std::string>> arrows{
        {"0000", "0000"}, {"0111", "1111"}, {"1111", "1111"}, {"1001", "0010"}, {"0010", "0100"}, {"0001", "0010"},
        {"0100", "1001"}, {"1101", "1011"}, {"0101", "1011"}, {"1011", "0110"}, {"0011", "0110"}, {"0110", "1101"}};
    for (const auto& [from, to] : arrows) o.expect(m.label(m.op("u")[by_label(m, from)]) == to, "S3 u " + from);
    std::set<std::pair<std::string, std::string>> strict;
    for (const auto& t : m.rel("leq").tuples())
      if (t[0] != t[1]) strict.emplace(m.label(t[0]), m.label(t[1]));
    o.expect(strict == std::set<std::pair<std::string, std::string>>{
                           {"0111", "1111"}, {"0001", "1001"}, {"0101", "1101"}, {"0011", "1011"}},
             "S3 order");

    for (std::size_t k : {1, 3}) {
      auto ego = alternating_alter_ego(k);
      o.expect(is_alter_ego(ego.algebra, ego.structure), "is alter ego");
      auto as = algebra_structure(ego.algebra);
      auto endos = hom_search(as, as);
      o.expect(std::set<Map>(endos.begin(), endos.end()) == powers_of(ego.structure.op("u")), "End = powers of u");
    }
  });

  criterion(6, "Z-structure embeddings", 10.0, [](Outcome& o) {
    for (std::size_t m : {1, 3}) {
      auto sm = alternating_alter_ego(m).structure;
      for (std::size_t k = 0; k <= m; ++k) {
        if (k != 0 && m % k != 0) continue;
        auto z = z_structure(k, m);
        o.expect(is_embedding(z.structure, sm, z.embedding), "Z embeds");
      }
    }
    auto s3 = alternating_alter_ego(3).structure;
    auto z = z_structure(3, 3);
    std::set<std::string> images;
    for (Elem e : z.embedding) images.insert(s3.label(e));
    o.expect(images.count("1001") && images.count("0100") && images.count("0010"), "alpha images");
    Elem alpha0 = -1;
    for (Elem e = 0; e < Elem(z.structure.size()); ++e)
      if (s3.label(z.embedding[e]) == "1001") alpha0 = e;
    o.expect(alpha0 >= 0, "alpha0 present");
    if (alpha0 >= 0) {
      o.expect(s3.label(z.embedding[z.structure.op("u")[alpha0]]) == "0010", "u(alpha0) = alpha2 in Z");
      o.expect(s3.label(s3.op("u")[by_label(s3, "1001")]) == "0010", "u(alpha0) = alpha2 in S3");
    }
  });

  criterion(7, "intrinsic dual-class characterization", 600.0, [](Outcome& o) {
    auto s1 = alternating_alter_ego(1).structure;
    std::size_t total = 0, members = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& strict : posets_up_to_iso(n))
        oracle::for_each_map(n, n, [&](const Map& u) {
          auto x = ordered_u_structure(n, strict, u);
          auto rep = dual_class_member(x, 1);
          bool conditions = rep.order && rep.u_monotone && rep.u_extensive;
          o.expect(rep.member == conditions, "member flag matches conditions");
          o.expect(conditions == isp_member(x, s1).member, "conditions iff ISP(S1)");
          if (conditions)
            o.expect(rep.images_maximal && rep.maxima_periodic && rep.unique_maximal_above, "derived properties");
          ++total;
          members += conditions;
        });
    o.note << "structures=" << total << " members=" << members;
  });

  criterion(8, "normalization and census bound, m = 1", 600.0, [](Outcome& o) {
    auto ego = alternating_alter_ego(1).structure;
    std::size_t pairs = 0;
    for (const auto& x : connected_dual_class_members(1, 5))
      for (const auto& s : generating_sets(x)) {
        auto res = normalize(x, s, 1);
        o.expect(res.verified, "normalize verified");
        o.expect(dual_class_member(res.structure, 1).member, "result in dual class");
        o.expect(in_normal_form(res.structure, res.gens, 1), "eight forms");
        o.expect(equivalent(homset_relation(x, s, ego), homset_relation(res.structure, res.gens, ego)),
                 "homset relations equivalent");
        ++pairs;
      }
    auto bound = census_bound_check(1, 5);
    o.expect(bound.classes <= 8, "at most 8 classes");
    o.expect(bound.ok(), "census bound report ok");
    o.note << "normalized=" << pairs << " classes=" << bound.classes << " bound=" << bound.bound;
  });

  criterion(9, "infinitude evidence", 600.0, [](Outcome& o) {
    auto kleene = witness_catalog("kleene_ego");
    auto a56 = witness_catalog("a56_ego");
    auto growth = growth_evidence(Family::Crown, kleene, 3);
    o.expect(growth.relations.size() == 2, "r2 and r3 built");
    if (growth.relations.size() == 2) {
      const auto& a = growth.relations[0];
      const auto& b = growth.relations[1];
      bool forward = ca_definable(a, b).has_value();
      bool backward = ca_definable(b, a).has_value();
      o.expect(!(forward && backward), "r2 and r3 not interdefinable");
      o.expect(!equivalent(a, b), "r2 and r3 not equivalent");
    }
    o.expect(infinitude_hypothesis_check(Family::Crown, kleene, 2, 3).holds, "crown (2,3)");
    o.expect(infinitude_hypothesis_check(Family::Crown, kleene, 2, 4).holds, "crown (2,4)");
    o.expect(infinitude_hypothesis_check(Family::Fence, a56, 1, 2).holds, "fence (1,2)");
    o.expect(infinitude_hypothesis_check(Family::Fence, a56, 1, 3).holds, "fence (1,3)");
    auto bridge = witness_catalog("gen1_bridge");
    o.expect(embedding_check(bridge, kleene, {{0, 0}, {1, 1}, {2, 1}}).ok, "bridge into K^2");
    o.expect(embedding_check(bridge, witness_catalog("a2_ego"), {{0, 3}, {1, 3}, {1, 2}}).ok, "bridge into A2^2");
    o.expect(embedding_check(witness_catalog("gen2_bridge"), a56, {{0}, {1}, {3}, {2}}).ok, "bridge into A");
    o.expect(isomorphic(dual_algebra(catalog_space(CatalogKind::Y1)), boolean_square()).has_value(),
             "K(Y1) iso Boolean^2");
    auto pair = non_permuting_pair(dual_algebra(catalog_space(CatalogKind::Y4)));
    o.expect(pair.has_value(), "K(Y4) non-permuting pair");
  });

  criterion(10, "census forms cover S1 relations, arity <= 3", 900.0, [](Outcome& o) {
    auto ego = alternating_alter_ego(1);
    auto s1 = as_fin_algebra(ego.algebra);

    struct Candidate {
      Relation relation;
      std::size_t size;
    };
    std::map<std::vector<Elem>, std::vector<Candidate>> by_diagonal;
    std::set<Relation> distinct;
    std::size_t members = 0;
    for (const auto& x : dual_class_members(1, 6)) {
      ++members;
      for (const auto& s : generating_sets(x)) {
        auto h = homset_relation(x, s, ego.structure);
        if (distinct.insert(h).second) by_diagonal[diagonal(h)].push_back({h, x.size()});
      }
    }
    for (auto& [key, list] : by_diagonal)
      std::stable_sort(list.begin(), list.end(),
                       [](const Candidate& a, const Candidate& b) { return a.relation.arity() < b.relation.arity(); });

    std::vector<std::pair<Relation, Relation>> matched;  // compatible relation, its homset partner
    std::size_t relations = 0;
    for (std::size_t k = 1; k <= 3; ++k)
      for (const auto& r : enumerate_compatible(s1, k)) {
        ++relations;
        bool found = false;
        for (const auto& [known, partner] : matched)
          if (equivalent(r, known)) {
            found = true;
            break;
          }
        if (!found)
          for (const auto& c : by_diagonal[diagonal(r)])
            if (equivalent(r, c.relation)) {
              matched.emplace_back(r, c.relation);
              found = true;
              break;
            }
        o.expect(found, "relation of arity " + std::to_string(k) + " has a homset partner");
      }
    o.note << "relations=" << relations << " classes=" << matched.size() << " members=" << members
           << " homset_relations=" << distinct.size();
  });

  return failures == 0 ? 0 : 1;
}
