#include "ockham/classifier.hpp"

#include <algorithm>
#include <map>

#include "ockham/duality.hpp"
#include "ockham/relations.hpp"

namespace ockham {

namespace {

const std::map<CatalogKind, std::string>& names() {
  static const std::map<CatalogKind, std::string> m = {
      {CatalogKind::C, "C"},   {CatalogKind::D, "D"},       {CatalogKind::Dop, "Dop"},
      {CatalogKind::Y1, "Y1"}, {CatalogKind::Y2, "Y2"},     {CatalogKind::Y3, "Y3"},
      {CatalogKind::Y4, "Y4"}, {CatalogKind::Y4op, "Y4op"}, {CatalogKind::Y5, "Y5"},
      {CatalogKind::Y6, "Y6"}, {CatalogKind::Y6op, "Y6op"}};
  return m;
}

OckhamSpace chain3(std::vector<Elem> g) { return OckhamSpace::make(3, {{0, 1}, {1, 2}}, std::move(g)); }

bool leq_set(const OckhamSpace& x, Elem a, const std::vector<Elem>& set) {
  return std::any_of(set.begin(), set.end(), [&](Elem c) { return x.leq(a, c); });
}
bool geq_set(const OckhamSpace& x, Elem a, const std::vector<Elem>& set) {
  return std::any_of(set.begin(), set.end(), [&](Elem c) { return x.leq(c, a); });
}

InfiniteEvidence make_witness(const OckhamSpace& x, CatalogKind obstacle, const std::map<Elem, Elem>& assignment) {
  InfiniteEvidence ev;
  ev.obstacle = obstacle;
  for (auto [e, v] : assignment) {
    ev.witness.subset.push_back(e);
    ev.witness.surjection.push_back(v);
  }
  auto sub = induced_subspace(x, ev.witness.subset);
  auto target = to_structure(catalog_space(obstacle));
  auto zs = to_structure(sub.space);
  if (!is_morphism(zs, target, ev.witness.surjection) ||
      !is_surjective(ev.witness.surjection, target.size()))
    throw InternalError("constructed obstacle witness is not a surjective morphism onto " +
                        catalog_name(obstacle));
  return ev;
}

// Single odd cycle, one-generated case.
InfiniteEvidence one_generated_case(const OckhamSpace& x, const std::vector<Elem>& cyc) {
  std::vector<char> in_c(x.size(), 0);
  for (Elem c : cyc) in_c[c] = 1;
  Elem tail = -1;
  for (std::size_t e = 0; e < x.size(); ++e)
    if (!in_c[e] && in_c[x.g(Elem(e))]) { tail = Elem(e); break; }
  if (tail < 0) throw InternalError("one-generated space without a tail element");
  bool below = leq_set(x, tail, cyc), above = geq_set(x, tail, cyc);
  std::map<Elem, Elem> asg;
  if (!below && !above) {
    asg[tail] = 0;
    for (Elem c : cyc) asg[c] = 1;
    return make_witness(x, CatalogKind::Y2, asg);
  }
  Elem pre = -1;
  for (std::size_t e = 0; e < x.size(); ++e)
    if (x.g(Elem(e)) == tail) { pre = Elem(e); break; }
  if (pre < 0) throw InternalError("tail element has no predecessor");
  if (below) {
    asg[pre] = 2;
    asg[tail] = 0;
    for (Elem c : cyc) asg[c] = 1;
    return make_witness(x, CatalogKind::Y6, asg);
  }
  asg[pre] = 0;
  asg[tail] = 2;
  for (Elem c : cyc) asg[c] = 1;
  return make_witness(x, CatalogKind::Y6op, asg);
}

}  // namespace

std::string catalog_name(CatalogKind kind) { return names().at(kind); }

std::optional<CatalogKind> parse_catalog_kind(const std::string& name) {
  for (const auto& [k, n] : names())
    if (n == name) return k;
  return std::nullopt;
}

OckhamSpace catalog_space(CatalogKind kind, std::size_t m) {
  switch (kind) {
    case CatalogKind::C:
    case CatalogKind::D:
    case CatalogKind::Dop: {
      if (m % 2 == 0) throw StructuralError("catalog parameter m must be odd and positive");
      if (kind == CatalogKind::C) {
        std::vector<Elem> g(m);
        for (std::size_t i = 0; i < m; ++i) g[i] = Elem((i + 1) % m);
        return OckhamSpace::make(m, {}, g);
      }
      std::vector<Elem> g(m + 1);
      g[0] = 1;
      for (std::size_t i = 1; i <= m; ++i) g[i] = Elem(i == m ? 1 : i + 1);
      if (kind == CatalogKind::D) return OckhamSpace::make(m + 1, {{0, Elem(m)}}, g);
      return OckhamSpace::make(m + 1, {{Elem(m), 0}}, g);
    }
    case CatalogKind::Y1: return OckhamSpace::make(2, {}, {0, 1});
    case CatalogKind::Y2: return OckhamSpace::make(2, {}, {1, 1});
    case CatalogKind::Y3: return OckhamSpace::make(2, {{0, 1}}, {1, 0});
    case CatalogKind::Y4: return chain3({2, 2, 2});
    case CatalogKind::Y4op: return chain3({0, 0, 0});
    case CatalogKind::Y5: return chain3({1, 1, 1});
    case CatalogKind::Y6: return chain3({1, 1, 0});
    case CatalogKind::Y6op: return chain3({2, 1, 1});
  }
  throw StructuralError("unknown catalog kind");
}

const std::vector<CatalogKind>& obstacle_kinds() {
  static const std::vector<CatalogKind> kinds = {CatalogKind::Y1, CatalogKind::Y2,   CatalogKind::Y3,
                                                 CatalogKind::Y4, CatalogKind::Y4op, CatalogKind::Y5,
                                                 CatalogKind::Y6, CatalogKind::Y6op};
  return kinds;
}

std::optional<FiniteEvidence> catalog_match(const OckhamSpace& x) {
  const std::size_t n = x.size();
  if (n % 2 == 1)
    if (auto iso = isomorphic(x, catalog_space(CatalogKind::C, n)))
      return FiniteEvidence{CatalogKind::C, n, *iso};
  if (n >= 2 && (n - 1) % 2 == 1)
    for (auto kind : {CatalogKind::D, CatalogKind::Dop})
      if (auto iso = isomorphic(x, catalog_space(kind, n - 1)))
        return FiniteEvidence{kind, n - 1, *iso};
  return std::nullopt;
}

Verdict classify_space(const OckhamSpace& x, const Caps& caps) {
  Verdict v;
  v.finite = catalog_match(x);
  for (auto kind : obstacle_kinds()) {
    if (auto w = divisor(catalog_space(kind), x, caps)) {
      v.infinite = InfiniteEvidence{kind, *w};
      break;
    }
  }
  if (v.finite.has_value() == v.infinite.has_value())
    throw InternalError("catalog test and obstacle-divisor test disagree");
  v.finitely_many = v.finite.has_value();
  return v;
}

Verdict classify_algebra(const OckhamAlgebra& a, const Caps& caps) {
  if (a.size() < 2) throw StructuralError("algebra must be non-trivial");
  return classify_space(dual_space(a, caps), caps);
}

InfiniteEvidence obstacle_witness(const OckhamSpace& x) {
  if (catalog_match(x)) throw StructuralError("space is in the catalog; no obstacle exists");
  auto cs = cycles(x);
  for (const auto& c : cs) {
    if (c.odd()) continue;
    // Parity map from a maximal element of the cycle onto the two-element swap.
    Elem top = c.elements[0];
    for (Elem e : c.elements)
      if (x.leq(top, e)) top = e;
    std::map<Elem, Elem> asg;
    Elem cur = top;
    for (std::size_t k = 0; k < c.length(); ++k) {
      asg[cur] = (k % 2 == 0) ? 1 : 0;
      cur = x.g(cur);
    }
    return make_witness(x, CatalogKind::Y3, asg);
  }
  if (cs.size() >= 2) {
    std::map<Elem, Elem> asg;
    for (Elem e : cs[0].elements) asg[e] = 0;
    for (Elem e : cs[1].elements) asg[e] = 1;
    return make_witness(x, CatalogKind::Y1, asg);
  }
  const auto& cyc = cs[0].elements;
  std::vector<char> in_c(x.size(), 0);
  for (Elem c : cyc) in_c[c] = 1;

  if (is_one_generated(x)) return one_generated_case(x, cyc);

  for (std::size_t z = 0; z < x.size(); ++z)
    if (!in_c[z] && !in_c[x.g(Elem(z))]) {
      auto sub = generated_subspace(x, {Elem(z)});
      std::vector<Elem> sub_cyc;
      for (Elem c : cyc)
        sub_cyc.push_back(Elem(std::find(sub.index_map.begin(), sub.index_map.end(), c) - sub.index_map.begin()));
      auto ev = one_generated_case(sub.space, sub_cyc);
      for (auto& e : ev.witness.subset) e = sub.index_map[e];
      return ev;
    }

  std::vector<Elem> not_above, not_below;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (in_c[e]) continue;
    if (!geq_set(x, Elem(e), cyc)) not_above.push_back(Elem(e));
    if (!leq_set(x, Elem(e), cyc)) not_below.push_back(Elem(e));
  }
  std::map<Elem, Elem> asg;
  if (not_above.size() >= 2) {
    Elem p = not_above[0], q = not_above[1];
    if (x.leq(q, p)) std::swap(p, q);
    asg[p] = 0;
    asg[q] = 1;
    for (Elem c : cyc) asg[c] = 2;
    return make_witness(x, CatalogKind::Y4, asg);
  }
  if (not_below.size() >= 2) {
    Elem p = not_below[0], q = not_below[1];
    if (x.leq(q, p)) std::swap(p, q);
    asg[p] = 1;
    asg[q] = 2;
    for (Elem c : cyc) asg[c] = 0;
    return make_witness(x, CatalogKind::Y4op, asg);
  }
  if (not_above.size() == 1 && not_below.size() == 1 && not_above[0] != not_below[0]) {
    asg[not_above[0]] = 0;
    asg[not_below[0]] = 2;
    for (Elem c : cyc) asg[c] = 1;
    return make_witness(x, CatalogKind::Y5, asg);
  }
  throw InternalError("obstacle case analysis fell through");
}

bool quasiprimal_by_relations(const OckhamAlgebra& a, const Caps& caps) {
  const std::size_t n = a.size();
  bool ok = true;
  for_each_compatible(as_fin_algebra(a), 2, [&](const Relation& r) {
    auto p = project(r, {0}), q = project(r, {1});
    if (p.size() * q.size() == r.size()) return true;
    std::vector<int> fwd(n, -1), back(n, -1);
    for (const auto& t : r.tuples()) {
      if ((fwd[t[0]] >= 0 && fwd[t[0]] != t[1]) || (back[t[1]] >= 0 && back[t[1]] != t[0])) {
        ok = false;
        return false;
      }
      fwd[t[0]] = t[1];
      back[t[1]] = t[0];
    }
    return true;
  }, caps);
  return ok;
}

bool is_quasiprimal(const OckhamAlgebra& a, const Caps& caps) {
  bool by_relations = quasiprimal_by_relations(a, caps);
  auto h = dual_space(a, caps);
  bool by_dual = h.size() % 2 == 1 && isomorphic(h, catalog_space(CatalogKind::C, h.size())).has_value();
  if (by_relations != by_dual) throw InternalError("quasi-primality tests disagree");
  return by_relations;
}

std::vector<std::string> subvariety_tags(const OckhamSpace& x) {
  const Elem n = Elem(x.size());
  bool boolean = true, demorgan = true, kleene = true, stone = true, ms = true;
  for (Elem a = 0; a < n; ++a) {
    Elem ga = x.g(a), gga = x.g(ga);
    if (ga != a) boolean = false;
    if (gga != a) demorgan = false;
    if (!x.leq(a, ga) && !x.leq(ga, a)) kleene = false;
    if (!x.leq(a, gga)) ms = false;
    std::vector<Elem> maximal_above;
    for (Elem b = 0; b < n; ++b) {
      if (!x.leq(a, b)) continue;
      bool maximal = true;
      for (Elem c = 0; c < n; ++c)
        if (c != b && x.leq(b, c)) { maximal = false; break; }
      if (maximal) maximal_above.push_back(b);
    }
    if (maximal_above.size() != 1 || maximal_above[0] != ga) stone = false;
  }
  kleene = kleene && demorgan;
  std::vector<std::string> tags;
  if (boolean) tags.push_back("Boolean");
  if (demorgan) tags.push_back("DeMorgan");
  if (kleene) tags.push_back("Kleene");
  if (stone) tags.push_back("Stone");
  if (ms) tags.push_back("MS");
  return tags;
}

}  // namespace ockham
