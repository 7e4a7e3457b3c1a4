#include "ockham/witnesses.hpp"

#include <algorithm>
#include <sstream>

#include "ockham/morphisms.hpp"
#include "ockham/relations.hpp"

namespace ockham {

namespace {

const Signature& gen1_signature() {
  static const Signature sig{{}, {{"leq", 2}, {"s", 1}}};
  return sig;
}

const Signature& gen2_signature() {
  static const Signature sig{{}, {{"leq", 2}, {"tri", 2}}};
  return sig;
}

Relation reflexive_plus(std::size_t n, const std::vector<std::pair<Elem, Elem>>& extra) {
  std::vector<std::vector<Elem>> t;
  for (std::size_t e = 0; e < n; ++e) t.push_back({Elem(e), Elem(e)});
  for (auto [a, b] : extra) t.push_back({a, b});
  return Relation::from_tuples(n, 2, t);
}

Relation unary(std::size_t n, const std::vector<Elem>& members) {
  std::vector<std::vector<Elem>> t;
  for (Elem e : members) t.push_back({e});
  return Relation::from_tuples(n, 1, t);
}

Structure gen1(std::size_t n, const std::vector<std::pair<Elem, Elem>>& order, const std::vector<Elem>& s,
               std::vector<std::string> labels) {
  return Structure(gen1_signature(), n, {}, {reflexive_plus(n, order), unary(n, s)}, std::move(labels));
}

Structure gen2(std::size_t n, const std::vector<std::pair<Elem, Elem>>& order,
               const std::vector<std::pair<Elem, Elem>>& extra, std::vector<std::string> labels) {
  auto tri = order;
  tri.insert(tri.end(), extra.begin(), extra.end());
  return Structure(gen2_signature(), n, {}, {reflexive_plus(n, order), reflexive_plus(n, tri)},
                   std::move(labels));
}

std::string tuple_text(const std::string& rel, const std::vector<Elem>& t) {
  std::ostringstream out;
  out << rel << "(";
  for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  out << ")";
  return out.str();
}

}  // namespace

Structure witness_catalog(const std::string& name) {
  if (name == "kleene_ego") return gen1(3, {{0, 1}, {2, 1}}, {0, 2}, {"0", "a", "1"});
  if (name == "a2_ego") return gen1(4, {{0, 1}, {2, 3}}, {0, 3}, {"0", "a", "b", "1"});
  if (name == "gen1_bridge") return gen1(3, {{0, 1}, {2, 1}}, {0}, {"0", "a", "1"});
  if (name == "a56_ego") return gen2(4, {{0, 1}, {3, 2}}, {{1, 0}}, {"0", "a", "b", "1"});
  if (name == "gen2_bridge") return gen2(4, {{0, 1}, {2, 3}}, {{1, 0}}, {"0", "a", "1", "b"});
  throw StructuralError("unknown witness structure: " + name);
}

OckhamAlgebra witness_algebra(const std::string& name) {
  if (name == "kleene") return algebra_from_order(3, {{0, 1}, {1, 2}}, {2, 1, 0}, {"0", "a", "1"});
  if (name == "a2") return algebra_from_order(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3, 3, 0, 0}, {"0", "a", "b", "1"});
  if (name == "a5") return algebra_from_order(4, {{0, 1}, {1, 2}, {2, 3}}, {3, 3, 0, 0}, {"0", "a", "b", "1"});
  if (name == "a6") return algebra_from_order(4, {{0, 1}, {1, 2}, {2, 3}}, {3, 3, 1, 0}, {"0", "a", "b", "1"});
  throw StructuralError("unknown witness algebra: " + name);
}

Structure family_member(Family family, std::size_t n) {
  std::vector<std::pair<Elem, Elem>> order;
  if (family == Family::Crown) {
    if (n < 2) throw StructuralError("crown needs n >= 2");
    const std::size_t size = 2 * n;
    for (std::size_t e = 0; e < size; e += 2) {
      order.emplace_back(Elem(e), Elem((e + 1) % size));
      order.emplace_back(Elem(e), Elem((e + size - 1) % size));
    }
    return gen1(size, order, {0}, {});
  }
  if (n < 1) throw StructuralError("fence needs n >= 1");
  const std::size_t size = 2 * n + 1;
  for (std::size_t e = 0; e < size; e += 2) {
    if (e > 0) order.emplace_back(Elem(e), Elem(e - 1));
    if (e + 1 < size) order.emplace_back(Elem(e), Elem(e + 1));
  }
  std::vector<char> lower(size, 0);
  lower[0] = lower[2 * n] = 1;
  std::vector<std::pair<Elem, Elem>> tri;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (lower[a] == lower[b] || (lower[a] && !lower[b])) tri.emplace_back(Elem(a), Elem(b));
  auto leq = reflexive_plus(size, order);
  return Structure(gen2_signature(), size, {}, {leq, Relation::from_tuples(size, 2, [&] {
                                                   std::vector<std::vector<Elem>> t;
                                                   for (auto [a, b] : tri) t.push_back({a, b});
                                                   return t;
                                                 }())});
}

Map psi_map(Family family, std::size_t n) {
  Structure x = family_member(family, n);
  Map psi(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (family == Family::Crown) psi[e] = (e == n) ? 2 : 0;
    else psi[e] = (e == 2 * n) ? 2 : 3;
  }
  return psi;
}

Structure family_bridge(Family family) {
  return witness_catalog(family == Family::Crown ? "gen1_bridge" : "gen2_bridge");
}

std::optional<std::string> first_violation(const Structure& x, const Structure& y, const Map& f) {
  if (!(x.signature() == y.signature())) throw StructuralError("signature mismatch");
  for (std::size_t o = 0; o < x.ops().size(); ++o)
    for (std::size_t e = 0; e < x.size(); ++e)
      if (f[x.op(o)[e]] != y.op(o)[f[e]]) return x.signature().ops[o] + "(" + std::to_string(e) + ")";
  for (std::size_t r = 0; r < x.rels().size(); ++r)
    for (const auto& t : x.rel(r).tuples()) {
      std::vector<Elem> img;
      for (Elem e : t) img.push_back(f[e]);
      if (!y.rel(r).contains(img)) return tuple_text(x.signature().rels[r].first, t);
    }
  return std::nullopt;
}

EmbeddingCheck embedding_check(const Structure& bridge, const Structure& ego,
                               const std::vector<std::vector<Elem>>& map) {
  if (map.size() != bridge.size()) throw StructuralError("map must give one tuple per element");
  const std::size_t p = map.front().size();
  Structure power = power_structure(ego, p);
  Map f;
  for (const auto& t : map) {
    if (t.size() != p) throw StructuralError("map tuples must share a length");
    std::size_t idx = 0;
    for (Elem e : t) {
      if (e < 0 || std::size_t(e) >= ego.size()) throw StructuralError("map tuple element out of range");
      idx = idx * ego.size() + std::size_t(e);
    }
    f.push_back(Elem(idx));
  }
  EmbeddingCheck res;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a + 1; b < f.size(); ++b)
      if (f[a] == f[b]) {
        res.violation = "not injective at " + std::to_string(a) + "," + std::to_string(b);
        return res;
      }
  if (auto v = first_violation(bridge, power, f)) {
    res.violation = "not preserved: " + *v;
    return res;
  }
  for (std::size_t r = 0; r < bridge.rels().size(); ++r) {
    const auto& rel = bridge.rel(r);
    std::size_t ground = rel.ground_size();
    for (Relation::Code c = 0; c < ground; ++c) {
      if (rel.contains_code(c)) continue;
      auto t = rel.decode(c);
      std::vector<Elem> img;
      for (Elem e : t) img.push_back(f[e]);
      if (power.rel(r).contains(img)) {
        res.violation = "not reflected: " + tuple_text(bridge.signature().rels[r].first, t);
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

InfinitudeCheck infinitude_hypothesis_check(Family family, const Structure& ego, std::size_t k, std::size_t l) {
  if (k > l) throw StructuralError("expected k <= l");
  Structure bridge = family_bridge(family);
  Structure xk = family_member(family, k), xl = family_member(family, l);
  Map psi = psi_map(family, l);
  InfinitudeCheck res;
  Map phi;
  for (const auto& rho : hom_search(bridge, ego)) {
    Map cand(psi.size());
    for (std::size_t e = 0; e < psi.size(); ++e) cand[e] = rho[psi[e]];
    if (!is_morphism(xl, ego, cand)) {
      res.rho = rho;
      phi = cand;
      break;
    }
  }
  if (phi.empty()) {
    res.detail = "no bridge morphism breaks psi";
    return res;
  }
  res.holds = true;
  for (const auto& w : hom_search(xk, xl)) {
    ++res.omegas;
    Map comp(w.size());
    for (std::size_t e = 0; e < w.size(); ++e) comp[e] = phi[w[e]];
    if (!is_morphism(xk, ego, comp)) {
      res.holds = false;
      std::ostringstream out;
      out << "omega fails:";
      for (Elem e : w) out << " " << e;
      res.detail = out.str();
      break;
    }
  }
  return res;
}

GrowthEvidence growth_evidence(Family family, const Structure& ego, std::size_t n_max, const Caps& caps) {
  GrowthEvidence ev;
  for (std::size_t n = 2; n <= n_max; ++n) {
    Structure x = family_member(family, n);
    std::vector<Elem> all(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) all[e] = Elem(e);
    ev.relations.push_back(homset_relation(x, all, ego));
  }
  ev.pairwise_inequivalent = true;
  for (std::size_t i = 0; i < ev.relations.size() && ev.pairwise_inequivalent; ++i)
    for (std::size_t j = i + 1; j < ev.relations.size(); ++j)
      if (equivalent(ev.relations[i], ev.relations[j], caps)) {
        ev.pairwise_inequivalent = false;
        break;
      }
  return ev;
}

std::vector<std::vector<int>> congruences(const OckhamAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> out;
  std::vector<int> block(n, 0);
  auto compatible = [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        if (block[x] != block[y]) continue;
        if (block[a.neg(Elem(x))] != block[a.neg(Elem(y))]) return false;
        for (std::size_t z = 0; z < n; ++z) {
          if (block[a.join(Elem(x), Elem(z))] != block[a.join(Elem(y), Elem(z))]) return false;
          if (block[a.meet(Elem(x), Elem(z))] != block[a.meet(Elem(y), Elem(z))]) return false;
        }
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == n) {
      if (compatible()) out.push_back(block);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) {
    block[0] = 0;
    rec(rec, 1, 1);
  }
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> non_permuting_pair(const OckhamAlgebra& a) {
  auto cons = congruences(a);
  const std::size_t n = a.size();
  auto compose = [&](const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<char> rel(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (s[x] == s[y] && t[y] == t[z]) rel[x * n + z] = 1;
    return rel;
  };
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j)
      if (compose(cons[i], cons[j]) != compose(cons[j], cons[i])) return std::make_pair(cons[i], cons[j]);
  return std::nullopt;
}

}  // namespace ockham
