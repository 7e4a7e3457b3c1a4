#include "ockham/piggyback.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ockham/classifier.hpp"
#include "ockham/duality.hpp"
#include "ockham/morphisms.hpp"
#include "ockham/relations.hpp"

namespace ockham {

namespace {

const Signature& ego_signature() {
  static const Signature sig{{"u"}, {{"leq", 2}}};
  return sig;
}

std::map<std::string, Elem> index_of(const std::vector<std::string>& pts) {
  std::map<std::string, Elem> m;
  for (std::size_t i = 0; i < pts.size(); ++i) m[pts[i]] = Elem(i);
  return m;
}

std::vector<Elem> precomposition_with_g(const OckhamSpace& x, const std::vector<std::string>& pts) {
  auto index = index_of(pts);
  std::vector<Elem> u(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    std::string s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = pts[p][x.g(Elem(i))];
    auto it = index.find(s);
    if (it == index.end()) throw StructuralError("g is not order-preserving; precomposition leaves K(X)");
    u[p] = it->second;
  }
  return u;
}

Elem u_power(const Structure& s, Elem x, std::size_t k) {
  const auto& u = s.op(0);
  for (std::size_t i = 0; i < k; ++i) x = u[x];
  return x;
}

bool leq_of(const Structure& s, Elem a, Elem b) {
  Elem t[2] = {a, b};
  return s.rel(0).contains(t);
}

void require_ego_signature(const Structure& s) {
  if (!(s.signature() == ego_signature()))
    throw StructuralError("expected a structure with op u and binary relation leq");
}

std::size_t chain_height(const Structure& s, const std::vector<Elem>& block) {
  // Longest strict chain, by memoised depth over the block.
  std::map<Elem, std::size_t> depth;
  std::vector<Elem> sorted = block;
  auto below_count = [&](Elem e) {
    std::size_t c = 0;
    for (Elem f : block)
      if (f != e && leq_of(s, f, e)) ++c;
    return c;
  };
  std::sort(sorted.begin(), sorted.end(), [&](Elem a, Elem b) { return below_count(a) < below_count(b); });
  std::size_t best = 0;
  for (Elem e : sorted) {
    std::size_t d = 0;
    for (Elem f : block)
      if (f != e && leq_of(s, f, e)) d = std::max(d, depth[f] + 1);
    depth[e] = d;
    best = std::max(best, d);
  }
  return best;
}

// Connected components of the comparability graph restricted to elems, in ascending order of least member.
std::vector<std::vector<Elem>> comparability_components(const Structure& s, const std::vector<Elem>& elems) {
  std::vector<std::vector<Elem>> comps;
  std::set<Elem> left(elems.begin(), elems.end());
  while (!left.empty()) {
    std::vector<Elem> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto it = left.begin(); it != left.end();) {
        if (leq_of(s, comp[i], *it) || leq_of(s, *it, comp[i])) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

struct Block {
  Elem top;
  std::vector<Elem> lower;  // ascending
};

std::vector<Block> blocks_of(const Structure& s) {
  std::vector<Block> out;
  for (Elem t : maximal_elements(s)) {
    Block b{t, {}};
    for (std::size_t e = 0; e < s.size(); ++e)
      if (Elem(e) != t && leq_of(s, Elem(e), t)) b.lower.push_back(Elem(e));
    out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
    Elem ma = a.lower.empty() ? a.top : std::min(a.top, a.lower.front());
    Elem mb = b.lower.empty() ? b.top : std::min(b.top, b.lower.front());
    return ma < mb;
  });
  return out;
}

bool block_in_form(const Structure& s, const Block& b, const std::vector<char>& in_s) {
  const std::size_t size = b.lower.size() + 1;
  if (size == 1) return true;
  std::vector<Elem> all = b.lower;
  all.push_back(b.top);
  std::size_t h = chain_height(s, all);
  bool top_in = in_s[b.top] != 0;
  if (h == 1) return top_in ? size == 2 : (size == 2 || size == 3);
  if (h == 2) {
    if (size == 3) return true;
    if (top_in || size != 4) return false;
    auto comps = comparability_components(s, b.lower);
    return comps.size() == 2 && ((comps[0].size() == 2 && comps[1].size() == 1) ||
                                 (comps[0].size() == 1 && comps[1].size() == 2));
  }
  return false;
}

std::vector<Elem> to_indices(const std::vector<char>& member) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) out.push_back(Elem(i));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

AlterEgo piggyback_alter_ego(const OckhamSpace& x, Elem base_point, const Caps& caps) {
  if (base_point < 0 || std::size_t(base_point) >= x.size()) throw StructuralError("base point out of range");
  if (generated(to_structure(x), {base_point}).size() != x.size())
    throw StructuralError("space is not generated by the base point");
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (x.leq(Elem(a), Elem(b)) && !x.leq(x.g(Elem(a)), x.g(Elem(b))))
        throw StructuralError("g is not order-preserving");

  OckhamAlgebra alg = dual_algebra(x, caps);
  auto pts = dual_algebra_points(x, caps);
  auto u = precomposition_with_g(x, pts);

  // (point, parity) pairs along the orbit until one repeats.
  std::vector<std::pair<Elem, int>> visits;
  std::set<std::pair<Elem, int>> seen;
  Elem cur = base_point;
  for (int k = 0;; ++k) {
    std::pair<Elem, int> v{cur, k % 2};
    if (!seen.insert(v).second) break;
    visits.push_back(v);
    cur = x.g(cur);
  }

  const std::size_t n = pts.size();
  std::vector<std::vector<Elem>> leq;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool ok = true;
      for (auto [p, parity] : visits) {
        char pa = pts[a][p], pb = pts[b][p];
        if (parity == 0 ? (pa > pb) : (pa < pb)) { ok = false; break; }
      }
      if (ok) leq.push_back({Elem(a), Elem(b)});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool separated = false;
      for (auto [p, parity] : visits)
        if (pts[a][p] != pts[b][p]) { separated = true; break; }
      if (!separated) throw InternalError("separation condition fails for the piggyback alter ego");
    }

  Structure s(ego_signature(), n, {u}, {Relation::from_tuples(n, 2, leq)}, pts);
  return AlterEgo{std::move(s), std::move(alg), base_point};
}

AlterEgo alternating_alter_ego(std::size_t m, const Caps& caps) {
  OckhamSpace d = catalog_space(CatalogKind::D, m);
  OckhamAlgebra alg = dual_algebra(d, caps);
  auto pts = dual_algebra_points(d, caps);
  auto u = precomposition_with_g(d, pts);
  const std::size_t n = pts.size();
  std::vector<std::vector<Elem>> leq;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (pts[a][0] <= pts[b][0] && pts[a].substr(1) == pts[b].substr(1)) leq.push_back({Elem(a), Elem(b)});
  Structure s(ego_signature(), n, {u}, {Relation::from_tuples(n, 2, leq)}, pts);
  return AlterEgo{std::move(s), std::move(alg), 0};
}

bool is_alter_ego(const OckhamAlgebra& a, const Structure& m) {
  if (m.size() != a.size()) return false;
  for (const auto& r : m.rels())
    if (!is_compatible(a, r)) return false;
  for (const auto& op : m.ops()) {
    std::vector<std::vector<Elem>> graph;
    for (std::size_t e = 0; e < m.size(); ++e) graph.push_back({Elem(e), op[e]});
    if (!is_compatible(a, Relation::from_tuples(m.size(), 2, graph))) return false;
  }
  return true;
}

ZStructure z_structure(std::size_t k, std::size_t m, const Caps& caps) {
  if (k > 0 && m % k != 0) throw StructuralError("k must divide m");
  AlterEgo ego = alternating_alter_ego(m, caps);
  auto index = index_of(ego.structure.labels());
  const std::size_t width = m + 1;
  ZStructure z;
  std::vector<std::string> images;
  if (k == 0) {
    z.structure = Structure(ego_signature(), 2, {{1, 1}}, {Relation::from_tuples(2, 2, {{0, 0}, {0, 1}, {1, 1}})},
                            {"a", "1"});
    images = {"0" + std::string(m, '1'), std::string(width, '1')};
  } else {
    std::vector<Elem> u(k + 1);
    u[0] = 0;
    for (std::size_t j = 0; j < k; ++j) u[j + 1] = Elem((j + k - 1) % k + 1);
    std::vector<std::vector<Elem>> diag;
    std::vector<std::string> labels{"0"};
    for (std::size_t j = 0; j <= k; ++j) diag.push_back({Elem(j), Elem(j)});
    for (std::size_t j = 0; j < k; ++j) labels.push_back("a" + std::to_string(j));
    z.structure = Structure(ego_signature(), k + 1, {u}, {Relation::from_tuples(k + 1, 2, diag)}, labels);
    images.push_back(std::string(width, '0'));
    for (std::size_t j = 0; j < k; ++j) {
      std::string s(width, '0');
      for (std::size_t i = 0; i < width; ++i)
        if (i % k == j) s[i] = '1';
      images.push_back(s);
    }
  }
  for (const auto& s : images) {
    auto it = index.find(s);
    if (it == index.end()) throw InternalError("Z-structure image " + s + " is not in S_m");
    z.embedding.push_back(it->second);
  }
  if (!is_embedding(z.structure, ego.structure, z.embedding))
    throw InternalError("Z-structure map is not an embedding");
  return z;
}

std::vector<Elem> maximal_elements(const Structure& s) {
  std::vector<Elem> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < s.size() && maximal; ++b)
      if (a != b && leq_of(s, Elem(a), Elem(b))) maximal = false;
    if (maximal) out.push_back(Elem(a));
  }
  return out;
}

DualClassReport dual_class_member(const Structure& s, std::size_t m) {
  require_ego_signature(s);
  DualClassReport rep;
  const Elem n = Elem(s.size());
  const auto& u = s.op(0);
  rep.order = is_order(s.rel(0));
  if (!rep.order) rep.failures.push_back("leq is not a partial order");
  rep.u_monotone = true;
  for (Elem a = 0; a < n && rep.u_monotone; ++a)
    for (Elem b = 0; b < n; ++b)
      if (leq_of(s, a, b) && u[a] != u[b]) {
        rep.u_monotone = false;
        rep.failures.push_back("x <= y but u(x) != u(y) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        break;
      }
  rep.u_extensive = true;
  for (Elem a = 0; a < n; ++a)
    if (!leq_of(s, a, u_power(s, a, m))) {
      rep.u_extensive = false;
      rep.failures.push_back("x not below u^m(x) at " + std::to_string(a));
      break;
    }
  rep.member = rep.order && rep.u_monotone && rep.u_extensive;
  if (!rep.member) return rep;

  auto maxima = maximal_elements(s);
  std::vector<char> is_max(s.size(), 0);
  for (Elem e : maxima) is_max[e] = 1;
  rep.images_maximal = std::all_of(u.begin(), u.end(), [&](Elem v) { return is_max[v] != 0; });
  rep.maxima_periodic = std::all_of(maxima.begin(), maxima.end(), [&](Elem e) { return u_power(s, e, m) == e; });
  rep.unique_maximal_above = true;
  for (Elem a = 0; a < n; ++a) {
    int count = 0;
    for (Elem t : maxima)
      if (leq_of(s, a, t)) ++count;
    if (count != 1) rep.unique_maximal_above = false;
  }
  if (!rep.images_maximal || !rep.maxima_periodic || !rep.unique_maximal_above)
    throw InternalError("dual-class member violates a derived property");
  return rep;
}

std::vector<ShapePart> shape_decompose(const Structure& s, std::size_t m) {
  if (!dual_class_member(s, m).member) throw StructuralError("structure is not in the dual class");
  const std::size_t n = s.size();
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < n; ++e) {
    Elem a = find(Elem(e)), b = find(s.op(0)[e]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Elem, std::vector<Elem>> comps;
  for (std::size_t e = 0; e < n; ++e) comps[find(Elem(e))].push_back(Elem(e));

  std::vector<ShapePart> parts;
  for (auto& [root, elems] : comps) {
    ShapePart part;
    part.part = induced_substructure(s, elems);
    const Structure& c = part.part.structure;
    auto maxima = maximal_elements(c);
    Elem m0 = maxima.front();
    Elem cur = m0;
    do {
      part.maxima.push_back(cur);
      cur = c.op(0)[cur];
    } while (cur != m0);
    part.k = part.maxima.size();
    if (m % part.k != 0) throw InternalError("component cycle length does not divide m");
    for (Elem t : part.maxima) {
      std::vector<Elem> block;
      for (std::size_t e = 0; e < c.size(); ++e)
        if (leq_of(c, Elem(e), t)) block.push_back(Elem(e));
      part.blocks.push_back(block);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

bool in_normal_form(const Structure& s, const std::vector<Elem>& gens, std::size_t m) {
  if (!dual_class_member(s, m).member) throw StructuralError("structure is not in the dual class");
  std::vector<char> in_s(s.size(), 0);
  for (Elem e : gens) in_s[e] = 1;
  for (const auto& b : blocks_of(s))
    if (!block_in_form(s, b, in_s)) return false;
  return true;
}

NormalizeResult normalize(const Structure& input, const std::vector<Elem>& gens, std::size_t m, const Caps& caps) {
  if (!dual_class_member(input, m).member) throw StructuralError("structure is not in the dual class");
  if (!generates(input, gens)) throw StructuralError("generators do not generate the structure");
  NormalizeResult res;
  res.structure = input;
  std::vector<char> in_s(input.size(), 0);
  for (Elem e : gens) in_s[e] = 1;
  res.index_map.resize(input.size());
  std::iota(res.index_map.begin(), res.index_map.end(), 0);

  while (true) {
    const Structure& cur = res.structure;
    auto blocks = blocks_of(cur);
    auto bad = std::find_if(blocks.begin(), blocks.end(),
                            [&](const Block& b) { return !block_in_form(cur, b, in_s); });
    if (bad == blocks.end()) break;
    const Block& b = *bad;
    std::vector<Elem> all = b.lower;
    all.push_back(b.top);
    std::size_t h = chain_height(cur, all);
    bool top_in = in_s[b.top] != 0;

    Map rho(cur.size());
    std::iota(rho.begin(), rho.end(), 0);
    std::vector<Elem> kept{b.top};
    int which = 0;
    if (h == 1) {
      Elem a = b.lower[0];
      kept.push_back(a);
      which = top_in ? 1 : 2;
      if (!top_in) kept.push_back(b.lower[1]);
      for (Elem e : b.lower) rho[e] = (std::find(kept.begin(), kept.end(), e) != kept.end()) ? e : a;
    } else {
      Elem a = -1, bb = -1;
      for (Elem x : b.lower) {
        for (Elem y : b.lower)
          if (x != y && leq_of(cur, x, y)) { a = x; bb = y; break; }
        if (a >= 0) break;
      }
      kept.push_back(a);
      kept.push_back(bb);
      auto comps = comparability_components(cur, b.lower);
      which = top_in ? 3 : (comps.size() == 1 ? 4 : 5);
      std::vector<Elem> comp_a;
      for (const auto& c : comps)
        if (std::find(c.begin(), c.end(), a) != c.end()) comp_a = c;
      Elem c_rep = -1;
      if (which == 5) {
        for (Elem e : b.lower)
          if (std::find(comp_a.begin(), comp_a.end(), e) == comp_a.end()) { c_rep = e; break; }
        kept.push_back(c_rep);
      }
      for (Elem e : b.lower) {
        if (which == 5 && std::find(comp_a.begin(), comp_a.end(), e) == comp_a.end()) rho[e] = c_rep;
        else rho[e] = leq_of(cur, e, a) ? a : bb;
      }
    }
    if (!is_morphism(cur, cur, rho)) throw InternalError("normalization retraction is not a morphism");
    res.cases.push_back(which);

    std::vector<char> keep(cur.size(), 1);
    for (Elem e : b.lower)
      if (std::find(kept.begin(), kept.end(), e) == kept.end()) keep[e] = 0;
    auto sub = induced_substructure(cur, to_indices(keep));
    std::vector<char> next_s(sub.index_map.size(), 0);
    std::vector<Elem> next_map(sub.index_map.size());
    for (std::size_t i = 0; i < sub.index_map.size(); ++i) {
      next_s[i] = in_s[sub.index_map[i]];
      next_map[i] = res.index_map[sub.index_map[i]];
    }
    res.structure = std::move(sub.structure);
    in_s = std::move(next_s);
    res.index_map = std::move(next_map);
  }
  res.gens = to_indices(in_s);

  if (!res.cases.empty()) {
    AlterEgo ego = alternating_alter_ego(m, caps);
    std::size_t k1 = gens.size(), k2 = res.gens.size();
    bool small = checked_pow(k1, k2) <= caps.maps && checked_pow(k2, k1) <= caps.maps &&
                 checked_pow(ego.structure.size(), std::max(k1, k2)) <= caps.ground;
    if (small) {
      Relation before = homset_relation(input, gens, ego.structure);
      Relation after = homset_relation(res.structure, res.gens, ego.structure);
      if (!equivalent(before, after, caps)) throw InternalError("normalization changed the homset relation");
      res.verified = true;
    }
  } else {
    res.verified = true;
  }
  return res;
}

std::vector<std::vector<std::pair<Elem, Elem>>> posets_up_to_iso(std::size_t n) {
  if (n > 6) throw ResourceError("poset enumeration limited to 6 points");
  std::vector<std::pair<int, int>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(int(i), int(j));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::vector<char>> seen;
  std::vector<std::vector<std::pair<Elem, Elem>>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << slots.size()); ++mask) {
    std::vector<char> lt(n * n, 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) lt[slots[s].first * n + slots[s].second] = 1;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        if (lt[a * n + b])
          for (std::size_t c = 0; c < n; ++c)
            if (lt[b * n + c] && !lt[a * n + c]) { transitive = false; break; }
    if (!transitive) continue;
    std::vector<char> best;
    for (const auto& perm : perms) {
      std::vector<char> img(n * n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (lt[a * n + b]) img[perm[a] * n + perm[b]] = 1;
      if (best.empty() || img < best) best = img;
    }
    if (!seen.insert(best).second) continue;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (lt[a * n + b]) pairs.emplace_back(Elem(a), Elem(b));
    out.push_back(pairs);
  }
  return out;
}

namespace {

struct BlockType {
  std::size_t size;  // including the top, which is the last element
  std::vector<std::pair<Elem, Elem>> strict;
};

std::vector<BlockType> block_types(std::size_t max_size) {
  std::vector<BlockType> out;
  for (std::size_t s = 1; s <= max_size; ++s)
    for (auto pairs : posets_up_to_iso(s - 1)) {
      for (std::size_t e = 0; e + 1 < s; ++e) pairs.emplace_back(Elem(e), Elem(s - 1));
      out.push_back({s, pairs});
    }
  return out;
}

}  // namespace

std::vector<Structure> connected_dual_class_members(std::size_t m, std::size_t size_cap) {
  auto types = block_types(size_cap);
  std::vector<Structure> out;
  for (std::size_t k = 1; k <= m && k <= size_cap; ++k) {
    if (m % k != 0) continue;
    std::vector<std::size_t> seq(k, 0);
    while (true) {
      std::size_t total = 0;
      for (auto t : seq) total += types[t].size;
      bool canonical = true;
      for (std::size_t r = 1; r < k && canonical; ++r) {
        std::vector<std::size_t> rot(k);
        for (std::size_t i = 0; i < k; ++i) rot[i] = seq[(i + r) % k];
        if (rot < seq) canonical = false;
      }
      if (total <= size_cap && canonical) {
        std::vector<std::vector<Elem>> leq;
        std::vector<Elem> u(total);
        std::vector<Elem> tops;
        std::size_t off = 0;
        for (auto t : seq) {
          const auto& bt = types[t];
          for (std::size_t e = 0; e < bt.size; ++e) leq.push_back({Elem(off + e), Elem(off + e)});
          for (auto [a, b] : bt.strict) leq.push_back({Elem(off + a), Elem(off + b)});
          tops.push_back(Elem(off + bt.size - 1));
          off += bt.size;
        }
        off = 0;
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t e = 0; e < types[seq[i]].size; ++e) u[off + e] = tops[(i + 1) % k];
          off += types[seq[i]].size;
        }
        out.emplace_back(ego_signature(), total, std::vector<std::vector<Elem>>{u},
                         std::vector<Relation>{Relation::from_tuples(total, 2, leq)});
      }
      std::size_t i = k;
      while (i > 0 && seq[i - 1] + 1 == types.size()) --i;
      if (i == 0) break;
      ++seq[i - 1];
      for (std::size_t j = i; j < k; ++j) seq[j] = 0;
    }
  }
  return out;
}

std::vector<Structure> dual_class_members(std::size_t m, std::size_t size_cap) {
  auto comps = connected_dual_class_members(m, size_cap);
  std::vector<Structure> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from, std::size_t total) -> void {
    if (!pick.empty()) {
      std::vector<std::vector<Elem>> leq;
      std::vector<Elem> u;
      std::size_t off = 0;
      for (auto c : pick) {
        const auto& s = comps[c];
        for (const auto& t : s.rel(0).tuples()) leq.push_back({Elem(off + t[0]), Elem(off + t[1])});
        for (Elem v : s.op(0)) u.push_back(Elem(off + v));
        off += s.size();
      }
      out.emplace_back(ego_signature(), off, std::vector<std::vector<Elem>>{u},
                       std::vector<Relation>{Relation::from_tuples(off, 2, leq)});
    }
    for (std::size_t c = from; c < comps.size(); ++c) {
      if (total + comps[c].size() > size_cap) continue;
      pick.push_back(c);
      self(self, c, total + comps[c].size());
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

CensusBound census_bound_check(std::size_t m, std::size_t size_cap, const Caps& caps) {
  AlterEgo ego = alternating_alter_ego(m, caps);
  CensusBound result;
  result.bound = m * checked_pow(8, m);
  struct ClassInfo {
    Relation rep;
    bool normal = false;
  };
  std::vector<ClassInfo> classes;
  std::map<std::vector<Elem>, std::vector<std::size_t>> buckets;
  for (const auto& x : connected_dual_class_members(m, size_cap)) {
    auto maxima = maximal_elements(x);
    std::vector<Elem> lower;
    std::vector<char> is_max(x.size(), 0);
    for (Elem e : maxima) is_max[e] = 1;
    for (std::size_t e = 0; e < x.size(); ++e)
      if (!is_max[e]) lower.push_back(Elem(e));
    for (std::size_t mask = 0; mask < (std::size_t(1) << maxima.size()); ++mask) {
      std::vector<Elem> s = lower;
      for (std::size_t i = 0; i < maxima.size(); ++i)
        if ((mask >> i) & 1) s.push_back(maxima[i]);
      if (s.empty() || !generates(x, s)) continue;
      std::sort(s.begin(), s.end());
      ++result.pairs;
      Relation r = homset_relation(x, s, ego.structure);
      bool normal = in_normal_form(x, s, m);
      std::vector<Elem> diag;
      for (std::size_t e = 0; e < ego.structure.size(); ++e)
        if (r.contains(std::vector<Elem>(r.arity(), Elem(e)))) diag.push_back(Elem(e));
      auto& bucket = buckets[diag];
      bool found = false;
      for (auto ci : bucket)
        if (equivalent(r, classes[ci].rep, caps)) {
          classes[ci].normal = classes[ci].normal || normal;
          found = true;
          break;
        }
      if (!found) {
        bucket.push_back(classes.size());
        classes.push_back({r, normal});
      }
    }
  }
  result.classes = classes.size();
  result.normal_representatives =
      std::all_of(classes.begin(), classes.end(), [](const ClassInfo& c) { return c.normal; });
  return result;
}

}  // namespace ockham
