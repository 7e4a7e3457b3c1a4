#include "ockham/duality.hpp"
#include "ockham/morphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ockham {

namespace {

using Bits = std::string;  // '0'/'1' per coordinate

// Characteristic strings of the lattice homomorphisms A -> 2, ascending. A hom of a finite
// distributive lattice is determined by its prime filter, the principal filter of a
// join-irreducible element.
std::vector<Bits> lattice_homs(const OckhamAlgebra& a, const Caps& caps) {
  require_cap(a.size(), caps.algebra, "algebra size for H(A)");
  const Elem n = Elem(a.size());
  std::vector<Bits> out;
  for (Elem j = 0; j < n; ++j) {
    if (j == a.bot()) continue;
    bool irreducible = true;
    for (Elem x = 0; x < n && irreducible; ++x)
      for (Elem y = 0; y < n; ++y)
        if (a.join(x, y) == j && x != j && y != j) { irreducible = false; break; }
    if (!irreducible) continue;
    Bits s(a.size(), '0');
    for (Elem x = 0; x < n; ++x)
      if (a.leq(j, x)) s[x] = '1';
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Characteristic strings of the up-sets of X, ascending.
std::vector<Bits> up_sets(const OckhamSpace& x, const Caps& caps) {
  require_cap(x.size(), caps.space, "space size for K(X)");
  const Elem n = Elem(x.size());
  // Decide elements so that everything strictly above is decided first.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> above(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && x.leq(a, b)) above[a]++;
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return above[a] < above[b]; });

  std::vector<Bits> out;
  Bits cur(n, '0');
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      out.push_back(cur);
      require_cap(out.size(), caps.power, "K(X) size");
      return;
    }
    Elem e = order[i];
    cur[e] = '0';
    self(self, i + 1);
    bool can_include = true;
    for (Elem b = 0; b < n; ++b)
      if (b != e && x.leq(e, b) && cur[b] == '0') { can_include = false; break; }
    if (can_include) {
      cur[e] = '1';
      self(self, i + 1);
      cur[e] = '0';
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Elem find_point(const std::map<Bits, Elem>& index, const Bits& s, const char* what) {
  auto it = index.find(s);
  if (it == index.end()) throw InternalError(std::string(what) + ": image " + s + " is not a dual point");
  return it->second;
}

std::map<Bits, Elem> index_of(const std::vector<Bits>& pts) {
  std::map<Bits, Elem> m;
  for (std::size_t i = 0; i < pts.size(); ++i) m[pts[i]] = Elem(i);
  return m;
}

OckhamSpace space_from_points(const OckhamAlgebra& a, const std::vector<Bits>& pts) {
  const std::size_t n = pts.size();
  auto index = index_of(pts);
  std::vector<std::pair<Elem, Elem>> leq;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      bool le = true;
      for (std::size_t i = 0; i < a.size() && le; ++i)
        if (pts[p][i] == '1' && pts[q][i] == '0') le = false;
      if (le) leq.emplace_back(Elem(p), Elem(q));
    }
  std::vector<Elem> g(n);
  for (std::size_t p = 0; p < n; ++p) {
    Bits img(a.size(), '0');
    for (std::size_t i = 0; i < a.size(); ++i) img[i] = pts[p][a.neg(Elem(i))] == '1' ? '0' : '1';
    g[p] = find_point(index, img, "H(A) negation");
  }
  return OckhamSpace::make(n, leq, g, pts);
}

OckhamAlgebra algebra_from_points(const OckhamSpace& x, const std::vector<Bits>& pts) {
  const std::size_t n = pts.size(), m = x.size();
  auto index = index_of(pts);
  RawAlgebra raw;
  raw.size = n;
  raw.join.assign(n, std::vector<Elem>(n));
  raw.meet.assign(n, std::vector<Elem>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      Bits j(m, '0'), k(m, '0');
      for (std::size_t i = 0; i < m; ++i) {
        j[i] = (pts[p][i] == '1' || pts[q][i] == '1') ? '1' : '0';
        k[i] = (pts[p][i] == '1' && pts[q][i] == '1') ? '1' : '0';
      }
      raw.join[p][q] = raw.join[q][p] = find_point(index, j, "K(X) join");
      raw.meet[p][q] = raw.meet[q][p] = find_point(index, k, "K(X) meet");
    }
  raw.neg.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    Bits img(m, '0');
    for (std::size_t i = 0; i < m; ++i) img[i] = pts[p][x.g(Elem(i))] == '1' ? '0' : '1';
    raw.neg[p] = find_point(index, img, "K(X) negation");
  }
  raw.bot = find_point(index, Bits(m, '0'), "K(X) bottom");
  raw.top = find_point(index, Bits(m, '1'), "K(X) top");
  raw.labels = pts;
  return OckhamAlgebra::from_raw(raw, false);
}

}  // namespace

std::vector<std::string> dual_space_points(const OckhamAlgebra& a, const Caps& caps) {
  return lattice_homs(a, caps);
}

std::vector<std::string> dual_algebra_points(const OckhamSpace& x, const Caps& caps) {
  return up_sets(x, caps);
}

OckhamSpace dual_space(const OckhamAlgebra& a, const Caps& caps) {
  return space_from_points(a, lattice_homs(a, caps));
}

OckhamAlgebra dual_algebra(const OckhamSpace& x, const Caps& caps) {
  return algebra_from_points(x, up_sets(x, caps));
}

bool is_algebra_morphism(const OckhamAlgebra& a, const OckhamAlgebra& b, const Map& phi) {
  if (phi.size() != a.size()) return false;
  for (Elem v : phi)
    if (v < 0 || std::size_t(v) >= b.size()) return false;
  const Elem n = Elem(a.size());
  if (phi[a.bot()] != b.bot() || phi[a.top()] != b.top()) return false;
  for (Elem x = 0; x < n; ++x) {
    if (phi[a.neg(x)] != b.neg(phi[x])) return false;
    for (Elem y = 0; y < n; ++y)
      if (phi[a.join(x, y)] != b.join(phi[x], phi[y]) || phi[a.meet(x, y)] != b.meet(phi[x], phi[y]))
        return false;
  }
  return true;
}

bool is_space_morphism(const OckhamSpace& x, const OckhamSpace& y, const Map& psi) {
  if (psi.size() != x.size()) return false;
  for (Elem v : psi)
    if (v < 0 || std::size_t(v) >= y.size()) return false;
  const Elem n = Elem(x.size());
  for (Elem a = 0; a < n; ++a) {
    if (psi[x.g(a)] != y.g(psi[a])) return false;
    for (Elem b = 0; b < n; ++b)
      if (x.leq(a, b) && !y.leq(psi[a], psi[b])) return false;
  }
  return true;
}

Map dual_of_algebra_morphism(const OckhamAlgebra& a, const OckhamAlgebra& b, const Map& phi,
                             const Caps& caps) {
  if (!is_algebra_morphism(a, b, phi)) throw StructuralError("map is not an Ockham algebra morphism");
  auto pa = lattice_homs(a, caps);
  auto pb = lattice_homs(b, caps);
  auto index = index_of(pa);
  Map out(pb.size());
  for (std::size_t p = 0; p < pb.size(); ++p) {
    Bits s(a.size(), '0');
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = pb[p][phi[i]];
    out[p] = find_point(index, s, "H(phi)");
  }
  return out;
}

Map dual_of_space_morphism(const OckhamSpace& x, const OckhamSpace& y, const Map& psi, const Caps& caps) {
  if (!is_space_morphism(x, y, psi)) throw StructuralError("map is not an Ockham space morphism");
  auto px = up_sets(x, caps);
  auto py = up_sets(y, caps);
  auto index = index_of(px);
  Map out(py.size());
  for (std::size_t p = 0; p < py.size(); ++p) {
    Bits s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = py[p][psi[i]];
    out[p] = find_point(index, s, "K(psi)");
  }
  return out;
}

AlgebraRoundTrip round_trip(const OckhamAlgebra& a, const Caps& caps) {
  auto hom_pts = lattice_homs(a, caps);
  OckhamSpace h = space_from_points(a, hom_pts);
  auto up_pts = up_sets(h, caps);
  OckhamAlgebra kh = algebra_from_points(h, up_pts);
  auto index = index_of(up_pts);
  Map unit(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    Bits s(hom_pts.size(), '0');
    for (std::size_t p = 0; p < hom_pts.size(); ++p) s[p] = hom_pts[p][e];
    unit[e] = find_point(index, s, "unit");
  }
  if (kh.size() != a.size() || !is_surjective(unit, kh.size()) || !is_algebra_morphism(a, kh, unit))
    throw InternalError("unit of the duality is not an isomorphism");
  return AlgebraRoundTrip{kh, unit};
}

SpaceRoundTrip round_trip(const OckhamSpace& x, const Caps& caps) {
  auto up_pts = up_sets(x, caps);
  OckhamAlgebra k = algebra_from_points(x, up_pts);
  auto hom_pts = lattice_homs(k, caps);
  OckhamSpace hk = space_from_points(k, hom_pts);
  auto index = index_of(hom_pts);
  Map counit(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) {
    Bits s(up_pts.size(), '0');
    for (std::size_t p = 0; p < up_pts.size(); ++p) s[p] = up_pts[p][e];
    counit[e] = find_point(index, s, "counit");
  }
  bool iso = hk.size() == x.size() && is_surjective(counit, hk.size()) && is_space_morphism(x, hk, counit);
  for (std::size_t a = 0; a < x.size() && iso; ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (hk.leq(counit[a], counit[b]) && !x.leq(Elem(a), Elem(b))) { iso = false; break; }
  if (!iso) throw InternalError("counit of the duality is not an isomorphism");
  return SpaceRoundTrip{hk, counit};
}

}  // namespace ockham
