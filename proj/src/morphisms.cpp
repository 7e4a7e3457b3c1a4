#include "ockham/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ockham {

namespace {

void require_same_signature(const Structure& x, const Structure& y) {
  if (!(x.signature() == y.signature())) throw StructuralError("signature mismatch");
}

class HomSearcher {
 public:
  HomSearcher(const Structure& x, const Structure& y, HomMode mode, const HomOptions& options)
      : x_(x), y_(y), mode_(mode), limit_(options.limit) {
    require_same_signature(x, y);
    nx_ = x.size();
    ny_ = y.size();
    injective_ = mode == HomMode::Injective || mode == HomMode::Embedding;
    surjective_ = mode == HomMode::Surjective;
    if (mode == HomMode::First) limit_ = 1;

    allowed_.assign(nx_, std::vector<char>(ny_, 1));
    if (!options.domains.empty()) {
      if (options.domains.size() != nx_) throw StructuralError("domain list has wrong length");
      for (std::size_t i = 0; i < nx_; ++i) {
        std::fill(allowed_[i].begin(), allowed_[i].end(), 0);
        for (Elem v : options.domains[i])
          if (v >= 0 && std::size_t(v) < ny_) allowed_[i][v] = 1;
      }
    }

    incident_.assign(nx_, {});
    xtuples_.resize(x.rels().size());
    std::vector<std::set<Elem>> neighbours(nx_);
    for (std::size_t r = 0; r < x.rels().size(); ++r) {
      xtuples_[r] = x.rel(r).tuples();
      for (std::size_t t = 0; t < xtuples_[r].size(); ++t) {
        const auto& tup = xtuples_[r][t];
        std::vector<Elem> seen;
        for (Elem e : tup) {
          if (std::find(seen.begin(), seen.end(), e) == seen.end()) {
            seen.push_back(e);
            incident_[e].emplace_back(int(r), int(t));
          }
          for (Elem f : tup)
            if (f != e) neighbours[e].insert(f);
        }
      }
    }
    for (const auto& op : x.ops())
      for (std::size_t e = 0; e < nx_; ++e)
        if (op[e] != Elem(e)) {
          neighbours[e].insert(op[e]);
          neighbours[op[e]].insert(Elem(e));
        }

    membership_.resize(y.rels().size());
    for (std::size_t r = 0; r < y.rels().size(); ++r) {
      const auto& rel = y.rel(r);
      std::size_t ground = rel.ground_size();
      if (ground <= (std::size_t(1) << 22)) {
        membership_[r].assign(ground, 0);
        for (auto c : rel.codes()) membership_[r][c] = 1;
      }
    }

    order_.resize(nx_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Elem a, Elem b) {
      return neighbours[a].size() > neighbours[b].size();
    });
    phi_.assign(nx_, -1);
    used_.assign(ny_, 0);
  }

  std::vector<Map> run() {
    if (nx_ == 0) return {};
    if (surjective_ && nx_ < ny_) return {};
    if (injective_ && nx_ > ny_) return {};
    search(0);
    if (mode_ != HomMode::First) std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  bool tuple_ok(int r, const std::vector<Elem>& t) const {
    const auto& rel = y_.rel(std::size_t(r));
    Relation::Code c = 0;
    for (Elem e : t) c = c * ny_ + Relation::Code(phi_[e]);
    if (!membership_[r].empty()) return membership_[r][c] != 0;
    return rel.contains_code(c);
  }

  bool assign(Elem x, Elem v) {
    if (phi_[x] >= 0) return phi_[x] == v;
    if (!allowed_[x][v]) return false;
    if (injective_ && used_[v]) return false;
    phi_[x] = v;
    trail_.push_back(x);
    if (used_[v]++ == 0) ++covered_;
    for (auto [r, t] : incident_[x]) {
      const auto& tup = xtuples_[r][t];
      bool complete = true;
      for (Elem e : tup)
        if (phi_[e] < 0) { complete = false; break; }
      if (complete && !tuple_ok(r, tup)) return false;
    }
    for (std::size_t o = 0; o < x_.ops().size(); ++o)
      if (!assign(x_.op(o)[x], y_.op(o)[v])) return false;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Elem x = trail_.back();
      trail_.pop_back();
      if (--used_[phi_[x]] == 0) --covered_;
      phi_[x] = -1;
    }
  }

  bool reflects() const {
    std::vector<Elem> inverse(ny_, -1);
    for (std::size_t i = 0; i < nx_; ++i) inverse[phi_[i]] = Elem(i);
    for (std::size_t r = 0; r < y_.rels().size(); ++r) {
      const auto& rel = y_.rel(r);
      for (auto c : rel.codes()) {
        auto t = rel.decode(c);
        bool inside = true;
        for (auto& e : t) {
          if (inverse[e] < 0) { inside = false; break; }
          e = inverse[e];
        }
        if (inside && !x_.rel(r).contains(t)) return false;
      }
    }
    return true;
  }

  bool done() const { return limit_ != 0 && results_.size() >= limit_; }

  void search(std::size_t pos) {
    while (pos < order_.size() && phi_[order_[pos]] >= 0) ++pos;
    if (surjective_ && nx_ - trail_.size() < ny_ - covered_) return;
    if (pos == order_.size()) {
      if (surjective_ && covered_ < ny_) return;
      if (mode_ == HomMode::Embedding && !reflects()) return;
      results_.push_back(phi_);
      return;
    }
    Elem x = order_[pos];
    for (std::size_t v = 0; v < ny_ && !done(); ++v) {
      std::size_t mark = trail_.size();
      if (assign(x, Elem(v))) search(pos + 1);
      undo(mark);
    }
  }

  const Structure& x_;
  const Structure& y_;
  HomMode mode_;
  std::size_t limit_;
  std::size_t nx_ = 0, ny_ = 0;
  bool injective_ = false, surjective_ = false;
  std::vector<std::vector<char>> allowed_;
  std::vector<std::vector<std::pair<int, int>>> incident_;
  std::vector<std::vector<std::vector<Elem>>> xtuples_;
  std::vector<std::vector<char>> membership_;
  std::vector<Elem> order_;
  Map phi_;
  std::vector<Elem> trail_;
  std::vector<int> used_;
  std::size_t covered_ = 0;
  std::vector<Map> results_;
};

// Per-element isomorphism invariants.
std::vector<std::vector<long>> element_keys(const Structure& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<long>> keys(n);
  for (const auto& rel : m.rels()) {
    std::vector<std::vector<long>> counts(n, std::vector<long>(rel.arity(), 0));
    for (auto c : rel.codes()) {
      auto t = rel.decode(c);
      for (std::size_t p = 0; p < t.size(); ++p) counts[t[p]][p]++;
    }
    for (std::size_t e = 0; e < n; ++e) keys[e].insert(keys[e].end(), counts[e].begin(), counts[e].end());
  }
  for (const auto& op : m.ops()) {
    std::vector<long> preimages(n, 0);
    for (std::size_t e = 0; e < n; ++e) preimages[op[e]]++;
    for (std::size_t e = 0; e < n; ++e) {
      // tail length and cycle length of the orbit starting at e
      std::map<Elem, long> seen;
      Elem cur = Elem(e);
      long step = 0;
      while (!seen.count(cur)) {
        seen[cur] = step++;
        cur = op[cur];
      }
      keys[e].push_back(seen[cur]);
      keys[e].push_back(step - seen[cur]);
      keys[e].push_back(preimages[e]);
    }
  }
  return keys;
}

}  // namespace

std::vector<Map> hom_search(const Structure& x, const Structure& y, HomMode mode, const HomOptions& options) {
  return HomSearcher(x, y, mode, options).run();
}

std::optional<Map> first_hom(const Structure& x, const Structure& y, HomMode mode, const HomOptions& options) {
  HomOptions o = options;
  o.limit = 1;
  auto found = HomSearcher(x, y, mode == HomMode::All ? HomMode::First : mode, o).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool is_morphism(const Structure& x, const Structure& y, const Map& f) {
  require_same_signature(x, y);
  if (f.size() != x.size()) return false;
  for (Elem v : f)
    if (v < 0 || std::size_t(v) >= y.size()) return false;
  for (std::size_t o = 0; o < x.ops().size(); ++o)
    for (std::size_t e = 0; e < x.size(); ++e)
      if (f[x.op(o)[e]] != y.op(o)[f[e]]) return false;
  for (std::size_t r = 0; r < x.rels().size(); ++r)
    for (auto c : x.rel(r).codes()) {
      auto t = x.rel(r).decode(c);
      for (auto& e : t) e = f[e];
      if (!y.rel(r).contains(t)) return false;
    }
  return true;
}

bool is_embedding(const Structure& x, const Structure& y, const Map& f) {
  if (!is_morphism(x, y, f)) return false;
  std::vector<Elem> inverse(y.size(), -1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (inverse[f[i]] >= 0) return false;
    inverse[f[i]] = Elem(i);
  }
  for (std::size_t r = 0; r < y.rels().size(); ++r)
    for (auto c : y.rel(r).codes()) {
      auto t = y.rel(r).decode(c);
      bool inside = true;
      for (auto& e : t) {
        if (inverse[e] < 0) { inside = false; break; }
        e = inverse[e];
      }
      if (inside && !x.rel(r).contains(t)) return false;
    }
  return true;
}

bool is_surjective(const Map& f, std::size_t target_size) {
  std::vector<char> hit(target_size, 0);
  for (Elem v : f) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::optional<Map> isomorphic(const Structure& x, const Structure& y) {
  if (!(x.signature() == y.signature()) || x.size() != y.size()) return std::nullopt;
  for (std::size_t r = 0; r < x.rels().size(); ++r)
    if (x.rel(r).size() != y.rel(r).size()) return std::nullopt;
  auto kx = element_keys(x);
  auto ky = element_keys(y);
  auto sx = kx, sy = ky;
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  if (sx != sy) return std::nullopt;
  HomOptions options;
  options.domains.resize(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b)
      if (kx[a] == ky[b]) options.domains[a].push_back(Elem(b));
  return first_hom(x, y, HomMode::Embedding, options);
}

std::optional<Map> isomorphic(const OckhamSpace& x, const OckhamSpace& y) {
  return isomorphic(to_structure(x), to_structure(y));
}

std::optional<Map> isomorphic(const OckhamAlgebra& a, const OckhamAlgebra& b) {
  return isomorphic(algebra_structure(a), algebra_structure(b));
}

std::optional<DivisorWitness> divisor(const Structure& x, const Structure& y, const Caps& caps) {
  require_same_signature(x, y);
  require_cap(y.size(), caps.space, "divisor search carrier");
  const std::size_t n = y.size(), k0 = x.size();
  std::vector<std::vector<std::size_t>> x_cycle_lengths;
  for (const auto& op : x.ops()) {
    std::vector<std::size_t> lens;
    for (const auto& c : cycles_of_map(op)) lens.push_back(c.length());
    x_cycle_lengths.push_back(lens);
  }
  for (std::size_t k = k0; k <= n; ++k) {
    std::vector<Elem> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      std::vector<char> member(n, 0);
      for (Elem e : comb) member[e] = 1;
      if (is_op_closed(y, member)) {
        auto sub = induced_substructure(y, comb);
        bool viable = true;
        for (std::size_t o = 0; o < x.ops().size() && viable; ++o) {
          auto zc = cycles_of_map(sub.structure.op(o));
          for (std::size_t len : x_cycle_lengths[o]) {
            bool divides = std::any_of(zc.begin(), zc.end(),
                                       [&](const Cycle& c) { return c.length() % len == 0; });
            if (!divides) { viable = false; break; }
          }
        }
        if (viable) {
          if (auto f = first_hom(sub.structure, x, HomMode::Surjective))
            return DivisorWitness{sub.index_map, *f};
        }
      }
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == Elem(n - k + i - 1)) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<DivisorWitness> divisor(const OckhamSpace& x, const OckhamSpace& y, const Caps& caps) {
  return divisor(to_structure(x), to_structure(y), caps);
}

std::vector<Cycle> cycles_of_map(const Map& f) {
  const std::size_t n = f.size();
  std::vector<char> on_cycle(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    Elem cur = Elem(e);
    for (std::size_t i = 0; i < n; ++i) cur = f[cur];
    on_cycle[cur] = 1;
  }
  // Everything reachable from a landing point along f is on its cycle.
  for (std::size_t e = 0; e < n; ++e)
    if (on_cycle[e])
      for (Elem cur = f[e]; !on_cycle[cur]; cur = f[cur]) on_cycle[cur] = 1;
  std::vector<char> used(n, 0);
  std::vector<Cycle> out;
  for (std::size_t e = 0; e < n; ++e) {
    if (!on_cycle[e] || used[e]) continue;
    Cycle c;
    Elem cur = Elem(e);
    do {
      c.elements.push_back(cur);
      used[cur] = 1;
      cur = f[cur];
    } while (cur != Elem(e));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cycle> cycles(const OckhamSpace& x) { return cycles_of_map(x.g_map()); }

std::vector<Elem> generated(const Structure& m, const std::vector<Elem>& seeds) {
  std::vector<char> member(m.size(), 0);
  std::vector<Elem> stack;
  for (Elem s : seeds) {
    if (s < 0 || std::size_t(s) >= m.size()) throw StructuralError("seed out of range");
    if (!member[s]) {
      member[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    Elem e = stack.back();
    stack.pop_back();
    for (const auto& op : m.ops())
      if (!member[op[e]]) {
        member[op[e]] = 1;
        stack.push_back(op[e]);
      }
  }
  std::vector<Elem> out;
  for (std::size_t e = 0; e < m.size(); ++e)
    if (member[e]) out.push_back(Elem(e));
  return out;
}

Substructure generated_substructure(const Structure& m, const std::vector<Elem>& seeds) {
  return induced_substructure(m, generated(m, seeds));
}

SubSpace generated_subspace(const OckhamSpace& x, const std::vector<Elem>& seeds) {
  return induced_subspace(x, generated(to_structure(x), seeds));
}

bool generates(const Structure& m, const std::vector<Elem>& seeds) {
  return generated(m, seeds).size() == m.size();
}

std::optional<Elem> is_one_generated(const Structure& m) {
  for (std::size_t e = 0; e < m.size(); ++e)
    if (generates(m, {Elem(e)})) return Elem(e);
  return std::nullopt;
}

std::optional<Elem> is_one_generated(const OckhamSpace& x) { return is_one_generated(to_structure(x)); }

IspResult isp_member(const Structure& x, const Structure& a, const Caps& caps) {
  require_same_signature(x, a);
  auto homs = hom_search(x, a);
  IspResult result;
  std::set<std::size_t> chosen;
  auto pick = [&](const std::function<bool(const Map&)>& pred) -> bool {
    for (std::size_t i = 0; i < homs.size(); ++i)
      if (chosen.count(i) && pred(homs[i])) return true;
    for (std::size_t i = 0; i < homs.size(); ++i)
      if (pred(homs[i])) {
        chosen.insert(i);
        return true;
      }
    return false;
  };
  const Elem n = Elem(x.size());
  for (Elem p = 0; p < n; ++p)
    for (Elem q = p + 1; q < n; ++q)
      if (!pick([&](const Map& f) { return f[p] != f[q]; })) {
        result.failure = "points " + std::to_string(p) + " and " + std::to_string(q) + " not separated";
        return result;
      }
  for (std::size_t r = 0; r < x.rels().size(); ++r) {
    const auto& rx = x.rel(r);
    const auto& ra = a.rel(r);
    std::size_t ground = rx.ground_size();
    require_cap(ground, caps.ground, "relation ground set");
    for (Relation::Code c = 0; c < ground; ++c) {
      if (rx.contains_code(c)) continue;
      auto t = rx.decode(c);
      auto fails = [&](const Map& f) {
        std::vector<Elem> img(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) img[i] = f[t[i]];
        return !ra.contains(img);
      };
      if (!pick(fails)) {
        result.failure = "non-tuple of " + x.signature().rels[r].first + " not separated";
        return result;
      }
    }
  }
  result.member = true;
  for (std::size_t i : chosen) result.separating.push_back(homs[i]);
  return result;
}

}  // namespace ockham
