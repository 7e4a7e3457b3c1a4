#include "ockham/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ockham/morphisms.hpp"

namespace ockham {

namespace {

std::vector<Relation::Code> powers_of(std::size_t n, std::size_t k) {
  std::vector<Relation::Code> p(k);
  Relation::Code v = 1;
  for (std::size_t i = k; i-- > 0;) {
    p[i] = v;
    v *= n;
  }
  return p;
}

// Membership test for a relation, by table when its tuple space is small.
class Membership {
 public:
  explicit Membership(const Relation& r) : r_(r) {
    std::size_t ground = r.ground_size();
    if (ground <= (std::size_t(1) << 24)) {
      table_.assign(ground, 0);
      for (auto c : r.codes()) table_[c] = 1;
    }
  }
  bool operator()(Relation::Code c) const { return table_.empty() ? r_.contains_code(c) : table_[c] != 0; }

 private:
  const Relation& r_;
  std::vector<char> table_;
};

// Closure of tuple sets under the coordinatewise operations, with an undo log so that nested
// extensions can be explored depth first.
class TupleClosure {
 public:
  TupleClosure(const FinAlgebra& a, std::size_t k, const Caps& caps) : a_(a), k_(k) {
    if (k == 0) throw StructuralError("relation arity must be positive");
    ground_ = checked_pow(a.size, k);
    require_cap(ground_, caps.ground, "tuple space");
    member_.assign(ground_, 0);
    pow_ = powers_of(a.size, k);
  }

  std::size_t ground() const { return ground_; }
  std::size_t size() const { return codes_.size(); }
  bool contains(Relation::Code c) const { return member_[c] != 0; }
  const std::vector<Relation::Code>& codes() const { return codes_; }

  // Adds a tuple and closes; returns the index where the new elements start.
  std::size_t add_and_close(Relation::Code c) {
    std::size_t mark = codes_.size();
    push(c);
    close(mark);
    return mark;
  }

  void add_constants_and_close() {
    std::size_t mark = codes_.size();
    for (Elem c : a_.constants) {
      Relation::Code code = 0;
      for (std::size_t i = 0; i < k_; ++i) code += Relation::Code(c) * pow_[i];
      push(code);
    }
    close(mark);
  }

  void undo(std::size_t mark) {
    while (codes_.size() > mark) {
      member_[codes_.back()] = 0;
      codes_.pop_back();
      coords_.resize(coords_.size() - k_);
    }
  }

  Relation relation() const { return Relation::from_codes(a_.size, k_, codes_); }

  void push(Relation::Code c) {
    if (member_[c]) return;
    member_[c] = 1;
    codes_.push_back(c);
    Relation::Code v = c;
    std::size_t base = coords_.size();
    coords_.resize(base + k_);
    for (std::size_t i = k_; i-- > 0;) {
      coords_[base + i] = Elem(v % a_.size);
      v /= a_.size;
    }
  }

 private:
  void close(std::size_t from) {
    const std::size_t n = a_.size;
    std::vector<Elem> t(k_);
    for (std::size_t i = from; i < codes_.size(); ++i) {
      for (const auto& op : a_.unary) {
        Relation::Code code = 0;
        for (std::size_t p = 0; p < k_; ++p) code += Relation::Code(op[coords_[i * k_ + p]]) * pow_[p];
        push(code);
      }
      for (std::size_t j = 0; j <= i; ++j)
        for (const auto& op : a_.binary) {
          Relation::Code c1 = 0, c2 = 0;
          for (std::size_t p = 0; p < k_; ++p) {
            Elem x = coords_[i * k_ + p], y = coords_[j * k_ + p];
            c1 += Relation::Code(op[x * n + y]) * pow_[p];
            c2 += Relation::Code(op[y * n + x]) * pow_[p];
          }
          push(c1);
          push(c2);
        }
    }
  }

  const FinAlgebra& a_;
  std::size_t k_;
  std::size_t ground_ = 0;
  std::vector<Relation::Code> pow_;
  std::vector<char> member_;
  std::vector<Relation::Code> codes_;
  std::vector<Elem> coords_;
};

// Conjunctive constraint problem over variables x0..x(k-1) with values in the carrier.
class AtomSolver {
 public:
  AtomSolver(const Relation& s, std::size_t n, std::size_t k, const std::vector<CaAtom>& atoms)
      : s_(s), in_s_(s), n_(n), k_(k), by_last_(k), value_(k, 0) {
    for (const auto& atom : atoms) {
      int last = *std::max_element(atom.vars.begin(), atom.vars.end());
      by_last_[last].push_back(&atom);
    }
    spow_ = powers_of(n, s.arity());
  }

  // True when every solution lies in r (equivalently, since r solves every atom, solutions == r).
  bool solutions_within(const Membership& r_member, const std::vector<Relation::Code>& rpow) {
    r_member_ = &r_member;
    rpow_ = &rpow;
    return rec(0);
  }

 private:
  bool holds(const CaAtom& atom) const {
    if (atom.kind == CaAtom::Kind::Equality) return value_[atom.vars[0]] == value_[atom.vars[1]];
    Relation::Code c = 0;
    for (std::size_t p = 0; p < atom.vars.size(); ++p) c += Relation::Code(value_[atom.vars[p]]) * spow_[p];
    return in_s_(c);
  }

  bool rec(std::size_t i) {
    if (i == k_) {
      Relation::Code c = 0;
      for (std::size_t p = 0; p < k_; ++p) c += Relation::Code(value_[p]) * (*rpow_)[p];
      return (*r_member_)(c);
    }
    for (std::size_t v = 0; v < n_; ++v) {
      value_[i] = Elem(v);
      bool ok = true;
      for (const CaAtom* atom : by_last_[i])
        if (!holds(*atom)) { ok = false; break; }
      if (ok && !rec(i + 1)) return false;
    }
    return true;
  }

  const Relation& s_;
  Membership in_s_;
  std::size_t n_, k_;
  std::vector<std::vector<const CaAtom*>> by_last_;
  std::vector<Elem> value_;
  std::vector<Relation::Code> spow_;
  const Membership* r_member_ = nullptr;
  const std::vector<Relation::Code>* rpow_ = nullptr;
};

bool defines(const std::vector<CaAtom>& atoms, const Relation& r, const Relation& s) {
  Membership rm(r);
  auto rpow = powers_of(r.carrier(), r.arity());
  AtomSolver solver(s, r.carrier(), r.arity(), atoms);
  return solver.solutions_within(rm, rpow);
}

bool atom_trivial(const CaAtom& atom, const Relation& s) {
  if (atom.kind == CaAtom::Kind::Equality) return s.carrier() < 2;
  std::vector<int> distinct = atom.vars;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t n = s.carrier();
  std::size_t total = checked_pow(n, distinct.size());
  std::vector<Elem> val(*std::max_element(atom.vars.begin(), atom.vars.end()) + 1, 0);
  std::vector<Elem> t(atom.vars.size());
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t v = idx;
    for (int d : distinct) {
      val[d] = Elem(v % n);
      v /= n;
    }
    for (std::size_t p = 0; p < t.size(); ++p) t[p] = val[atom.vars[p]];
    if (!s.contains(t)) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string CaFormula::to_string(const std::string& symbol) const {
  if (atoms.empty()) return "true";
  std::ostringstream out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out << " & ";
    const auto& a = atoms[i];
    if (a.kind == CaAtom::Kind::Equality) {
      out << "x" << a.vars[0] + 1 << "=x" << a.vars[1] + 1;
    } else {
      out << symbol << "(";
      for (std::size_t p = 0; p < a.vars.size(); ++p) out << (p ? "," : "") << "x" << a.vars[p] + 1;
      out << ")";
    }
  }
  return out.str();
}

Relation CaFormula::evaluate(const Relation& s) const {
  const std::size_t n = s.carrier();
  std::size_t ground = checked_pow(n, arity);
  Relation probe(n, arity);
  std::vector<Relation::Code> out;
  std::vector<Elem> t(arity);
  for (std::size_t c = 0; c < ground; ++c) {
    t = probe.decode(c);
    bool ok = true;
    for (const auto& a : atoms) {
      if (a.kind == CaAtom::Kind::Equality) {
        ok = t[a.vars[0]] == t[a.vars[1]];
      } else {
        std::vector<Elem> u(a.vars.size());
        for (std::size_t p = 0; p < u.size(); ++p) u[p] = t[a.vars[p]];
        ok = s.contains(u);
      }
      if (!ok) break;
    }
    if (ok) out.push_back(c);
  }
  return Relation::from_codes(n, arity, std::move(out));
}

bool is_compatible(const FinAlgebra& a, const Relation& r) {
  if (r.empty() || r.carrier() != a.size) return false;
  const std::size_t k = r.arity(), n = a.size;
  Membership in_r(r);
  auto pow = powers_of(n, k);
  for (Elem c : a.constants) {
    Relation::Code code = 0;
    for (std::size_t i = 0; i < k; ++i) code += Relation::Code(c) * pow[i];
    if (!in_r(code)) return false;
  }
  auto tuples = r.tuples();
  for (const auto& t : tuples) {
    for (const auto& op : a.unary) {
      Relation::Code code = 0;
      for (std::size_t i = 0; i < k; ++i) code += Relation::Code(op[t[i]]) * pow[i];
      if (!in_r(code)) return false;
    }
    for (const auto& u : tuples)
      for (const auto& op : a.binary) {
        Relation::Code code = 0;
        for (std::size_t i = 0; i < k; ++i) code += Relation::Code(op[t[i] * n + u[i]]) * pow[i];
        if (!in_r(code)) return false;
      }
  }
  return true;
}

bool is_compatible(const OckhamAlgebra& a, const Relation& r) { return is_compatible(as_fin_algebra(a), r); }

Relation generate_closure(const FinAlgebra& a, std::size_t k, const std::vector<std::vector<Elem>>& seeds,
                          const Caps& caps) {
  TupleClosure closure(a, k, caps);
  closure.add_constants_and_close();
  Relation probe(a.size, k);
  for (const auto& t : seeds) {
    if (t.size() != k) throw StructuralError("seed arity mismatch");
    for (Elem e : t)
      if (e < 0 || std::size_t(e) >= a.size) throw StructuralError("seed element out of range");
    closure.add_and_close(probe.encode(t));
  }
  return closure.relation();
}

CaFormula ca_atoms(const Relation& r, const Relation& s, const Caps& caps) {
  if (r.carrier() != s.carrier()) throw StructuralError("relations live on different carriers");
  if (r.arity() == 0 || s.arity() == 0) throw StructuralError("relation arity must be positive");
  const std::size_t k = r.arity(), l = s.arity(), n = r.carrier();
  std::size_t assignments = checked_pow(k, l);
  require_cap(assignments, caps.maps, "atom count");

  Membership in_s(s);
  auto spow = powers_of(n, l);
  auto rt = r.tuples();
  CaFormula f;
  f.arity = k;
  std::vector<int> sigma(l, 0);
  for (std::size_t idx = 0; idx < assignments; ++idx) {
    bool holds = true;
    for (const auto& t : rt) {
      Relation::Code c = 0;
      for (std::size_t p = 0; p < l; ++p) c += Relation::Code(t[sigma[p]]) * spow[p];
      if (!in_s(c)) { holds = false; break; }
    }
    if (holds) f.atoms.push_back({CaAtom::Kind::Relation, sigma});
    for (std::size_t p = l; p-- > 0;) {
      if (++sigma[p] < int(k)) break;
      sigma[p] = 0;
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool holds = std::all_of(rt.begin(), rt.end(), [&](const auto& t) { return t[i] == t[j]; });
      if (holds) f.atoms.push_back({CaAtom::Kind::Equality, {int(i), int(j)}});
    }
  return f;
}

Relation ca_closure(const Relation& r, const Relation& s, const Caps& caps) {
  return ca_atoms(r, s, caps).evaluate(s);
}

std::optional<CaFormula> ca_definable(const Relation& r, const Relation& s, const Caps& caps) {
  CaFormula f = ca_atoms(r, s, caps);
  if (!defines(f.atoms, r, s)) return std::nullopt;
  return f;
}

CaFormula minimize_formula(const CaFormula& f, const Relation& r, const Relation& s) {
  std::vector<CaAtom> atoms;
  for (const auto& a : f.atoms)
    if (!atom_trivial(a, s)) atoms.push_back(a);
  CaFormula out;
  out.arity = f.arity;
  const std::size_t n = atoms.size();
  std::size_t budget = 200000;
  for (std::size_t size = 0; size <= std::min<std::size_t>(n, 4) && budget > 0; ++size) {
    std::vector<std::size_t> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    while (budget > 0) {
      --budget;
      std::vector<CaAtom> pick;
      for (auto i : comb) pick.push_back(atoms[i]);
      if (defines(pick, r, s)) {
        out.atoms = pick;
        return out;
      }
      std::size_t i = size;
      while (i > 0 && comb[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  for (std::size_t i = atoms.size(); i-- > 0;) {
    auto trial = atoms;
    trial.erase(trial.begin() + long(i));
    if (defines(trial, r, s)) atoms = std::move(trial);
  }
  out.atoms = atoms;
  return out;
}

bool equivalent(const Relation& r, const Relation& s, const Caps& caps) {
  return ca_definable(r, s, caps).has_value() && ca_definable(s, r, caps).has_value();
}

Relation project(const Relation& r, const std::vector<int>& coords) {
  std::vector<std::vector<Elem>> out;
  for (const auto& t : r.tuples()) {
    std::vector<Elem> u;
    for (int c : coords) u.push_back(t[c]);
    out.push_back(std::move(u));
  }
  return Relation::from_tuples(r.carrier(), coords.size(), out);
}

std::optional<Decomposition> decompose(const Relation& r) {
  const std::size_t k = r.arity();
  if (k < 2 || r.empty()) return std::nullopt;
  for (std::size_t mask = 1; mask < (std::size_t(1) << (k - 1)); ++mask) {
    Decomposition d;
    d.left.push_back(0);
    for (std::size_t c = 1; c < k; ++c)
      ((mask >> (c - 1)) & 1 ? d.right : d.left).push_back(int(c));
    d.left_factor = project(r, d.left);
    d.right_factor = project(r, d.right);
    if (d.left_factor.size() == d.left_factor.ground_size() ||
        d.right_factor.size() == d.right_factor.ground_size())
      continue;
    if (d.left_factor.size() * d.right_factor.size() == r.size()) return d;
  }
  return std::nullopt;
}

void for_each_compatible(const FinAlgebra& a, std::size_t k, const std::function<bool(const Relation&)>& visit,
                         const Caps& caps) {
  TupleClosure closure(a, k, caps);
  closure.add_constants_and_close();
  bool stop = false;
  // Close-by-one: each closed set is reached once, from the canonical generator.
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (!visit(closure.relation())) {
      stop = true;
      return;
    }
    for (std::size_t j = next; j < closure.ground() && !stop; ++j) {
      if (closure.contains(j)) continue;
      std::size_t mark = closure.add_and_close(j);
      bool canonical = true;
      for (std::size_t i = mark; i < closure.size(); ++i)
        if (closure.codes()[i] < j) { canonical = false; break; }
      if (canonical) self(self, j + 1);
      closure.undo(mark);
    }
  };
  rec(rec, 0);
}

std::vector<Relation> enumerate_compatible(const FinAlgebra& a, std::size_t k, const Caps& caps) {
  std::vector<Relation> out;
  for_each_compatible(a, k, [&](const Relation& r) { out.push_back(r); return true; }, caps);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CensusClass> census(const FinAlgebra& a, std::size_t max_arity, const Caps& caps, bool use_buckets) {
  std::vector<CensusClass> classes;
  std::map<std::vector<Elem>, std::vector<std::size_t>> buckets;
  for (std::size_t k = 1; k <= max_arity; ++k) {
    for (const auto& r : enumerate_compatible(a, k, caps)) {
      std::vector<Elem> diag;
      if (use_buckets)
        for (std::size_t e = 0; e < a.size; ++e)
          if (r.contains(std::vector<Elem>(k, Elem(e)))) diag.push_back(Elem(e));
      auto& bucket = buckets[diag];
      bool found = false;
      for (std::size_t ci : bucket)
        if (equivalent(r, classes[ci].representative, caps)) {
          classes[ci].count++;
          found = true;
          break;
        }
      if (!found) {
        bucket.push_back(classes.size());
        classes.push_back(CensusClass{r, 1});
      }
    }
  }
  return classes;
}

Relation homset_relation(const Structure& x, std::vector<Elem> s, const Structure& a) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw StructuralError("empty generating set");
  if (!generates(x, s)) throw StructuralError("subset does not generate the structure");
  std::vector<std::vector<Elem>> out;
  for (const auto& f : hom_search(x, a)) {
    std::vector<Elem> t;
    for (Elem e : s) t.push_back(f[e]);
    out.push_back(std::move(t));
  }
  return Relation::from_tuples(a.size(), s.size(), out);
}

bool con1_criterion(const Structure& x, std::vector<Elem> s, const Structure& y, std::vector<Elem> t,
                    const Structure& a, const Caps& caps) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  Relation rx = homset_relation(x, s, a);
  Relation ry = homset_relation(y, t, a);
  std::vector<int> pos(x.size(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = int(i);

  HomOptions options;
  options.domains.assign(y.size(), {});
  std::vector<char> in_t(y.size(), 0);
  for (Elem e : t) in_t[e] = 1;
  for (std::size_t e = 0; e < y.size(); ++e) {
    if (in_t[e]) options.domains[e] = s;
    else {
      options.domains[e].resize(x.size());
      std::iota(options.domains[e].begin(), options.domains[e].end(), 0);
    }
  }
  std::vector<std::vector<int>> patterns;
  for (const auto& w : hom_search(y, x, HomMode::All, options)) {
    std::vector<int> p;
    for (Elem e : t) p.push_back(pos[w[e]]);
    patterns.push_back(std::move(p));
  }
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());

  std::size_t total = checked_pow(a.size(), s.size());
  require_cap(total, caps.maps, "maps S -> A");
  Membership in_rx(rx), in_ry(ry);
  auto ypow = powers_of(a.size(), t.size());
  for (Relation::Code c = 0; c < total; ++c) {
    if (in_rx(c)) continue;
    auto phi = rx.decode(c);
    bool refuted = false;
    for (const auto& p : patterns) {
      Relation::Code d = 0;
      for (std::size_t i = 0; i < p.size(); ++i) d += Relation::Code(phi[p[i]]) * ypow[i];
      if (!in_ry(d)) { refuted = true; break; }
    }
    if (!refuted) return false;
  }
  return true;
}

std::optional<Retraction> con2_retraction(const Structure& x, std::vector<Elem> s, std::vector<Elem> y,
                                          std::vector<Elem> t, const Structure* a, const Caps& caps) {
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  std::vector<char> in_y(x.size(), 0), in_s(x.size(), 0);
  for (Elem e : y) in_y[e] = 1;
  for (Elem e : s) in_s[e] = 1;
  if (!is_op_closed(x, in_y)) throw StructuralError("Y is not closed under the operations");
  for (Elem e : t)
    if (!in_y[e] || !in_s[e]) throw StructuralError("T must lie in S and Y");

  HomOptions options;
  options.domains.resize(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (in_y[e]) options.domains[e] = {Elem(e)};
    else if (in_s[e]) options.domains[e] = t;
    else options.domains[e] = y;
  }
  auto found = first_hom(x, x, HomMode::First, options);
  if (!found) return std::nullopt;
  Retraction result{*found, false};
  if (a) {
    auto sub = induced_substructure(x, y);
    std::vector<Elem> t_local;
    for (Elem e : t)
      t_local.push_back(Elem(std::lower_bound(y.begin(), y.end(), e) - y.begin()));
    Relation rx = homset_relation(x, s, *a);
    Relation ry = homset_relation(sub.structure, t_local, *a);
    if (!ca_definable(ry, rx, caps)) throw InternalError("retraction found but CA-definability fails");
    result.verified = true;
  }
  return result;
}

}  // namespace ockham
