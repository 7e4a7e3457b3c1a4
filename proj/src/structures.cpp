#include "ockham/structures.hpp"

#include <algorithm>
#include <sstream>

namespace ockham {

namespace {

void check_index(Elem e, std::size_t n, const char* what) {
  if (e < 0 || static_cast<std::size_t>(e) >= n)
    throw StructuralError(std::string(what) + ": index " + std::to_string(e) + " out of range");
}

std::string default_label(Elem a) { return std::to_string(a); }

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (!labels.empty() && labels.size() != n)
    throw StructuralError("label count does not match carrier size");
}

}  // namespace

std::string ValidationReport::describe() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.axiom << " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : "") << v.witness[i];
    out << ")\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::size_t carrier, std::size_t arity) : carrier_(carrier), arity_(arity) {}

Relation Relation::from_tuples(std::size_t carrier, std::size_t arity,
                               const std::vector<std::vector<Elem>>& tuples) {
  Relation r(carrier, arity);
  if (checked_pow(carrier, arity) == SIZE_MAX) throw ResourceError("tuple space too large to encode");
  r.codes_.reserve(tuples.size());
  for (const auto& t : tuples) {
    if (t.size() != arity) throw StructuralError("tuple arity mismatch");
    for (Elem e : t) check_index(e, carrier, "relation tuple");
    r.codes_.push_back(r.encode(t));
  }
  std::sort(r.codes_.begin(), r.codes_.end());
  r.codes_.erase(std::unique(r.codes_.begin(), r.codes_.end()), r.codes_.end());
  return r;
}

Relation Relation::from_codes(std::size_t carrier, std::size_t arity, std::vector<Code> codes) {
  Relation r(carrier, arity);
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  r.codes_ = std::move(codes);
  return r;
}

Relation Relation::full(std::size_t carrier, std::size_t arity) {
  Relation r(carrier, arity);
  std::size_t n = checked_pow(carrier, arity);
  if (n == SIZE_MAX) throw ResourceError("tuple space too large");
  r.codes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.codes_[i] = i;
  return r;
}

Relation::Code Relation::encode(std::span<const Elem> t) const {
  Code c = 0;
  for (Elem e : t) c = c * carrier_ + static_cast<Code>(e);
  return c;
}

std::vector<Elem> Relation::decode(Code c) const {
  std::vector<Elem> t(arity_);
  for (std::size_t i = arity_; i-- > 0;) {
    t[i] = static_cast<Elem>(c % carrier_);
    c /= carrier_;
  }
  return t;
}

std::vector<std::vector<Elem>> Relation::tuples() const {
  std::vector<std::vector<Elem>> out;
  out.reserve(codes_.size());
  for (Code c : codes_) out.push_back(decode(c));
  return out;
}

bool Relation::contains(std::span<const Elem> t) const { return contains_code(encode(t)); }

bool Relation::contains_code(Code c) const {
  return std::binary_search(codes_.begin(), codes_.end(), c);
}

std::size_t Relation::ground_size() const { return checked_pow(carrier_, arity_); }

// ---------------------------------------------------------------------------
// Ockham spaces

ValidationReport validate_ockham_space(const RawSpace& raw, bool close_order) {
  const std::size_t n = raw.size;
  if (n == 0) throw StructuralError("empty carrier");
  if (raw.g.size() != n) throw StructuralError("g must list one image per element");
  for (Elem e : raw.g) check_index(e, n, "g");
  for (auto [a, b] : raw.leq_pairs) {
    check_index(a, n, "leq_pairs");
    check_index(b, n, "leq_pairs");
  }
  check_labels(raw.labels, n);

  std::vector<char> le(n * n, 0);
  for (auto [a, b] : raw.leq_pairs) le[a * n + b] = 1;
  if (close_order) {
    for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (le[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (le[k * n + j]) le[i * n + j] = 1;
  }

  ValidationReport report;
  auto L = [&](std::size_t a, std::size_t b) { return le[a * n + b] != 0; };
  auto add = [&](const char* axiom, std::vector<Elem> w) { report.violations.push_back({axiom, std::move(w)}); };

  for (std::size_t a = 0; a < n; ++a)
    if (!L(a, a)) { add("reflexive", {Elem(a)}); break; }
  [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && L(a, b) && L(b, a)) { add("antisymmetric", {Elem(a), Elem(b)}); return; }
  }();
  [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (L(a, b))
          for (std::size_t c = 0; c < n; ++c)
            if (L(b, c) && !L(a, c)) { add("transitive", {Elem(a), Elem(b), Elem(c)}); return; }
  }();
  [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (L(a, b) && !L(raw.g[b], raw.g[a])) { add("order-reversing", {Elem(a), Elem(b)}); return; }
  }();
  return report;
}

OckhamSpace OckhamSpace::from_raw(const RawSpace& raw) {
  auto report = validate_ockham_space(raw, true);
  if (!report.ok()) throw StructuralError("not an Ockham space: " + report.describe());
  OckhamSpace x;
  const std::size_t n = raw.size;
  x.size_ = n;
  x.order_.assign(n * n, 0);
  for (auto [a, b] : raw.leq_pairs) x.order_[a * n + b] = 1;
  for (std::size_t i = 0; i < n; ++i) x.order_[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (x.order_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (x.order_[k * n + j]) x.order_[i * n + j] = 1;
  x.g_ = raw.g;
  x.labels_ = raw.labels;
  return x;
}

OckhamSpace OckhamSpace::make(std::size_t size, const std::vector<std::pair<Elem, Elem>>& leq_pairs,
                              std::vector<Elem> g, std::vector<std::string> labels) {
  RawSpace raw{size, leq_pairs, std::move(g), std::move(labels)};
  return from_raw(raw);
}

std::string OckhamSpace::label(Elem a) const {
  return labels_.empty() ? default_label(a) : labels_[a];
}

std::vector<std::pair<Elem, Elem>> OckhamSpace::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const Elem n = static_cast<Elem>(size_);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

RawSpace OckhamSpace::to_raw() const { return RawSpace{size_, covers(), g_, labels_}; }

// ---------------------------------------------------------------------------
// Ockham algebras

ValidationReport validate_ockham_algebra(const RawAlgebra& raw) {
  const std::size_t n = raw.size;
  if (n == 0) throw StructuralError("empty carrier");
  auto check_table = [&](const std::vector<std::vector<Elem>>& t, const char* name) {
    if (t.size() != n) throw StructuralError(std::string(name) + " table has wrong row count");
    for (const auto& row : t) {
      if (row.size() != n) throw StructuralError(std::string(name) + " table has wrong row length");
      for (Elem e : row) check_index(e, n, name);
    }
  };
  check_table(raw.join, "join");
  check_table(raw.meet, "meet");
  if (raw.neg.size() != n) throw StructuralError("neg must list one image per element");
  for (Elem e : raw.neg) check_index(e, n, "neg");
  check_index(raw.bot, n, "bot");
  check_index(raw.top, n, "top");
  check_labels(raw.labels, n);

  ValidationReport report;
  auto J = [&](Elem a, Elem b) { return raw.join[a][b]; };
  auto M = [&](Elem a, Elem b) { return raw.meet[a][b]; };
  auto F = [&](Elem a) { return raw.neg[a]; };
  const Elem N = static_cast<Elem>(n);
  auto unary = [&](const char* axiom, auto pred) {
    for (Elem a = 0; a < N; ++a)
      if (!pred(a)) { report.violations.push_back({axiom, {a}}); return; }
  };
  auto binary = [&](const char* axiom, auto pred) {
    for (Elem a = 0; a < N; ++a)
      for (Elem b = 0; b < N; ++b)
        if (!pred(a, b)) { report.violations.push_back({axiom, {a, b}}); return; }
  };
  auto ternary = [&](const char* axiom, auto pred) {
    for (Elem a = 0; a < N; ++a)
      for (Elem b = 0; b < N; ++b)
        for (Elem c = 0; c < N; ++c)
          if (!pred(a, b, c)) { report.violations.push_back({axiom, {a, b, c}}); return; }
  };

  unary("join idempotent", [&](Elem a) { return J(a, a) == a; });
  unary("meet idempotent", [&](Elem a) { return M(a, a) == a; });
  binary("join commutative", [&](Elem a, Elem b) { return J(a, b) == J(b, a); });
  binary("meet commutative", [&](Elem a, Elem b) { return M(a, b) == M(b, a); });
  ternary("join associative", [&](Elem a, Elem b, Elem c) { return J(J(a, b), c) == J(a, J(b, c)); });
  ternary("meet associative", [&](Elem a, Elem b, Elem c) { return M(M(a, b), c) == M(a, M(b, c)); });
  binary("absorption", [&](Elem a, Elem b) { return J(a, M(a, b)) == a && M(a, J(a, b)) == a; });
  ternary("distributive",
          [&](Elem a, Elem b, Elem c) { return M(a, J(b, c)) == J(M(a, b), M(a, c)); });
  unary("bounds", [&](Elem a) { return J(a, raw.bot) == a && M(a, raw.top) == a; });
  if (F(raw.bot) != raw.top) report.violations.push_back({"negation of bottom is top", {raw.bot}});
  if (F(raw.top) != raw.bot) report.violations.push_back({"negation of top is bottom", {raw.top}});
  binary("De Morgan join", [&](Elem a, Elem b) { return F(J(a, b)) == M(F(a), F(b)); });
  binary("De Morgan meet", [&](Elem a, Elem b) { return F(M(a, b)) == J(F(a), F(b)); });
  return report;
}

OckhamAlgebra OckhamAlgebra::from_raw(const RawAlgebra& raw, bool validate) {
  if (validate) {
    auto report = validate_ockham_algebra(raw);
    if (!report.ok()) throw StructuralError("not an Ockham algebra: " + report.describe());
  }
  OckhamAlgebra a;
  const std::size_t n = raw.size;
  a.size_ = n;
  a.join_.resize(n * n);
  a.meet_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a.join_[i * n + j] = raw.join[i][j];
      a.meet_[i * n + j] = raw.meet[i][j];
    }
  a.neg_ = raw.neg;
  a.bot_ = raw.bot;
  a.top_ = raw.top;
  a.labels_ = raw.labels;
  return a;
}

std::string OckhamAlgebra::label(Elem a) const {
  return labels_.empty() ? default_label(a) : labels_[a];
}

RawAlgebra OckhamAlgebra::to_raw() const {
  RawAlgebra raw;
  raw.size = size_;
  raw.join.assign(size_, std::vector<Elem>(size_));
  raw.meet.assign(size_, std::vector<Elem>(size_));
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) {
      raw.join[i][j] = join_[i * size_ + j];
      raw.meet[i][j] = meet_[i * size_ + j];
    }
  raw.neg = neg_;
  raw.bot = bot_;
  raw.top = top_;
  raw.labels = labels_;
  return raw;
}

OckhamAlgebra algebra_from_order(std::size_t n, const std::vector<std::pair<Elem, Elem>>& leq_pairs,
                                 const std::vector<Elem>& neg, std::vector<std::string> labels) {
  RawSpace order{n, leq_pairs, std::vector<Elem>(n, 0), {}};
  auto rep = validate_ockham_space(order, true);
  for (const auto& v : rep.violations)
    if (v.axiom != "order-reversing") throw StructuralError("not a partial order: " + v.axiom);
  std::vector<char> le(n * n, 0);
  for (auto [a, b] : leq_pairs) le[a * n + b] = 1;
  for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k * n + j]) le[i * n + j] = 1;
  auto L = [&](std::size_t a, std::size_t b) { return le[a * n + b] != 0; };

  RawAlgebra raw;
  raw.size = n;
  raw.join.assign(n, std::vector<Elem>(n, -1));
  raw.meet.assign(n, std::vector<Elem>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (L(a, c) && L(b, c)) {
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d)
            if (L(a, d) && L(b, d) && !L(c, d)) least = false;
          if (least) raw.join[a][b] = Elem(c);
        }
        if (L(c, a) && L(c, b)) {
          bool greatest = true;
          for (std::size_t d = 0; d < n && greatest; ++d)
            if (L(d, a) && L(d, b) && !L(d, c)) greatest = false;
          if (greatest) raw.meet[a][b] = Elem(c);
        }
      }
      if (raw.join[a][b] < 0 || raw.meet[a][b] < 0) throw StructuralError("order is not a lattice");
    }
  raw.bot = raw.top = -1;
  for (std::size_t c = 0; c < n; ++c) {
    bool is_bot = true, is_top = true;
    for (std::size_t d = 0; d < n; ++d) {
      if (!L(c, d)) is_bot = false;
      if (!L(d, c)) is_top = false;
    }
    if (is_bot) raw.bot = Elem(c);
    if (is_top) raw.top = Elem(c);
  }
  raw.neg = neg;
  raw.labels = std::move(labels);
  return OckhamAlgebra::from_raw(raw);
}

FinAlgebra as_fin_algebra(const OckhamAlgebra& a) {
  FinAlgebra f;
  const std::size_t n = a.size();
  f.size = n;
  std::vector<Elem> j(n * n), m(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      j[x * n + y] = a.join(Elem(x), Elem(y));
      m[x * n + y] = a.meet(Elem(x), Elem(y));
    }
  f.binary = {std::move(j), std::move(m)};
  f.unary = {a.neg_map()};
  f.constants = {a.bot(), a.top()};
  return f;
}

FinAlgebra two_element_lattice() {
  FinAlgebra f;
  f.size = 2;
  f.binary = {{0, 1, 1, 1}, {0, 0, 0, 1}};
  f.constants = {0, 1};
  return f;
}

// ---------------------------------------------------------------------------
// Structures

std::optional<std::size_t> Signature::op_index(const std::string& name) const {
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Signature::rel_index(const std::string& name) const {
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (rels[i].first == name) return i;
  return std::nullopt;
}

Structure::Structure(Signature sig, std::size_t size, std::vector<std::vector<Elem>> ops,
                     std::vector<Relation> rels, std::vector<std::string> labels)
    : sig_(std::move(sig)), size_(size), ops_(std::move(ops)), rels_(std::move(rels)),
      labels_(std::move(labels)) {
  if (size_ == 0) throw StructuralError("empty carrier");
  if (ops_.size() != sig_.ops.size()) throw StructuralError("operation count does not match signature");
  if (rels_.size() != sig_.rels.size()) throw StructuralError("relation count does not match signature");
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].size() != size_) throw StructuralError("operation " + sig_.ops[i] + " has wrong length");
    for (Elem e : ops_[i]) check_index(e, size_, sig_.ops[i].c_str());
  }
  for (std::size_t i = 0; i < rels_.size(); ++i) {
    if (rels_[i].arity() != sig_.rels[i].second)
      throw StructuralError("relation " + sig_.rels[i].first + " has wrong arity");
    if (rels_[i].carrier() != size_)
      throw StructuralError("relation " + sig_.rels[i].first + " has wrong carrier");
  }
  check_labels(labels_, size_);
}

const Relation& Structure::rel(const std::string& name) const {
  auto i = sig_.rel_index(name);
  if (!i) throw StructuralError("no relation named " + name);
  return rels_[*i];
}

const std::vector<Elem>& Structure::op(const std::string& name) const {
  auto i = sig_.op_index(name);
  if (!i) throw StructuralError("no operation named " + name);
  return ops_[*i];
}

std::string Structure::label(Elem a) const {
  return labels_.empty() ? default_label(a) : labels_[a];
}

void Structure::set_labels(std::vector<std::string> labels) {
  check_labels(labels, size_);
  labels_ = std::move(labels);
}

Structure to_structure(const OckhamSpace& x) {
  Signature sig{{"g"}, {{"leq", 2}}};
  std::vector<std::vector<Elem>> pairs;
  const Elem n = static_cast<Elem>(x.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (x.leq(a, b)) pairs.push_back({a, b});
  return Structure(sig, x.size(), {x.g_map()}, {Relation::from_tuples(x.size(), 2, pairs)},
                   x.labels());
}

OckhamSpace space_from_structure(const Structure& s) {
  auto gi = s.signature().op_index("g");
  auto li = s.signature().rel_index("leq");
  if (!gi || !li || s.rel(*li).arity() != 2) throw StructuralError("structure is not an Ockham space");
  RawSpace raw;
  raw.size = s.size();
  for (const auto& t : s.rel(*li).tuples()) raw.leq_pairs.emplace_back(t[0], t[1]);
  raw.g = s.op(*gi);
  raw.labels = s.labels();
  auto rep = validate_ockham_space(raw, false);
  if (!rep.ok()) throw StructuralError("structure is not an Ockham space: " + rep.describe());
  return OckhamSpace::from_raw(raw);
}

Structure algebra_structure(const OckhamAlgebra& a) {
  Signature sig{{"f"}, {{"join", 3}, {"meet", 3}, {"bot", 1}, {"top", 1}}};
  const std::size_t n = a.size();
  std::vector<std::vector<Elem>> j, m;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      j.push_back({Elem(x), Elem(y), a.join(Elem(x), Elem(y))});
      m.push_back({Elem(x), Elem(y), a.meet(Elem(x), Elem(y))});
    }
  return Structure(sig, n, {a.neg_map()},
                   {Relation::from_tuples(n, 3, j), Relation::from_tuples(n, 3, m),
                    Relation::from_tuples(n, 1, {{a.bot()}}), Relation::from_tuples(n, 1, {{a.top()}})},
                   a.labels());
}

bool is_op_closed(const Structure& m, const std::vector<char>& member) {
  for (const auto& op : m.ops())
    for (std::size_t x = 0; x < m.size(); ++x)
      if (member[x] && !member[op[x]]) return false;
  return true;
}

Substructure induced_substructure(const Structure& m, std::vector<Elem> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw StructuralError("empty subset");
  std::vector<Elem> pos(m.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    check_index(subset[i], m.size(), "subset");
    pos[subset[i]] = Elem(i);
  }
  std::vector<std::vector<Elem>> ops;
  for (std::size_t o = 0; o < m.ops().size(); ++o) {
    std::vector<Elem> table;
    for (Elem x : subset) {
      Elem y = m.op(o)[x];
      if (pos[y] < 0)
        throw StructuralError("subset not closed: " + m.signature().ops[o] + "(" + std::to_string(x) +
                              ") = " + std::to_string(y) + " escapes");
      table.push_back(pos[y]);
    }
    ops.push_back(std::move(table));
  }
  std::vector<Relation> rels;
  for (const auto& r : m.rels()) {
    std::vector<std::vector<Elem>> kept;
    for (const auto& t : r.tuples()) {
      std::vector<Elem> u;
      for (Elem e : t) {
        if (pos[e] < 0) break;
        u.push_back(pos[e]);
      }
      if (u.size() == t.size()) kept.push_back(std::move(u));
    }
    rels.push_back(Relation::from_tuples(subset.size(), r.arity(), kept));
  }
  std::vector<std::string> labels;
  if (!m.labels().empty())
    for (Elem x : subset) labels.push_back(m.labels()[x]);
  return Substructure{Structure(m.signature(), subset.size(), std::move(ops), std::move(rels), labels),
                      subset};
}

SubSpace induced_subspace(const OckhamSpace& x, std::vector<Elem> subset) {
  auto sub = induced_substructure(to_structure(x), std::move(subset));
  return SubSpace{space_from_structure(sub.structure), sub.index_map};
}

Structure power_structure(const Structure& m, std::size_t n, const Caps& caps) {
  if (n == 0) throw StructuralError("power exponent must be positive");
  std::size_t size = checked_pow(m.size(), n);
  require_cap(size, caps.power, "power structure size");
  auto coords = [&](std::size_t idx) {
    std::vector<Elem> c(n);
    for (std::size_t i = n; i-- > 0;) {
      c[i] = Elem(idx % m.size());
      idx /= m.size();
    }
    return c;
  };
  auto index = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (Elem e : c) idx = idx * m.size() + std::size_t(e);
    return Elem(idx);
  };
  std::vector<std::vector<Elem>> ops;
  for (const auto& op : m.ops()) {
    std::vector<Elem> table(size);
    for (std::size_t i = 0; i < size; ++i) {
      auto c = coords(i);
      for (auto& e : c) e = op[e];
      table[i] = index(c);
    }
    ops.push_back(std::move(table));
  }
  std::vector<Relation> rels;
  for (const auto& r : m.rels()) {
    const std::size_t k = r.arity();
    std::size_t count = checked_pow(r.size(), n);
    require_cap(count, caps.ground, "power relation size");
    auto base = r.tuples();
    std::vector<std::vector<Elem>> out;
    out.reserve(count);
    std::vector<std::size_t> choice(n, 0);
    for (std::size_t t = 0; t < count; ++t) {
      std::vector<Elem> tuple(k);
      for (std::size_t pos = 0; pos < k; ++pos) {
        std::vector<Elem> c(n);
        for (std::size_t j = 0; j < n; ++j) c[j] = base[choice[j]][pos];
        tuple[pos] = index(c);
      }
      out.push_back(std::move(tuple));
      for (std::size_t j = n; j-- > 0;) {
        if (++choice[j] < base.size()) break;
        choice[j] = 0;
      }
    }
    rels.push_back(Relation::from_tuples(size, k, out));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) {
    auto c = coords(i);
    std::string l = "(";
    for (std::size_t j = 0; j < n; ++j) l += (j ? "," : "") + m.label(c[j]);
    labels.push_back(l + ")");
  }
  return Structure(m.signature(), size, std::move(ops), std::move(rels), std::move(labels));
}

bool is_order(const Relation& r) {
  if (r.arity() != 2) return false;
  const std::size_t n = r.carrier();
  std::vector<char> le(n * n, 0);
  for (auto c : r.codes()) le[c] = 1;
  for (std::size_t a = 0; a < n; ++a) {
    if (!le[a * n + a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le[a * n + b] && le[b * n + a]) return false;
      if (le[a * n + b])
        for (std::size_t c = 0; c < n; ++c)
          if (le[b * n + c] && !le[a * n + c]) return false;
    }
  }
  return true;
}

}  // namespace ockham
