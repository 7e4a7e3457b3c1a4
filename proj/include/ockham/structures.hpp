#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ockham/common.hpp"

namespace ockham {

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

// Finite relation: sorted, duplicate-free tuples encoded base-n, most significant coordinate first.
class Relation {
 public:
  using Code = std::uint64_t;

  Relation() = default;
  Relation(std::size_t carrier, std::size_t arity);
  static Relation from_tuples(std::size_t carrier, std::size_t arity,
                              const std::vector<std::vector<Elem>>& tuples);
  static Relation from_codes(std::size_t carrier, std::size_t arity, std::vector<Code> codes);
  static Relation full(std::size_t carrier, std::size_t arity);

  std::size_t carrier() const { return carrier_; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  const std::vector<Code>& codes() const { return codes_; }

  Code encode(std::span<const Elem> t) const;
  std::vector<Elem> decode(Code c) const;
  std::vector<Elem> tuple(std::size_t i) const { return decode(codes_[i]); }
  std::vector<std::vector<Elem>> tuples() const;
  bool contains(std::span<const Elem> t) const;
  bool contains_code(Code c) const;
  // carrier^arity, or SIZE_MAX when that overflows.
  std::size_t ground_size() const;

  bool operator==(const Relation& o) const = default;
  auto operator<=>(const Relation& o) const = default;

 private:
  std::size_t carrier_ = 0;
  std::size_t arity_ = 0;
  std::vector<Code> codes_;
};

struct RawSpace {
  std::size_t size = 0;
  std::vector<std::pair<Elem, Elem>> leq_pairs;
  std::vector<Elem> g;
  std::vector<std::string> labels;
};

// Checks index ranges and throws StructuralError on a malformed shape. With close_order the
// reflexive-transitive closure of leq_pairs is validated, otherwise the pairs are taken literally.
ValidationReport validate_ockham_space(const RawSpace& raw, bool close_order = true);

class OckhamSpace {
 public:
  OckhamSpace() = default;
  // Closure is applied; throws StructuralError when the result is not an Ockham space.
  static OckhamSpace make(std::size_t size, const std::vector<std::pair<Elem, Elem>>& leq_pairs,
                          std::vector<Elem> g, std::vector<std::string> labels = {});
  static OckhamSpace from_raw(const RawSpace& raw);

  std::size_t size() const { return size_; }
  bool leq(Elem a, Elem b) const { return order_[a * size_ + b] != 0; }
  Elem g(Elem a) const { return g_[a]; }
  const std::vector<Elem>& g_map() const { return g_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;
  std::vector<std::pair<Elem, Elem>> covers() const;
  RawSpace to_raw() const;

  bool operator==(const OckhamSpace& o) const {
    return size_ == o.size_ && order_ == o.order_ && g_ == o.g_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<char> order_;
  std::vector<Elem> g_;
  std::vector<std::string> labels_;
};

struct RawAlgebra {
  std::size_t size = 0;
  std::vector<std::vector<Elem>> join;
  std::vector<std::vector<Elem>> meet;
  std::vector<Elem> neg;
  Elem bot = 0;
  Elem top = 0;
  std::vector<std::string> labels;
};

ValidationReport validate_ockham_algebra(const RawAlgebra& raw);

class OckhamAlgebra {
 public:
  OckhamAlgebra() = default;
  // Validation is O(n^3); internal constructions that are correct by construction may skip it.
  static OckhamAlgebra from_raw(const RawAlgebra& raw, bool validate = true);

  std::size_t size() const { return size_; }
  Elem join(Elem a, Elem b) const { return join_[a * size_ + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }
  const std::vector<Elem>& neg_map() const { return neg_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;
  RawAlgebra to_raw() const;

  bool operator==(const OckhamAlgebra& o) const {
    return size_ == o.size_ && join_ == o.join_ && meet_ == o.meet_ && neg_ == o.neg_ &&
           bot_ == o.bot_ && top_ == o.top_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Elem> join_, meet_, neg_;
  Elem bot_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

// Bounded distributive lattice given by its order, with a negation map. Throws if invalid.
OckhamAlgebra algebra_from_order(std::size_t size, const std::vector<std::pair<Elem, Elem>>& leq_pairs,
                                 const std::vector<Elem>& neg, std::vector<std::string> labels = {});

// Generic finite algebra: binary and unary operation tables plus constants.
struct FinAlgebra {
  std::size_t size = 0;
  std::vector<std::vector<Elem>> binary;  // each n*n, row-major
  std::vector<std::vector<Elem>> unary;
  std::vector<Elem> constants;
};

FinAlgebra as_fin_algebra(const OckhamAlgebra& a);
FinAlgebra two_element_lattice();

struct Signature {
  std::vector<std::string> ops;                          // unary operation names
  std::vector<std::pair<std::string, std::size_t>> rels;  // name, arity

  bool operator==(const Signature&) const = default;
  std::optional<std::size_t> op_index(const std::string& name) const;
  std::optional<std::size_t> rel_index(const std::string& name) const;
};

class Structure {
 public:
  Structure() = default;
  // Throws StructuralError on arity or range mismatches.
  Structure(Signature sig, std::size_t size, std::vector<std::vector<Elem>> ops,
            std::vector<Relation> rels, std::vector<std::string> labels = {});

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return size_; }
  const std::vector<Elem>& op(std::size_t i) const { return ops_[i]; }
  const std::vector<std::vector<Elem>>& ops() const { return ops_; }
  const Relation& rel(std::size_t i) const { return rels_[i]; }
  const std::vector<Relation>& rels() const { return rels_; }
  const Relation& rel(const std::string& name) const;
  const std::vector<Elem>& op(const std::string& name) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;
  void set_labels(std::vector<std::string> labels);

  bool operator==(const Structure& o) const {
    return sig_ == o.sig_ && size_ == o.size_ && ops_ == o.ops_ && rels_ == o.rels_;
  }

 private:
  Signature sig_;
  std::size_t size_ = 0;
  std::vector<std::vector<Elem>> ops_;
  std::vector<Relation> rels_;
  std::vector<std::string> labels_;
};

// Ockham space as a structure with op "g" and binary relation "leq".
Structure to_structure(const OckhamSpace& x);
// Inverse of to_structure; throws unless the structure is a valid Ockham space.
OckhamSpace space_from_structure(const Structure& s);
// Ockham algebra as a relational structure: op "f", graphs "join"/"meet", unary "bot"/"top".
Structure algebra_structure(const OckhamAlgebra& a);

struct Substructure {
  Structure structure;
  std::vector<Elem> index_map;  // new index -> old index, ascending
};

struct SubSpace {
  OckhamSpace space;
  std::vector<Elem> index_map;
};

// Throws StructuralError naming the escaping element when the subset is not closed.
Substructure induced_substructure(const Structure& m, std::vector<Elem> subset);
SubSpace induced_subspace(const OckhamSpace& x, std::vector<Elem> subset);

// Elements of M^n in lexicographic order of tuples; relations and ops pointwise.
Structure power_structure(const Structure& m, std::size_t n, const Caps& caps = {});

bool is_order(const Relation& r);
bool is_op_closed(const Structure& m, const std::vector<char>& member);

}  // namespace ockham
