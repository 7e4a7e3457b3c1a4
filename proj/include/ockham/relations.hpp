#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ockham/structures.hpp"

namespace ockham {

// Atom of a conjunctive formula over variables x0..x(k-1): either the defining relation applied
// to a variable tuple, or an equality between two variables.
struct CaAtom {
  enum class Kind { Relation, Equality };
  Kind kind = Kind::Relation;
  std::vector<int> vars;

  bool operator==(const CaAtom&) const = default;
};

struct CaFormula {
  std::size_t arity = 0;
  std::vector<CaAtom> atoms;

  // 1-based variables, e.g. "s(x1,x1,x2,x2) & x3=x4"; the empty conjunction prints as "true".
  std::string to_string(const std::string& symbol = "s") const;
  Relation evaluate(const Relation& s) const;
};

bool is_compatible(const FinAlgebra& a, const Relation& r);
bool is_compatible(const OckhamAlgebra& a, const Relation& r);

// Least compatible relation of arity k containing the seeds.
Relation generate_closure(const FinAlgebra& a, std::size_t k, const std::vector<std::vector<Elem>>& seeds,
                          const Caps& caps = {});

// Conjunction of every atom in s (and every equality) that holds on all of r.
CaFormula ca_atoms(const Relation& r, const Relation& s, const Caps& caps = {});
// Least relation containing r that is conjunct-atomic definable from s.
Relation ca_closure(const Relation& r, const Relation& s, const Caps& caps = {});
// ca_atoms(r, s) when it defines exactly r.
std::optional<CaFormula> ca_definable(const Relation& r, const Relation& s, const Caps& caps = {});
// Smallest sub-conjunction of a defining formula that still defines r (searched up to a few atoms,
// then irredundant by greedy removal).
CaFormula minimize_formula(const CaFormula& f, const Relation& r, const Relation& s);
bool equivalent(const Relation& r, const Relation& s, const Caps& caps = {});

Relation project(const Relation& r, const std::vector<int>& coords);

struct Decomposition {
  std::vector<int> left, right;  // coordinate blocks, left contains coordinate 0
  Relation left_factor, right_factor;
};

// Splits r as a product of two non-trivial projections along a bipartition of coordinates.
std::optional<Decomposition> decompose(const Relation& r);

// Visits every compatible relation of arity k; returning false from the visitor stops early.
void for_each_compatible(const FinAlgebra& a, std::size_t k, const std::function<bool(const Relation&)>& visit,
                         const Caps& caps = {});
std::vector<Relation> enumerate_compatible(const FinAlgebra& a, std::size_t k, const Caps& caps = {});

struct CensusClass {
  Relation representative;  // least arity, then least tuple set
  std::size_t count = 0;
};

// Equivalence classes of compatible relations of arity 1..max_arity. The diagonal
// {a : (a,...,a) in r} is invariant under equivalence and is used to bucket candidates.
std::vector<CensusClass> census(const FinAlgebra& a, std::size_t max_arity, const Caps& caps = {},
                                bool use_buckets = true);

// Restrictions to S (ascending) of all morphisms X -> A.
Relation homset_relation(const Structure& x, std::vector<Elem> s, const Structure& a);

// Every map S -> A not extending to X is refuted by some ω: Y -> X with ω(T) ⊆ S.
bool con1_criterion(const Structure& x, std::vector<Elem> s, const Structure& y, std::vector<Elem> t,
                    const Structure& a, const Caps& caps = {});

struct Retraction {
  Map map;             // X -> X, identity on Y, image inside Y, S mapped into T
  bool verified = false;  // homset relation of (Y,T) checked CA-definable from that of (X,S)
};

// Y and T are given as subsets of X's carrier; Y must be op-closed and T ⊆ S ∩ Y.
std::optional<Retraction> con2_retraction(const Structure& x, std::vector<Elem> s, std::vector<Elem> y,
                                          std::vector<Elem> t, const Structure* a = nullptr,
                                          const Caps& caps = {});

}  // namespace ockham
