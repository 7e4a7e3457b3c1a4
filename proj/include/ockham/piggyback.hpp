#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ockham/structures.hpp"

namespace ockham {

// Alter ego on K(X): unary op "u" (precomposition with g) and binary relation "leq" (the
// alternating order). Carrier order and labels follow the algebra K(X).
struct AlterEgo {
  Structure structure;
  OckhamAlgebra algebra;
  Elem base_point = 0;
};

// Requires X one-generated by base_point with g order-preserving. Verifies the separation
// condition and throws InternalError if it fails.
AlterEgo piggyback_alter_ego(const OckhamSpace& x, Elem base_point, const Caps& caps = {});

// S_m on K(D_m): compare at the point 0, equal elsewhere.
AlterEgo alternating_alter_ego(std::size_t m, const Caps& caps = {});

// Every relation of M and the graph of every operation of M is compatible with A.
bool is_alter_ego(const OckhamAlgebra& a, const Structure& m);

struct ZStructure {
  Structure structure;
  Map embedding;  // into the carrier of S_m
};

// k = 0: two-element chain a < 1 with u constant 1. k > 0: k-cycle plus a fixed point 0, discrete
// order. Requires k | m for k > 0; the embedding is verified.
ZStructure z_structure(std::size_t k, std::size_t m, const Caps& caps = {});

struct DualClassReport {
  bool order = false;       // leq is a partial order
  bool u_monotone = false;  // x <= y implies u(x) = u(y)
  bool u_extensive = false; // x <= u^m(x)
  bool member = false;
  // Derived properties, evaluated when member.
  bool images_maximal = false;  // u(x) is maximal
  bool maxima_periodic = false; // u^m(x) = x for maximal x
  bool unique_maximal_above = false;
  std::vector<std::string> failures;
};

DualClassReport dual_class_member(const Structure& m_struct, std::size_t m);

struct ShapePart {
  Substructure part;                       // a u-connected component
  std::size_t k = 0;                       // number of maxima in the component
  std::vector<Elem> maxima;                // m_0, u(m_0), ... (indices in the component)
  std::vector<std::vector<Elem>> blocks;   // down-set of each maximum (indices in the component)
};

std::vector<ShapePart> shape_decompose(const Structure& m_struct, std::size_t m);

struct NormalizeResult {
  Structure structure;
  std::vector<Elem> gens;       // indices in structure
  std::vector<Elem> index_map;  // structure -> input structure
  std::vector<int> cases;       // reduction case applied per step
  bool verified = false;        // equivalence of homset relations was checked
};

// Component blocks reduced to the eight forms. The homset relations over S_m of input and output
// are checked equivalent when the map count |S_m|^|S| is within caps.maps.
NormalizeResult normalize(const Structure& m_struct, const std::vector<Elem>& gens, std::size_t m,
                          const Caps& caps = {});

// Does each block of each component match one of the eight forms?
bool in_normal_form(const Structure& m_struct, const std::vector<Elem>& gens, std::size_t m);

struct CensusBound {
  std::size_t classes = 0;
  std::size_t bound = 0;
  std::size_t pairs = 0;  // (X, S) pairs examined
  bool normal_representatives = false;
  bool ok() const { return classes <= bound && normal_representatives; }
};

// All u-connected dual-class members up to size_cap (up to isomorphism) with all generating sets.
CensusBound census_bound_check(std::size_t m, std::size_t size_cap, const Caps& caps = {});

// Posets up to isomorphism on n points, as sorted lists of strict pairs (a,b), a < b in the order.
std::vector<std::vector<std::pair<Elem, Elem>>> posets_up_to_iso(std::size_t n);

// u-connected dual-class members with at most size_cap elements, up to isomorphism.
std::vector<Structure> connected_dual_class_members(std::size_t m, std::size_t size_cap);
// Dual-class members (any number of components) with at most size_cap elements, up to isomorphism.
std::vector<Structure> dual_class_members(std::size_t m, std::size_t size_cap);

// Maximal elements of a dual-class member, ascending.
std::vector<Elem> maximal_elements(const Structure& m_struct);

}  // namespace ockham
