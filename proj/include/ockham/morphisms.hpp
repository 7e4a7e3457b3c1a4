#pragma once

#include <optional>
#include <vector>

#include "ockham/structures.hpp"

namespace ockham {

enum class HomMode { All, First, Surjective, Injective, Embedding };

struct HomOptions {
  // Optional per-element candidate lists. An empty outer list leaves every element unconstrained;
  // an empty inner list admits no value.
  std::vector<std::vector<Elem>> domains;
  // Stop after this many solutions (0 = no limit).
  std::size_t limit = 0;
};

// Morphisms X -> Y (ops commute, relations preserved). Except in First mode, results are sorted
// lexicographically. First returns the first solution in search order.
std::vector<Map> hom_search(const Structure& x, const Structure& y, HomMode mode = HomMode::All,
                            const HomOptions& options = {});
std::optional<Map> first_hom(const Structure& x, const Structure& y, HomMode mode = HomMode::First,
                             const HomOptions& options = {});

bool is_morphism(const Structure& x, const Structure& y, const Map& f);
bool is_embedding(const Structure& x, const Structure& y, const Map& f);
bool is_surjective(const Map& f, std::size_t target_size);

std::optional<Map> isomorphic(const Structure& x, const Structure& y);
std::optional<Map> isomorphic(const OckhamSpace& x, const OckhamSpace& y);
std::optional<Map> isomorphic(const OckhamAlgebra& a, const OckhamAlgebra& b);

struct DivisorWitness {
  std::vector<Elem> subset;  // op-closed subset of the larger structure, ascending
  Map surjection;            // indexed like subset
};

// Is X a homomorphic image of a substructure of Y?
std::optional<DivisorWitness> divisor(const Structure& x, const Structure& y, const Caps& caps = {});
std::optional<DivisorWitness> divisor(const OckhamSpace& x, const OckhamSpace& y, const Caps& caps = {});

struct Cycle {
  std::vector<Elem> elements;  // starts at the least element, successive images
  std::size_t length() const { return elements.size(); }
  bool odd() const { return elements.size() % 2 == 1; }
};

std::vector<Cycle> cycles_of_map(const Map& f);
std::vector<Cycle> cycles(const OckhamSpace& x);

// Closure of seeds under every operation, ascending.
std::vector<Elem> generated(const Structure& m, const std::vector<Elem>& seeds);
Substructure generated_substructure(const Structure& m, const std::vector<Elem>& seeds);
SubSpace generated_subspace(const OckhamSpace& x, const std::vector<Elem>& seeds);
bool generates(const Structure& m, const std::vector<Elem>& seeds);
// Least element generating the whole structure, if any.
std::optional<Elem> is_one_generated(const Structure& m);
std::optional<Elem> is_one_generated(const OckhamSpace& x);

struct IspResult {
  bool member = false;
  std::vector<Map> separating;  // morphisms X -> A witnessing the embedding into a power
  std::string failure;
};

// Membership of X in ISP(A) via separation of points and of relational non-tuples.
IspResult isp_member(const Structure& x, const Structure& a, const Caps& caps = {});

}  // namespace ockham
