#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ockham/structures.hpp"

namespace ockham {

// Named structures: kleene_ego, a2_ego, a56_ego, gen1_bridge, gen2_bridge.
// gen1 signature: binary "leq", unary "s". gen2 signature: binary "leq", binary "tri".
Structure witness_catalog(const std::string& name);

// Host algebras with carriers labelled as in the alter egos: kleene (0,a,1), a2 (0,a,b,1),
// a5 and a6 (chain 0,a,b,1).
OckhamAlgebra witness_algebra(const std::string& name);

enum class Family { Crown, Fence };

// Crown X_n (n >= 2): 2n points, evens minimal, each even below its two odd neighbours
// cyclically, unary "s" = {0}. Fence X_n (n >= 1): zigzag 0 < 1 > 2 < ... > 2n, with
// tri = L² ∪ U² ∪ L×U for L = {0, 2n}.
Structure family_member(Family family, std::size_t n);

// The non-morphism into the family's bridge.
Map psi_map(Family family, std::size_t n);

// Bridge for the family: gen1_bridge for crowns, gen2_bridge for fences.
Structure family_bridge(Family family);

struct EmbeddingCheck {
  bool ok = false;
  std::string violation;  // first failing constraint, empty when ok
};

// Map into ego^p given as one p-tuple per element; checks injectivity, preservation and reflection.
EmbeddingCheck embedding_check(const Structure& bridge, const Structure& ego, const std::vector<std::vector<Elem>>& map);

// First tuple (in relation order, then lexicographic) that a map fails to preserve.
std::optional<std::string> first_violation(const Structure& x, const Structure& y, const Map& f);

struct InfinitudeCheck {
  bool holds = false;
  Map rho;                  // bridge -> ego
  std::size_t omegas = 0;   // morphisms X_k -> X_l examined
  std::string detail;
};

// With φ_l = ρ∘ψ_l for the first bridge morphism ρ breaking it: is φ_l∘ω a morphism for every
// ω: X_k -> X_l?
InfinitudeCheck infinitude_hypothesis_check(Family family, const Structure& ego, std::size_t k, std::size_t l);

// Homset relations r_n over the full carrier of X_n for n = start..n_max, and whether they are
// pairwise inequivalent.
struct GrowthEvidence {
  std::vector<Relation> relations;
  bool pairwise_inequivalent = false;
};
GrowthEvidence growth_evidence(Family family, const Structure& ego, std::size_t n_max, const Caps& caps = {});

// Congruences of an Ockham algebra, as block labellings (canonical restricted growth strings).
std::vector<std::vector<int>> congruences(const OckhamAlgebra& a);
// First pair of congruences whose relational products differ.
std::optional<std::pair<std::vector<int>, std::vector<int>>> non_permuting_pair(const OckhamAlgebra& a);

}  // namespace ockham
