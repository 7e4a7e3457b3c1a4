#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ockham/morphisms.hpp"
#include "ockham/structures.hpp"

namespace ockham {

enum class CatalogKind { C, D, Dop, Y1, Y2, Y3, Y4, Y4op, Y5, Y6, Y6op };

// Names as used on the command line: C, D, Dop, Y1 .. Y6op.
std::string catalog_name(CatalogKind kind);
std::optional<CatalogKind> parse_catalog_kind(const std::string& name);

// C_m: m-cycle antichain. D_m: C_m plus a point 0 below m with g(0) = 1. Dop: order dual of D_m.
// The parameter m is ignored for the obstacles Y1..Y6op.
OckhamSpace catalog_space(CatalogKind kind, std::size_t m = 1);

// The eight obstacles in search order.
const std::vector<CatalogKind>& obstacle_kinds();

struct FiniteEvidence {
  CatalogKind kind = CatalogKind::C;
  std::size_t m = 0;
  Map isomorphism;  // X -> catalog space
};

struct InfiniteEvidence {
  CatalogKind obstacle = CatalogKind::Y1;
  DivisorWitness witness;  // subset of X mapped onto the obstacle
};

struct Verdict {
  bool finitely_many = false;
  std::optional<FiniteEvidence> finite;
  std::optional<InfiniteEvidence> infinite;
};

// Runs both the catalog test and the obstacle-divisor test; InternalError if they disagree.
Verdict classify_space(const OckhamSpace& x, const Caps& caps = {});
Verdict classify_algebra(const OckhamAlgebra& a, const Caps& caps = {});

// Catalog membership alone.
std::optional<FiniteEvidence> catalog_match(const OckhamSpace& x);

// Constructive witness for a space outside the catalog: an odd/even cycle case analysis that
// names an op-closed subset and a surjection onto one of the obstacles.
InfiniteEvidence obstacle_witness(const OckhamSpace& x);

// Binary compatible relations are all products or graphs of partial automorphisms. Cross-checked
// against H(A) being an odd cycle; InternalError on disagreement.
bool is_quasiprimal(const OckhamAlgebra& a, const Caps& caps = {});
bool quasiprimal_by_relations(const OckhamAlgebra& a, const Caps& caps = {});

// Subset of Boolean, DeMorgan, Kleene, Stone, MS in that order.
std::vector<std::string> subvariety_tags(const OckhamSpace& x);

}  // namespace ockham
