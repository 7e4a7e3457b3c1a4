#pragma once

#include <string>
#include <vector>

#include "ockham/structures.hpp"

namespace ockham {

// H(A): lattice homomorphisms A -> 2, ordered pointwise, g(x) = complement of x∘f.
// Elements sorted lexicographically by their bit strings x(0)x(1)...; labels carry those strings.
OckhamSpace dual_space(const OckhamAlgebra& a, const Caps& caps = {});

// K(X): order-preserving maps X -> 2 under pointwise operations, f(α) = complement of α∘g.
// Elements sorted lexicographically by their bit strings α(0)α(1)...
OckhamAlgebra dual_algebra(const OckhamSpace& x, const Caps& caps = {});

// Bit strings of the elements of H(A) / K(X) in carrier order.
std::vector<std::string> dual_space_points(const OckhamAlgebra& a, const Caps& caps = {});
std::vector<std::string> dual_algebra_points(const OckhamSpace& x, const Caps& caps = {});

// H(φ): H(B) -> H(A) for an algebra morphism φ: A -> B, by precomposition.
Map dual_of_algebra_morphism(const OckhamAlgebra& a, const OckhamAlgebra& b, const Map& phi,
                             const Caps& caps = {});
// K(ψ): K(Y) -> K(X) for a space morphism ψ: X -> Y, by precomposition.
Map dual_of_space_morphism(const OckhamSpace& x, const OckhamSpace& y, const Map& psi,
                           const Caps& caps = {});

bool is_algebra_morphism(const OckhamAlgebra& a, const OckhamAlgebra& b, const Map& phi);
bool is_space_morphism(const OckhamSpace& x, const OckhamSpace& y, const Map& psi);

struct AlgebraRoundTrip {
  OckhamAlgebra double_dual;  // K(H(A))
  Map unit;                   // A -> K(H(A)), a ↦ evaluation at a
};

struct SpaceRoundTrip {
  OckhamSpace double_dual;  // H(K(X))
  Map counit;               // X -> H(K(X)), x ↦ evaluation at x
};

// Both verify the map is an isomorphism and throw InternalError otherwise.
AlgebraRoundTrip round_trip(const OckhamAlgebra& a, const Caps& caps = {});
SpaceRoundTrip round_trip(const OckhamSpace& x, const Caps& caps = {});

}  // namespace ockham
