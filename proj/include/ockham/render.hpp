#pragma once

#include <string>
#include <vector>

#include "ockham/structures.hpp"

namespace ockham {

// Graphviz output drawn bottom-up: solid edges for order covers, dashed edges for the unary
// operation, doubled borders for members of unary relations or of the highlighted set.
std::string render_dot(const OckhamSpace& x, const std::vector<Elem>& highlight = {},
                       const std::vector<std::string>& annotations = {});
std::string render_dot(const Structure& s, const std::vector<Elem>& highlight = {});
// Hasse diagram with the negation as dotted edges.
std::string render_dot(const OckhamAlgebra& a);

}  // namespace ockham
