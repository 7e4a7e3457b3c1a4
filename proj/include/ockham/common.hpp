#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ockham {

using Elem = int;
using Map = std::vector<Elem>;

// Input that does not describe a well-formed object.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same fact disagree.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Caps {
  std::size_t structure = 64;       // carrier size of any loaded structure
  std::size_t power = 4096;         // carrier size of a power structure
  std::size_t algebra = 64;         // |A| when enumerating H(A)
  std::size_t space = 20;           // |X| when enumerating K(X)
  std::size_t ground = 1u << 20;    // |A|^k for tuple spaces
  std::size_t maps = 1u << 24;      // |A|^|S| style map enumerations

  // Parses "key=value,key=value". Unknown keys or bad numbers throw StructuralError.
  static Caps parse(const std::string& text);
};

void require_cap(std::size_t value, std::size_t cap, const char* what);

// Saturating integer power; returns SIZE_MAX on overflow.
std::size_t checked_pow(std::size_t base, std::size_t exp);

}  // namespace ockham
