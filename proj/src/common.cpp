#include "ockham/common.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <sstream>

namespace ockham {

Caps Caps::parse(const std::string& text) {
  Caps caps;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw StructuralError("cap entry without '=': " + item);
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
      throw StructuralError("bad cap value: " + item);
    if (key == "structure") caps.structure = v;
    else if (key == "power") caps.power = v;
    else if (key == "algebra") caps.algebra = v;
    else if (key == "space") caps.space = v;
    else if (key == "ground") caps.ground = v;
    else if (key == "maps") caps.maps = v;
    else throw StructuralError("unknown cap: " + key);
  }
  return caps;
}

void require_cap(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap)
    throw ResourceError(std::string(what) + " " + std::to_string(value) + " exceeds cap " +
                        std::to_string(cap));
}

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base)
      return std::numeric_limits<std::size_t>::max();
    r *= base;
  }
  return r;
}

}  // namespace ockham
