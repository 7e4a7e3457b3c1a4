#include "ockham/render.hpp"

#include <sstream>

namespace ockham {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<std::pair<Elem, Elem>> covers_of(const Relation& r) {
  const std::size_t n = r.carrier();
  std::vector<char> le(n * n, 0);
  for (auto c : r.codes()) le[c] = 1;
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !le[a * n + b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && le[a * n + c] && le[c * n + b]) cover = false;
      if (cover) out.emplace_back(Elem(a), Elem(b));
    }
  return out;
}

void header(std::ostringstream& out, const char* name) {
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n";
}

void node(std::ostringstream& out, Elem e, const std::string& label, bool doubled) {
  out << "  n" << e << " [label=" << quote(label);
  if (doubled) out << ", peripheries=2";
  out << "];\n";
}

}  // namespace

std::string render_dot(const OckhamSpace& x, const std::vector<Elem>& highlight,
                       const std::vector<std::string>& annotations) {
  std::ostringstream out;
  header(out, "space");
  std::vector<char> hi(x.size(), 0);
  for (Elem e : highlight) hi[e] = 1;
  for (std::size_t e = 0; e < x.size(); ++e) {
    std::string label = x.label(Elem(e));
    if (!annotations.empty() && !annotations[e].empty()) label += " " + annotations[e];
    node(out, Elem(e), label, hi[e]);
  }
  for (auto [a, b] : x.covers()) out << "  n" << a << " -> n" << b << " [style=solid, arrowhead=none];\n";
  for (std::size_t e = 0; e < x.size(); ++e)
    out << "  n" << e << " -> n" << x.g(Elem(e)) << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string render_dot(const Structure& s, const std::vector<Elem>& highlight) {
  std::ostringstream out;
  header(out, "structure");
  std::vector<char> hi(s.size(), 0);
  for (Elem e : highlight) hi[e] = 1;
  for (const auto& r : s.rels())
    if (r.arity() == 1)
      for (auto c : r.codes()) hi[c] = 1;
  for (std::size_t e = 0; e < s.size(); ++e) node(out, Elem(e), s.label(Elem(e)), hi[e]);
  for (std::size_t i = 0; i < s.rels().size(); ++i) {
    const auto& r = s.rel(i);
    if (r.arity() != 2) continue;
    if (is_order(r)) {
      for (auto [a, b] : covers_of(r)) out << "  n" << a << " -> n" << b << " [style=solid, arrowhead=none];\n";
    } else {
      for (const auto& t : r.tuples())
        if (t[0] != t[1])
          out << "  n" << t[0] << " -> n" << t[1] << " [style=dotted, label=" << quote(s.signature().rels[i].first)
              << ", constraint=false];\n";
    }
  }
  for (const auto& op : s.ops())
    for (std::size_t e = 0; e < s.size(); ++e)
      out << "  n" << e << " -> n" << op[e] << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string render_dot(const OckhamAlgebra& a) {
  std::ostringstream out;
  header(out, "algebra");
  for (std::size_t e = 0; e < a.size(); ++e) node(out, Elem(e), a.label(Elem(e)), false);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (x == y || !a.leq(Elem(x), Elem(y))) continue;
      bool cover = true;
      for (std::size_t z = 0; z < a.size() && cover; ++z)
        if (z != x && z != y && a.leq(Elem(x), Elem(z)) && a.leq(Elem(z), Elem(y))) cover = false;
      if (cover) out << "  n" << x << " -> n" << y << " [style=solid, arrowhead=none];\n";
    }
  for (std::size_t e = 0; e < a.size(); ++e)
    out << "  n" << e << " -> n" << a.neg(Elem(e)) << " [style=dotted, constraint=false];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ockham
