#include "ockham/io.hpp"

namespace ockham {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw StructuralError(std::string("missing field: ") + name);
  return *it;
}

Elem as_elem(const json& j) {
  if (!j.is_number_integer()) throw StructuralError("expected an integer element");
  return j.get<Elem>();
}

std::vector<Elem> elem_list(const json& j) {
  if (!j.is_array()) throw StructuralError("expected an array of elements");
  std::vector<Elem> out;
  for (const auto& e : j) out.push_back(as_elem(e));
  return out;
}

std::vector<std::vector<Elem>> elem_table(const json& j) {
  if (!j.is_array()) throw StructuralError("expected an array of arrays");
  std::vector<std::vector<Elem>> out;
  for (const auto& row : j) out.push_back(elem_list(row));
  return out;
}

std::size_t carrier_size(const json& j, const Caps& caps) {
  const json& s = field(j, "size");
  if (!s.is_number_integer() || s.get<long long>() < 1) throw StructuralError("size must be a positive integer");
  auto n = s.get<std::size_t>();
  require_cap(n, caps.structure, "carrier size");
  return n;
}

std::vector<std::string> labels_of(const json& j) {
  auto it = j.find("labels");
  if (it == j.end()) return {};
  if (!it->is_array()) throw StructuralError("labels must be an array of strings");
  std::vector<std::string> out;
  for (const auto& l : *it) {
    if (!l.is_string()) throw StructuralError("labels must be an array of strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

void put_labels(json& j, const std::vector<std::string>& labels) {
  if (!labels.empty()) j["labels"] = labels;
}

}  // namespace

std::string kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Space: return "ockham_space";
    case DocumentKind::Algebra: return "ockham_algebra";
    case DocumentKind::Structure: return "structure";
    case DocumentKind::Relation: return "relation";
  }
  return "";
}

Document parse_document(const std::string& text, const Caps& caps) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j, caps);
}

Document parse_document(const char* text, const Caps& caps) { return parse_document(std::string(text), caps); }

Document parse_document(const json& j, const Caps& caps) {
  if (!j.is_object()) throw StructuralError("document must be a JSON object");
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw StructuralError("kind must be a string");
  const std::string k = kind.get<std::string>();
  Document d;
  try {
    if (k == "ockham_space") {
      d.kind = DocumentKind::Space;
      d.space.size = carrier_size(j, caps);
      for (const auto& p : elem_table(field(j, "leq_pairs"))) {
        if (p.size() != 2) throw StructuralError("leq_pairs entries must be pairs");
        d.space.leq_pairs.emplace_back(p[0], p[1]);
      }
      d.space.g = elem_list(field(j, "g"));
      d.space.labels = labels_of(j);
      validate_ockham_space(d.space);  // shape errors only; axioms are reported later
    } else if (k == "ockham_algebra") {
      d.kind = DocumentKind::Algebra;
      d.algebra.size = carrier_size(j, caps);
      d.algebra.join = elem_table(field(j, "join"));
      d.algebra.meet = elem_table(field(j, "meet"));
      d.algebra.neg = elem_list(field(j, "neg"));
      d.algebra.bot = as_elem(field(j, "bot"));
      d.algebra.top = as_elem(field(j, "top"));
      d.algebra.labels = labels_of(j);
      validate_ockham_algebra(d.algebra);
    } else if (k == "structure") {
      d.kind = DocumentKind::Structure;
      std::size_t n = carrier_size(j, caps);
      Signature sig;
      std::vector<std::vector<Elem>> ops;
      std::vector<Relation> rels;
      if (auto it = j.find("ops"); it != j.end()) {
        if (!it->is_object()) throw StructuralError("ops must be an object");
        for (const auto& [name, table] : it->items()) {
          sig.ops.push_back(name);
          ops.push_back(elem_list(table));
        }
      }
      if (auto it = j.find("rels"); it != j.end()) {
        if (!it->is_object()) throw StructuralError("rels must be an object");
        for (const auto& [name, body] : it->items()) {
          if (!body.is_object()) throw StructuralError("relation entry must be an object");
          const json& ar = field(body, "arity");
          if (!ar.is_number_integer() || ar.get<long long>() < 1) throw StructuralError("bad relation arity");
          std::size_t arity = ar.get<std::size_t>();
          sig.rels.emplace_back(name, arity);
          rels.push_back(Relation::from_tuples(n, arity, elem_table(field(body, "tuples"))));
        }
      }
      d.structure = Structure(sig, n, ops, rels, labels_of(j));
    } else if (k == "relation") {
      d.kind = DocumentKind::Relation;
      std::size_t n = carrier_size(j, caps);
      const json& ar = field(j, "arity");
      if (!ar.is_number_integer() || ar.get<long long>() < 1) throw StructuralError("bad relation arity");
      d.relation = Relation::from_tuples(n, ar.get<std::size_t>(), elem_table(field(j, "tuples")));
    } else {
      throw StructuralError("unknown kind: " + k);
    }
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed document: ") + e.what());
  }
  return d;
}

json to_json(const OckhamSpace& x) {
  json j;
  j["kind"] = "ockham_space";
  j["size"] = x.size();
  json pairs = json::array();
  for (auto [a, b] : x.covers()) pairs.push_back({a, b});
  j["leq_pairs"] = pairs;
  j["g"] = x.g_map();
  put_labels(j, x.labels());
  return j;
}

json to_json(const OckhamAlgebra& a) {
  RawAlgebra raw = a.to_raw();
  json j;
  j["kind"] = "ockham_algebra";
  j["size"] = raw.size;
  j["join"] = raw.join;
  j["meet"] = raw.meet;
  j["neg"] = raw.neg;
  j["bot"] = raw.bot;
  j["top"] = raw.top;
  put_labels(j, raw.labels);
  return j;
}

json to_json(const Structure& s) {
  json j;
  j["kind"] = "structure";
  j["size"] = s.size();
  json ops = json::object();
  for (std::size_t i = 0; i < s.ops().size(); ++i) ops[s.signature().ops[i]] = s.op(i);
  json rels = json::object();
  for (std::size_t i = 0; i < s.rels().size(); ++i)
    rels[s.signature().rels[i].first] = {{"arity", s.rel(i).arity()}, {"tuples", s.rel(i).tuples()}};
  j["ops"] = ops;
  j["rels"] = rels;
  put_labels(j, s.labels());
  return j;
}

json to_json(const Relation& r) {
  json j;
  j["kind"] = "relation";
  j["size"] = r.carrier();
  j["arity"] = r.arity();
  j["tuples"] = r.tuples();
  return j;
}

json to_json(const Document& d) {
  switch (d.kind) {
    case DocumentKind::Space: {
      json j;
      j["kind"] = "ockham_space";
      j["size"] = d.space.size;
      json pairs = json::array();
      for (auto [a, b] : d.space.leq_pairs) pairs.push_back({a, b});
      j["leq_pairs"] = pairs;
      j["g"] = d.space.g;
      put_labels(j, d.space.labels);
      return j;
    }
    case DocumentKind::Algebra: {
      json j;
      j["kind"] = "ockham_algebra";
      j["size"] = d.algebra.size;
      j["join"] = d.algebra.join;
      j["meet"] = d.algebra.meet;
      j["neg"] = d.algebra.neg;
      j["bot"] = d.algebra.bot;
      j["top"] = d.algebra.top;
      put_labels(j, d.algebra.labels);
      return j;
    }
    case DocumentKind::Structure: return to_json(d.structure);
    case DocumentKind::Relation: return to_json(d.relation);
  }
  return {};
}

}  // namespace ockham
