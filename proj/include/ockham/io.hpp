#pragma once

#include <string>

#include "json.hpp"
#include "ockham/structures.hpp"

namespace ockham {

enum class DocumentKind { Space, Algebra, Structure, Relation };

// Parsed but not axiom-checked input. Spaces and algebras stay raw so that validation can
// report violations; structures and relations are shape-checked on construction.
struct Document {
  DocumentKind kind = DocumentKind::Space;
  RawSpace space;
  RawAlgebra algebra;
  Structure structure;
  Relation relation;
};

// Throws StructuralError on malformed JSON or shape, ResourceError above caps.structure.
Document parse_document(const std::string& text, const Caps& caps = {});
Document parse_document(const char* text, const Caps& caps = {});
Document parse_document(const nlohmann::json& j, const Caps& caps = {});

nlohmann::json to_json(const OckhamSpace& x);
nlohmann::json to_json(const OckhamAlgebra& a);
nlohmann::json to_json(const Structure& s);
nlohmann::json to_json(const Relation& r);
nlohmann::json to_json(const Document& d);

std::string kind_name(DocumentKind kind);

}  // namespace ockham
