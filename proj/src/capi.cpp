#include "ockhamlab.h"

#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ockham/classifier.hpp"
#include "ockham/duality.hpp"
#include "ockham/io.hpp"
#include "ockham/morphisms.hpp"
#include "ockham/piggyback.hpp"
#include "ockham/relations.hpp"
#include "ockham/render.hpp"
#include "ockham/witnesses.hpp"

using nlohmann::json;
using namespace ockham;

struct ockhamlab_session {
  Caps caps;
  std::string output;
  std::string error;
};

struct ockhamlab_object {
  Document doc;
  std::string kind;
};

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
int guarded(ockhamlab_session* session, F&& body) {
  if (!session) return OCKHAMLAB_USAGE;
  session->output.clear();
  session->error.clear();
  try {
    body();
    return OCKHAMLAB_OK;
  } catch (const UsageError& e) {
    session->error = e.what();
    return OCKHAMLAB_USAGE;
  } catch (const StructuralError& e) {
    session->error = e.what();
    return OCKHAMLAB_MALFORMED;
  } catch (const ResourceError& e) {
    session->error = e.what();
    return OCKHAMLAB_RESOURCE;
  } catch (const InternalError& e) {
    session->error = e.what();
    return OCKHAMLAB_INTERNAL;
  } catch (const json::exception& e) {
    session->error = e.what();
    return OCKHAMLAB_MALFORMED;
  } catch (const std::bad_alloc&) {
    session->error = "out of memory";
    return OCKHAMLAB_RESOURCE;
  } catch (const std::exception& e) {
    session->error = e.what();
    return OCKHAMLAB_INTERNAL;
  }
}

void require(const ockhamlab_object* object) {
  if (!object) throw UsageError("missing input object");
}

OckhamSpace space_of(const Document& d) {
  if (d.kind == DocumentKind::Space) return OckhamSpace::from_raw(d.space);
  if (d.kind == DocumentKind::Structure) return space_from_structure(d.structure);
  throw StructuralError("expected an ockham_space, got " + kind_name(d.kind));
}

OckhamAlgebra algebra_of(const Document& d) {
  if (d.kind != DocumentKind::Algebra) throw StructuralError("expected an ockham_algebra, got " + kind_name(d.kind));
  auto report = validate_ockham_algebra(d.algebra);
  if (!report.ok()) throw StructuralError("invalid Ockham algebra: " + report.describe());
  return OckhamAlgebra::from_raw(d.algebra, false);
}

Structure structure_of(const Document& d) {
  switch (d.kind) {
    case DocumentKind::Structure: return d.structure;
    case DocumentKind::Space: return to_structure(OckhamSpace::from_raw(d.space));
    case DocumentKind::Relation: {
      Signature sig{{}, {{"r", d.relation.arity()}}};
      return Structure(sig, d.relation.carrier(), {}, {d.relation});
    }
    case DocumentKind::Algebra: return algebra_structure(algebra_of(d));
  }
  throw StructuralError("unsupported document");
}

const Relation& relation_of(const Document& d) {
  if (d.kind != DocumentKind::Relation) throw StructuralError("expected a relation, got " + kind_name(d.kind));
  return d.relation;
}

std::string text(const json& j) { return j.dump(2) + "\n"; }

json report_json(const ValidationReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) out.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return out;
}

json verdict_json(const Verdict& v) {
  json j;
  if (v.finitely_many) {
    j["outcome"] = "FinitelyMany";
    j["evidence"] = {{"catalog", catalog_name(v.finite->kind)},
                     {"m", v.finite->m},
                     {"isomorphism", v.finite->isomorphism}};
  } else {
    const auto& kinds = obstacle_kinds();
    std::size_t index = 0;
    while (kinds[index] != v.infinite->obstacle) ++index;
    j["outcome"] = "InfinitelyMany";
    j["evidence"] = {{"obstacle", catalog_name(v.infinite->obstacle)},
                     {"obstacle_index", index + 1},
                     {"subset", v.infinite->witness.subset},
                     {"surjection", v.infinite->witness.surjection}};
  }
  return j;
}

std::string explain_dot(const OckhamSpace& x, const Verdict& v) {
  std::vector<std::string> notes(x.size());
  std::vector<Elem> highlight;
  if (v.finitely_many) {
    for (std::size_t e = 0; e < x.size(); ++e)
      notes[e] = "-> " + std::to_string(v.finite->isomorphism[e]);
  } else {
    const auto& w = v.infinite->witness;
    highlight = w.subset;
    for (std::size_t i = 0; i < w.subset.size(); ++i)
      notes[w.subset[i]] = "-> " + std::to_string(w.surjection[i]);
  }
  return render_dot(x, highlight, notes);
}

json formula_json(const Relation& target, const Relation& source, const std::string& symbol, const Caps& caps) {
  auto f = ca_definable(target, source, caps);
  if (!f) return nullptr;
  return minimize_formula(*f, target, source).to_string(symbol);
}

std::string head(const std::string& symbol, std::size_t arity) {
  std::string out = symbol + "(";
  for (std::size_t i = 0; i < arity; ++i) out += (i ? ",x" : "x") + std::to_string(i + 1);
  return out + ")";
}

Family parse_family(const std::string& name) {
  if (name == "crown") return Family::Crown;
  if (name == "fence") return Family::Fence;
  throw StructuralError("unknown family: " + name);
}

std::vector<std::string> hosts_of(const std::string& ego) {
  if (ego == "kleene") return {"kleene"};
  if (ego == "a2") return {"a2"};
  if (ego == "a56") return {"a5", "a6"};
  throw StructuralError("unknown ego: " + ego);
}

json labelled(const Structure& s, const Map& f, const Structure& target) {
  json out = json::array();
  for (std::size_t e = 0; e < s.size(); ++e) out.push_back(target.label(f[e]));
  return out;
}

}  // namespace

extern "C" {

int ockhamlab_session_create(const char* caps_text, ockhamlab_session** out) {
  if (!out) return OCKHAMLAB_USAGE;
  *out = nullptr;
  try {
    auto* s = new ockhamlab_session;
    try {
      if (caps_text) s->caps = Caps::parse(caps_text);
    } catch (...) {
      delete s;
      throw;
    }
    *out = s;
    return OCKHAMLAB_OK;
  } catch (const StructuralError&) {
    return OCKHAMLAB_MALFORMED;
  } catch (...) {
    return OCKHAMLAB_RESOURCE;
  }
}

void ockhamlab_session_destroy(ockhamlab_session* session) { delete session; }

const char* ockhamlab_output(const ockhamlab_session* session) { return session ? session->output.c_str() : ""; }

const char* ockhamlab_error(const ockhamlab_session* session) { return session ? session->error.c_str() : ""; }

const char* ockhamlab_status_name(int status) {
  switch (status) {
    case OCKHAMLAB_OK: return "ok";
    case OCKHAMLAB_USAGE: return "usage";
    case OCKHAMLAB_MALFORMED: return "malformed input";
    case OCKHAMLAB_INTERNAL: return "internal cross-check failure";
    case OCKHAMLAB_RESOURCE: return "resource cap exceeded";
  }
  return "unknown";
}

int ockhamlab_parse(ockhamlab_session* session, const char* json_text, ockhamlab_object** out) {
  if (!out) return OCKHAMLAB_USAGE;
  *out = nullptr;
  return guarded(session, [&] {
    if (!json_text) throw UsageError("missing input text");
    auto* obj = new ockhamlab_object;
    try {
      obj->doc = parse_document(std::string(json_text), session->caps);
    } catch (...) {
      delete obj;
      throw;
    }
    obj->kind = kind_name(obj->doc.kind);
    *out = obj;
  });
}

void ockhamlab_object_destroy(ockhamlab_object* object) { delete object; }

const char* ockhamlab_object_kind(const ockhamlab_object* object) { return object ? object->kind.c_str() : ""; }

int ockhamlab_validate(ockhamlab_session* session, const ockhamlab_object* object, int* valid) {
  return guarded(session, [&] {
    require(object);
    const Document& d = object->doc;
    ValidationReport report;
    if (d.kind == DocumentKind::Space) report = validate_ockham_space(d.space);
    if (d.kind == DocumentKind::Algebra) report = validate_ockham_algebra(d.algebra);
    if (valid) *valid = report.ok() ? 1 : 0;
    json j{{"kind", object->kind}, {"valid", report.ok()}, {"violations", report_json(report)}};
    session->output = text(j);
  });
}

int ockhamlab_dual(ockhamlab_session* session, const ockhamlab_object* object) {
  return guarded(session, [&] {
    require(object);
    if (object->doc.kind == DocumentKind::Algebra) {
      auto a = algebra_of(object->doc);
      round_trip(a, session->caps);
      session->output = text(to_json(dual_space(a, session->caps)));
    } else {
      auto x = space_of(object->doc);
      round_trip(x, session->caps);
      session->output = text(to_json(dual_algebra(x, session->caps)));
    }
  });
}

int ockhamlab_classify(ockhamlab_session* session, const ockhamlab_object* object, int explain) {
  return guarded(session, [&] {
    require(object);
    OckhamSpace x;
    Verdict v;
    if (object->doc.kind == DocumentKind::Algebra) {
      auto a = algebra_of(object->doc);
      v = classify_algebra(a, session->caps);
      x = dual_space(a, session->caps);
    } else {
      x = space_of(object->doc);
      v = classify_space(x, session->caps);
    }
    json j = verdict_json(v);
    j["subvarieties"] = subvariety_tags(x);
    if (explain) {
      j["dot"] = explain_dot(x, v);
      j["space"] = to_json(x);
    }
    session->output = text(j);
  });
}

int ockhamlab_quasiprimal(ockhamlab_session* session, const ockhamlab_object* object) {
  return guarded(session, [&] {
    require(object);
    OckhamAlgebra a = object->doc.kind == DocumentKind::Algebra
                          ? algebra_of(object->doc)
                          : dual_algebra(space_of(object->doc), session->caps);
    session->output = text(json{{"quasiprimal", is_quasiprimal(a, session->caps)}, {"size", a.size()}});
  });
}

int ockhamlab_census(ockhamlab_session* session, const ockhamlab_object* object, unsigned max_arity) {
  return guarded(session, [&] {
    require(object);
    if (max_arity < 1) throw UsageError("max arity must be at least 1");
    auto classes = census(as_fin_algebra(algebra_of(object->doc)), max_arity, session->caps);
    json reps = json::array();
    for (const auto& c : classes)
      reps.push_back({{"arity", c.representative.arity()},
                      {"tuples", c.representative.tuples()},
                      {"count", c.count}});
    session->output = text(json{{"max_arity", max_arity}, {"classes", classes.size()}, {"representatives", reps}});
  });
}

int ockhamlab_equiv(ockhamlab_session* session, const ockhamlab_object* first, const ockhamlab_object* second) {
  return guarded(session, [&] {
    require(first);
    require(second);
    const Relation& r = relation_of(first->doc);
    const Relation& s = relation_of(second->doc);
    if (r.carrier() != s.carrier()) throw StructuralError("relations live on different carriers");
    json r_from_s = formula_json(r, s, "s", session->caps);
    json s_from_r = formula_json(s, r, "r", session->caps);
    const bool eq = !r_from_s.is_null() && !s_from_r.is_null();
    std::ostringstream out;
    out << "equivalent: " << (eq ? "true" : "false") << "\n";
    out << head("r", r.arity()) << " = " << (r_from_s.is_null() ? "not definable" : r_from_s.get<std::string>()) << "\n";
    out << head("s", s.arity()) << " = " << (s_from_r.is_null() ? "not definable" : s_from_r.get<std::string>()) << "\n";
    session->output = out.str();
  });
}

int ockhamlab_divisor(ockhamlab_session* session, const ockhamlab_object* sub, const ockhamlab_object* of) {
  return guarded(session, [&] {
    require(sub);
    require(of);
    std::optional<DivisorWitness> w;
    if (sub->doc.kind == DocumentKind::Space && of->doc.kind == DocumentKind::Space)
      w = divisor(space_of(sub->doc), space_of(of->doc), session->caps);
    else
      w = divisor(structure_of(sub->doc), structure_of(of->doc), session->caps);
    json j{{"divisor", w.has_value()}};
    if (w) {
      j["subset"] = w->subset;
      j["surjection"] = w->surjection;
    }
    session->output = text(j);
  });
}

int ockhamlab_catalog(ockhamlab_session* session, const char* kind, unsigned m) {
  return guarded(session, [&] {
    auto k = parse_catalog_kind(kind ? kind : "");
    if (!k) throw StructuralError(std::string("unknown catalog kind: ") + (kind ? kind : ""));
    session->output = text(to_json(catalog_space(*k, m)));
  });
}

int ockhamlab_witness(ockhamlab_session* session, const char* family, const char* ego, unsigned n) {
  return guarded(session, [&] {
    const Family fam = parse_family(family ? family : "");
    const std::string ego_name = ego ? ego : "";
    const auto hosts = hosts_of(ego_name);
    const Structure ego_struct = witness_catalog(ego_name + "_ego");
    const Structure bridge = family_bridge(fam);
    if (!(ego_struct.signature() == bridge.signature()))
      throw StructuralError("ego " + ego_name + " does not match the " + std::string(family) + " family");
    const Structure member = family_member(fam, n);
    const Map psi = psi_map(fam, n);
    json j;
    j["family"] = family;
    j["ego"] = ego_name;
    j["n"] = n;
    j["member"] = to_json(member);
    j["psi"] = labelled(member, psi, bridge);
    j["psi_violation"] = first_violation(member, bridge, psi).value_or("");
    json alter = json::object();
    for (const auto& h : hosts) alter[h] = is_alter_ego(witness_algebra(h), ego_struct);
    j["alter_ego"] = alter;
    const std::size_t k = fam == Family::Crown ? 2 : 1;
    if (n > k) {
      auto check = infinitude_hypothesis_check(fam, ego_struct, k, n);
      j["hypothesis"] = {{"k", k},
                         {"l", n},
                         {"holds", check.holds},
                         {"rho", labelled(bridge, check.rho, ego_struct)},
                         {"omegas", check.omegas},
                         {"detail", check.detail}};
    }
    session->output = text(j);
  });
}

int ockhamlab_normalize(ockhamlab_session* session, const ockhamlab_object* object, const int* gens,
                        size_t gen_count, unsigned m) {
  return guarded(session, [&] {
    require(object);
    if (object->doc.kind != DocumentKind::Structure) throw StructuralError("normalize expects a structure");
    if (gen_count && !gens) throw UsageError("missing generator list");
    std::vector<Elem> g(gens, gens + gen_count);
    for (Elem e : g)
      if (e < 0 || std::size_t(e) >= object->doc.structure.size()) throw StructuralError("generator out of range");
    auto r = normalize(object->doc.structure, g, m, session->caps);
    json j{{"structure", to_json(r.structure)},
           {"gens", r.gens},
           {"index_map", r.index_map},
           {"cases", r.cases},
           {"verified", r.verified},
           {"normal_form", in_normal_form(r.structure, r.gens, m)}};
    session->output = text(j);
  });
}

int ockhamlab_render(ockhamlab_session* session, const ockhamlab_object* object, const char* format) {
  return guarded(session, [&] {
    require(object);
    if (!format || std::string(format) != "dot") throw UsageError("only the dot format is supported");
    const Document& d = object->doc;
    if (d.kind == DocumentKind::Space) session->output = render_dot(OckhamSpace::from_raw(d.space));
    else if (d.kind == DocumentKind::Algebra) session->output = render_dot(algebra_of(d));
    else session->output = render_dot(structure_of(d));
  });
}

}  // extern "C"
