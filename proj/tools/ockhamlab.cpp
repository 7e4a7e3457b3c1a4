#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ockhamlab.h"

namespace {

struct SessionDeleter {
  void operator()(ockhamlab_session* s) const { ockhamlab_session_destroy(s); }
};
struct ObjectDeleter {
  void operator()(ockhamlab_object* o) const { ockhamlab_object_destroy(o); }
};
using SessionPtr = std::unique_ptr<ockhamlab_session, SessionDeleter>;
using ObjectPtr = std::unique_ptr<ockhamlab_object, ObjectDeleter>;

int fail(ockhamlab_session* session, int status) {
  std::cerr << "error (" << ockhamlab_status_name(status) << "): " << ockhamlab_error(session) << "\n";
  return status;
}

int load(ockhamlab_session* session, const std::string& path, ObjectPtr& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return OCKHAMLAB_MALFORMED;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  ockhamlab_object* obj = nullptr;
  int status = ockhamlab_parse(session, buf.str().c_str(), &obj);
  if (status != OCKHAMLAB_OK) {
    std::cerr << path << ": ";
    return fail(session, status);
  }
  out.reset(obj);
  return OCKHAMLAB_OK;
}

int finish(ockhamlab_session* session, int status) {
  if (status != OCKHAMLAB_OK) return fail(session, status);
  std::cout << ockhamlab_output(session);
  return OCKHAMLAB_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Ockham algebras: duality, relation census and classification"};
  app.require_subcommand(1);

  std::string file, second, sub, of, kind, family, ego, format = "dot";
  unsigned max_arity = 3, m = 1, n = 2;
  bool explain = false;
  std::vector<int> gens;

  auto* validate = app.add_subcommand("validate", "Check the axioms of a space or algebra");
  validate->add_option("file", file, "JSON document")->required();
  auto* dual = app.add_subcommand("dual", "Dual space of an algebra or dual algebra of a space");
  dual->add_option("file", file, "JSON document")->required();
  auto* classify = app.add_subcommand("classify", "Finitely or infinitely many relations, with evidence");
  classify->add_option("file", file, "JSON document")->required();
  classify->add_flag("--explain", explain, "Attach a DOT drawing of the evidence");
  auto* quasi = app.add_subcommand("quasiprimal", "Quasi-primality test");
  quasi->add_option("file", file, "JSON document")->required();
  auto* census = app.add_subcommand("census", "Equivalence classes of compatible relations");
  census->add_option("file", file, "JSON algebra")->required();
  census->add_option("--max-arity", max_arity, "Largest arity enumerated")->check(CLI::Range(1u, 8u));
  auto* equiv = app.add_subcommand("equiv", "Mutual conjunct-atomic definability of two relations");
  equiv->add_option("first", file, "JSON relation")->required();
  equiv->add_option("second", second, "JSON relation")->required();
  auto* div = app.add_subcommand("divisor", "Homomorphic image of a substructure");
  div->add_option("--sub", sub, "Candidate divisor")->required();
  div->add_option("--of", of, "Ambient space or structure")->required();
  auto* catalog = app.add_subcommand("catalog", "Print a catalog or obstacle space");
  catalog->add_option("--kind", kind, "C, D, Dop, Y1, Y2, Y3, Y4, Y4op, Y5, Y6, Y6op")->required();
  catalog->add_option("--m", m, "Odd cycle length for C, D and Dop");
  auto* witness = app.add_subcommand("witness", "Crown and fence infinitude evidence");
  witness->add_option("--family", family, "crown or fence")->required();
  witness->add_option("--ego", ego, "kleene, a2 or a56")->required();
  witness->add_option("--n", n, "Family index");
  auto* norm = app.add_subcommand("normalize", "Reduce a dual-class member to the eight forms");
  norm->add_option("file", file, "JSON structure with op u and relation leq")->required();
  norm->add_option("--gens", gens, "Generating set as carrier indices")->required();
  norm->add_option("--m", m, "Period of the alternating alter ego");
  auto* render = app.add_subcommand("render", "Graphviz drawing");
  render->add_option("file", file, "JSON document")->required();
  render->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : OCKHAMLAB_MALFORMED;
  }

  const char* caps = std::getenv("OCKHAMLAB_CAPS");
  ockhamlab_session* raw = nullptr;
  int status = ockhamlab_session_create(caps, &raw);
  if (status != OCKHAMLAB_OK) {
    std::cerr << "error: invalid OCKHAMLAB_CAPS\n";
    return status;
  }
  SessionPtr session(raw);
  ockhamlab_session* s = session.get();

  if (*catalog) return finish(s, ockhamlab_catalog(s, kind.c_str(), m));
  if (*witness) return finish(s, ockhamlab_witness(s, family.c_str(), ego.c_str(), n));
  if (*div) {
    ObjectPtr a, b;
    if ((status = load(s, sub, a)) || (status = load(s, of, b))) return status;
    return finish(s, ockhamlab_divisor(s, a.get(), b.get()));
  }

  ObjectPtr obj;
  if ((status = load(s, file, obj))) return status;
  if (*validate) return finish(s, ockhamlab_validate(s, obj.get(), nullptr));
  if (*dual) return finish(s, ockhamlab_dual(s, obj.get()));
  if (*classify) return finish(s, ockhamlab_classify(s, obj.get(), explain ? 1 : 0));
  if (*quasi) return finish(s, ockhamlab_quasiprimal(s, obj.get()));
  if (*census) return finish(s, ockhamlab_census(s, obj.get(), max_arity));
  if (*equiv) {
    ObjectPtr other;
    if ((status = load(s, second, other))) return status;
    return finish(s, ockhamlab_equiv(s, obj.get(), other.get()));
  }
  if (*norm) return finish(s, ockhamlab_normalize(s, obj.get(), gens.data(), gens.size(), m));
  if (*render) return finish(s, ockhamlab_render(s, obj.get(), format.c_str()));
  return OCKHAMLAB_USAGE;
}
