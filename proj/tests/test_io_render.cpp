#include "doctest.h"

#include "ockham/classifier.hpp"
#include "ockham/duality.hpp"
#include "ockham/io.hpp"
#include "ockham/piggyback.hpp"
#include "ockham/render.hpp"
#include "ockham/witnesses.hpp"

using namespace ockham;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("space documents round-trip") {
  for (std::size_t m : {1, 3, 5}) {
    auto x = catalog_space(CatalogKind::D, m);
    auto doc = parse_document(to_json(x).dump());
    REQUIRE(doc.kind == DocumentKind::Space);
    CHECK(OckhamSpace::from_raw(doc.space) == x);
  }
  auto text = R"({"kind":"ockham_space","size":2,"leq_pairs":[[0,1]],"g":[1,1],"labels":["p","q"]})";
  auto doc = parse_document(text);
  auto x = OckhamSpace::from_raw(doc.space);
  CHECK(x == catalog_space(CatalogKind::D, 1));
  CHECK(x.label(1) == "q");
  CHECK(to_json(x)["labels"] == nlohmann::json::array({"p", "q"}));
}

TEST_CASE("algebra, structure and relation documents round-trip") {
  auto a = dual_algebra(catalog_space(CatalogKind::D, 3));
  auto da = parse_document(to_json(a));
  REQUIRE(da.kind == DocumentKind::Algebra);
  CHECK(OckhamAlgebra::from_raw(da.algebra) == a);

  auto s = alternating_alter_ego(1).structure;
  auto ds = parse_document(to_json(s).dump());
  REQUIRE(ds.kind == DocumentKind::Structure);
  CHECK(ds.structure == s);

  auto k = witness_catalog("a56_ego");
  auto dk = parse_document(to_json(k));
  CHECK(dk.structure.rel("tri") == k.rel("tri"));
  CHECK(dk.structure.rel("leq") == k.rel("leq"));

  auto r = Relation::from_tuples(2, 4, {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}});
  auto dr = parse_document(to_json(r).dump());
  REQUIRE(dr.kind == DocumentKind::Relation);
  CHECK(dr.relation == r);
  CHECK(to_json(dr) == to_json(r));
  CHECK(kind_name(DocumentKind::Relation) == "relation");
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), StructuralError);
  CHECK_THROWS_AS(parse_document("[]"), StructuralError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"sphere"})"), StructuralError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"ockham_space","size":2,"g":[1,1]})"), StructuralError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"ockham_space","size":2,"leq_pairs":[[0,5]],"g":[1,1]})"),
                  StructuralError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"ockham_space","size":"two","leq_pairs":[],"g":[1,1]})"),
                  StructuralError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"relation","size":2,"arity":2,"tuples":[[0,1,1]]})"), StructuralError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"ockham_space","size":100,"leq_pairs":[],"g":[]})"), ResourceError);
  // Parsed but invalid spaces are kept raw for validation.
  auto raw = parse_document(R"({"kind":"ockham_space","size":2,"leq_pairs":[[0,1]],"g":[0,1]})");
  CHECK_FALSE(validate_ockham_space(raw.space).ok());
}

TEST_CASE("DOT rendering of spaces") {
  auto dot = render_dot(catalog_space(CatalogKind::D, 1));
  CHECK(dot.rfind("digraph ", 0) == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(count(dot, "[label=") == 2);
  CHECK(dot.find("n0 -> n1 [style=solid, arrowhead=none]") != std::string::npos);
  CHECK(dot.find("n0 -> n1 [style=dashed, constraint=false]") != std::string::npos);
  CHECK(dot.find("n1 -> n1 [style=dashed, constraint=false]") != std::string::npos);
  CHECK(count(dot, "style=solid") == 1);
  CHECK(count(dot, "style=dashed") == 2);
  CHECK(dot.back() == '\n');

  auto marked = render_dot(catalog_space(CatalogKind::D, 3), {1, 2});
  CHECK(count(marked, "peripheries=2") == 2);
  // Covers only: D3 has a single strict pair.
  CHECK(count(render_dot(catalog_space(CatalogKind::D, 3)), "style=solid") == 1);
  CHECK(count(render_dot(catalog_space(CatalogKind::Y4)), "style=solid") == 2);
}

TEST_CASE("DOT rendering of structures and algebras") {
  auto s3 = alternating_alter_ego(3).structure;
  auto dot = render_dot(s3);
  CHECK(count(dot, "style=dashed") == 12);
  CHECK(count(dot, "style=solid") == 4);
  CHECK(dot.find("label=\"1001\"") != std::string::npos);

  auto k = render_dot(witness_catalog("kleene_ego"));
  CHECK(count(k, "peripheries=2") == 2);

  auto a56 = render_dot(witness_catalog("a56_ego"));
  CHECK(a56.find("label=\"tri\"") != std::string::npos);

  auto alg = render_dot(witness_algebra("kleene"));
  CHECK(count(alg, "style=solid") == 2);
  CHECK(count(alg, "style=dotted") == 3);
}
