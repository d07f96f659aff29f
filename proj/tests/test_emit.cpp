#include "spherecalc/suite.hpp"

#include <doctest.h>

using namespace sc;

TEST_CASE("formats") {
  CHECK(parse_format("latex") == Format::latex);
  CHECK(format_name(Format::dot) == "dot");
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("rationals are num/den strings") {
  CHECK(to_json(frac(-4, 6)) == Json("-2/3"));
  CHECK(to_json(Rational(5)) == Json("5/1"));
  CHECK(rational_from_json(Json("10/4")) == frac(5, 2));
  CHECK_THROWS(rational_from_json(Json(3)));
}

TEST_CASE("polynomial and series round trips") {
  BlowupFunctions bf = blowup_functions(12);
  PolyX p = bf.Q[7];
  CHECK(polyx_from_json(to_json(p)) == p);
  SeriesT back = series_from_json(to_json(bf.Delta));
  CHECK(back.order() == bf.Delta.order());
  CHECK(agree(back, bf.Delta));
  AlphaPoly a({PolyX(1L), PolyX(), PolyX::x()});
  CHECK(alphapoly_from_json(to_json(a)) == a);
}

TEST_CASE("embedded and immersed documents round trip") {
  BlowupFunctions bf = blowup_functions(16);
  EmbeddedRelation rel = derive_embedded(4, 1, bf);
  Json j = embedded_json(rel);
  CHECK(j.at("schema") == kSchema);
  CHECK(j.at("kind") == "embedded");
  EmbeddedRelation back = embedded_from_json(j);
  CHECK(emit_embedded(back, Format::text) == emit_embedded(rel, Format::text));
  NormalForm nf = derive_immersed(2, 1, -3, 24);
  Json ji = immersed_json(nf, 24);
  CHECK(ji.at("schema") == kSchema);
  CHECK(immersed_from_json(ji) == nf);
}

TEST_CASE("text and LaTeX renderings") {
  BlowupFunctions bf = blowup_functions(16);
  std::string latex = emit_embedded(derive_embedded(2, 0, bf), Format::latex);
  CHECK(latex.find("B^{2} + \\sigma^{2}\\frac{1}{2}S^{2}") != std::string::npos);
  CHECK(emit_embedded(derive_embedded(1, 1, bf), Format::latex).find("\\sigma S") != std::string::npos);
  CHECK(emit_finite_type(1, 0, 1, 32, Format::text) == "r = 1\n");
  NormalForm empty = derive_immersed(1, 0, 0, 16);
  CHECK(cosh_statement(empty) == "D_w((x²−4)·cosh(tα)) = 0");
  CHECK(emit_series("B", bf.B, Format::text).rfind("B = 1", 0) == 0);
  CHECK_THROWS_AS(emit_series("B", bf.B, Format::dot), std::invalid_argument);
  CHECK_THROWS(named_series(bf, "Z"));
}

TEST_CASE("latex polynomials") {
  CHECK(latex_polyx(PolyX({frac(-1, 6), Rational(0), Rational(1)})) == "x^{2} - \\frac{1}{6}");
}

TEST_CASE("poset and character variety emitters") {
  PosetJ j = build_poset(6, 1, 10);
  CHECK(emit_poset(j, Format::dot) == render_poset(j, PosetFormat::dot));
  Json chi = Json::parse(emit_character_variety(6, 0, character_variety(6, 0), Format::json));
  CHECK(chi.at("schema") == kSchema);
}

TEST_CASE("relation documents") {
  Json good = Json::parse(R"({
    "schema": "sphere-calculus/1", "kind": "formal", "classes": 1, "twists": [[1]],
    "lhs": [{"coeff": "1", "factors": [{"k": 0, "a": 2}]}],
    "rhs": [{"coeff": "2*Delta*S*B", "factors": [{"k": 1, "a": 0}]}]})");
  CHECK(verify_relation_document(good, 16).ok());
  Json bad = good;
  bad["rhs"][0]["coeff"] = "Delta*S*B";
  SuiteReport rep = verify_relation_document(bad, 16);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.first_failure() != nullptr);
  Json noschema = good;
  noschema.erase("schema");
  CHECK_THROWS_AS(verify_relation_document(noschema, 16), std::invalid_argument);
  BlowupFunctions bf = blowup_functions(16);
  Json emb = embedded_json(derive_embedded(3, 1, bf));
  CHECK(verify_relation_document(emb, 16).ok());
  emb["cosh"][0]["coeff"] = Json::array({"7/1"});
  CHECK_FALSE(verify_relation_document(emb, 16).ok());
}

TEST_CASE("small suites pass") {
  for (const char* s : {"core", "cli", "blowup", "lens"}) {
    SuiteReport rep = run_suite(s, 16);
    INFO(s);
    CHECK(rep.ok());
    CHECK_FALSE(rep.checks.empty());
  }
  CHECK_THROWS_AS(run_suite("nope", 16), std::invalid_argument);
  std::string text = emit_suite(run_suite("core", 16), Format::text);
  CHECK(text.find("checks passed") != std::string::npos);
}
