#include "spherecalc/embedded.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sc;

namespace {

bool has_sigma_power(const EmbeddedRelation& rel, int j) {
  auto hit = [j](const EmbeddedTerm& t) { return t.sigma_power == j && !t.coeff.is_zero(); };
  return std::any_of(rel.cosh_terms.begin(), rel.cosh_terms.end(), hit) ||
         std::any_of(rel.sinh_terms.begin(), rel.sinh_terms.end(), hit);
}

}  // namespace

TEST_CASE("case bases") {
  auto even0 = case_basis(4, 0, 0);
  REQUIRE(even0.size() == 3);
  CHECK(even0[0] == BasisMonomial{0, 4, 0});
  CHECK(even0[2] == BasisMonomial{4, 0, 0});
  auto odd0 = case_basis(4, 0, 1);
  REQUIRE(odd0.size() == 1);
  CHECK(odd0[0] == BasisMonomial{1, 1, 1});
  auto odd1 = case_basis(3, 1, 1);
  REQUIRE(odd1.size() == 2);
  CHECK(odd1[0] == BasisMonomial{1, 2, 0});
  CHECK(monomial_str(BasisMonomial{2, 1, 1}) == "S^2 B Delta");
}

TEST_CASE("basis series have the expected leading terms") {
  BlowupFunctions bf = blowup_functions(16);
  for (int n = 1; n <= 6; ++n)
    for (int eps = 0; eps <= 1; ++eps)
      for (int par = 0; par <= 1; ++par)
        for (const auto& m : case_basis(n, eps, par)) {
          SeriesT s = basis_series(m, bf);
          CHECK(s.valuation() == m.s_exp);
          CHECK(s[m.s_exp] == PolyX(1L));
        }
}

TEST_CASE("small relations") {
  BlowupFunctions bf = blowup_functions(20);
  EmbeddedRelation r10 = derive_embedded(1, 0, bf);
  REQUIRE(r10.cosh_terms.size() == 1);
  CHECK(r10.cosh_terms[0].mono == BasisMonomial{0, 1, 0});
  CHECK(r10.sinh_terms.empty());
  EmbeddedRelation r11 = derive_embedded(1, 1, bf);
  REQUIRE(r11.sinh_terms.size() == 1);
  CHECK(r11.sinh_terms[0].sigma_power == 1);
  CHECK(r11.sinh_terms[0].mono == BasisMonomial{1, 0, 0});
  EmbeddedRelation r20 = derive_embedded(2, 0, bf);
  REQUIRE(r20.cosh_terms.size() == 2);
  CHECK(r20.cosh_terms[1].sigma_power == 2);
  CHECK(r20.cosh_terms[1].coeff == PolyX(frac(1, 2)));
  CHECK(r20.cosh_terms[1].mono == BasisMonomial{2, 0, 0});
}

TEST_CASE("derived relations verify on the model") {
  for (int n = 1; n <= 7; ++n) {
    BlowupFunctions bf = blowup_functions(2 * n + 8);
    for (int eps = 0; eps <= 1; ++eps) {
      EmbeddedRelation rel = derive_embedded(n, eps, bf);
      RelationReport rep = verify_embedded(rel, bf);
      INFO("n=" << n << " eps=" << eps);
      CHECK(rep.ok);
      CHECK(rep.patterns_checked > 0);
      int hat = hat_power(n, eps);
      if (hat >= 0) CHECK_FALSE(has_sigma_power(rel, hat));
    }
  }
}

TEST_CASE("a corrupted relation is rejected") {
  BlowupFunctions bf = blowup_functions(16);
  EmbeddedRelation rel = derive_embedded(3, 0, bf);
  rel.cosh_terms.back().coeff += PolyX(1L);
  CHECK_FALSE(verify_embedded(rel, bf).ok);
}

TEST_CASE("hat powers") {
  CHECK(hat_power(4, 0) == 3);
  CHECK(hat_power(5, 1) == 4);
  CHECK(hat_power(4, 1) == -1);
  CHECK(hat_power(5, 0) == -1);
}

TEST_CASE("admissible twists") {
  CHECK(admissible_twists(3, 1).size() == 4);
  for (const auto& tp : admissible_twists(20, 1)) {
    CHECK(tp.parities.size() == 20);
    CHECK(tp.parity_sum() % 2 == 1);
  }
}

TEST_CASE("fit_to_basis rejects a series outside the span") {
  BlowupFunctions bf = blowup_functions(12);
  std::vector<SeriesT> basis{bf.B};
  CHECK_THROWS_AS(fit_to_basis(bf.S, basis), std::domain_error);
  auto c = fit_to_basis(bf.B * PolyX(3L), basis);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == PolyX(3L));
}

TEST_CASE("reference small-n formulas") {
  BlowupFunctions bf = blowup_functions(32);
  CHECK(reference_small_relations().size() == 6);
  SmallFormulaReport rep = verify_small_formulas(bf);
  std::string all;
  for (const auto& l : rep.lines) all += l + "\n";
  INFO(all);
  CHECK(rep.ok);
}
