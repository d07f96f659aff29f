#include "spherecalc/immersed.hpp"

#include <doctest.h>

#include <gmpxx.h>

using namespace sc;

namespace {

long floor_q(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return f.get_si();
}

bool all_required_ok(const ImmersedEngine& eng) {
  for (const auto& rec : eng.records())
    if (!rec.ok()) return false;
  return true;
}

}  // namespace

TEST_CASE("index functions agree with a rational floor") {
  for (int p = 0; p <= 6; ++p)
    for (int s = 0; s <= p; ++s) CHECK(r_index(p, s) == floor_q(frac(p + 1 - s, 2)));
  for (int a = -20; a <= 6; ++a)
    for (int s = 0; s <= 4; ++s) {
      long k = s - floor_q(frac(a + 1, 2)) - 1;
      CHECK(k_index(a, s) == k);
      CHECK(k0_index(a, s) == k + (a % 2 != 0 ? 1 : 0));
    }
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(3, 2) == 1);
}

TEST_CASE("required order") {
  CHECK(immersed_required_order(0, 0, -2) == 16);
  CHECK(immersed_required_order(4, 0, -12) == 36);
}

TEST_CASE("base case matches the canonical normal form") {
  ImmersedEngine eng(24);
  for (int a = -2; a >= -7; --a) {
    NormalForm base = eng.base_case(a);
    CHECK(base == eng.canonical(0, 0, a));
    CHECK(normal_form_violations(base).empty());
  }
  CHECK_THROWS(eng.base_case(-1));
}

TEST_CASE("base case coefficients for a = -2, -3") {
  ImmersedEngine eng(20, false);
  AlphaPoly one = AlphaPoly::monomial(PolyX(1L), 0);
  AlphaPoly alpha = AlphaPoly::monomial(PolyX(1L), 1);
  NormalForm m2 = eng.base_case(-2);
  CHECK(m2.k == 0);
  REQUIRE(m2.c.size() == 1);
  REQUIRE(m2.d.size() == 1);
  CHECK(m2.c[0] == one);
  CHECK(m2.d[0] == alpha);
  NormalForm m3 = eng.base_case(-3);
  REQUIRE(m3.c.size() == 1);
  REQUIRE(m3.d.size() == 2);
  CHECK(m3.c[0] == one);
  CHECK(m3.d[0] == alpha);
  CHECK(m3.d[1] == AlphaPoly({PolyX(), PolyX::x() * frac(1, 6), PolyX(), PolyX(frac(1, 6))}));
}

TEST_CASE("worked examples") {
  NormalForm a = derive_immersed(1, 1, -2, immersed_required_order(1, 1, -2));
  CHECK(a.r == 0);
  CHECK(a.k == 1);
  CHECK(a.c.size() == 2);
  NormalForm b = derive_immersed(1, 0, -4, immersed_required_order(1, 0, -4));
  CHECK(b.r == 1);
  NormalForm c = derive_immersed(2, 0, -4, immersed_required_order(2, 0, -4));
  CHECK(c.r == 1);
  NormalForm d = derive_immersed(2, 1, -3, immersed_required_order(2, 1, -3));
  CHECK(d.k == 1);
  CHECK(d.k0 == 2);
  CHECK(d.d.size() == 3);
  for (const auto* nf : {&a, &b, &c, &d}) CHECK(normal_form_violations(*nf).empty());
}

TEST_CASE("vanishing when k is negative") {
  NormalForm nf = derive_immersed(1, 0, 0, immersed_required_order(1, 0, 0));
  CHECK(nf.r == 1);
  CHECK(nf.k == -1);
  CHECK(nf.c.empty());
  CHECK(nf.d.empty());
}

TEST_CASE("induction steps pass their required checks") {
  ImmersedEngine eng(immersed_required_order(2, 0, -8));
  for (int p = 0; p <= 2; ++p)
    for (int s = 0; s <= p; ++s) {
      const NormalForm& nf = eng.derive(p, s, -8 + 4 * p);
      CHECK(normal_form_violations(nf).empty());
    }
  CHECK_FALSE(eng.records().empty());
  CHECK(all_required_ok(eng));
  bool saw_model = false;
  for (const auto& rec : eng.records())
    for (const auto& c : rec.checks)
      if (c.status == CheckStatus::model) saw_model = true;
  CHECK(saw_model);
}

TEST_CASE("derived forms equal the canonical ones") {
  ImmersedEngine eng(immersed_required_order(2, 2, -6), false);
  for (int p = 0; p <= 2; ++p)
    for (int s = 0; s <= p; ++s) {
      int a = -6 + 2 * p;
      CHECK(eng.derive(p, s, a) == eng.canonical(p, s, a));
    }
}

TEST_CASE("kernel membership") {
  ImmersedEngine eng(20, false);
  CHECK(eng.kernel_member(1, 0, 0, AlphaPoly(), 1));
  CHECK(eng.kernel_member(1, 0, 0, AlphaPoly::monomial(PolyX(1L), 2), 1));
  CHECK_FALSE(eng.kernel_member(0, -2, 0, AlphaPoly::monomial(PolyX(1L), 0), 0));
}

TEST_CASE("usage errors") {
  CHECK_THROWS(derive_immersed(1, 2, -4, 24));
  CHECK_THROWS(derive_immersed(0, 0, -1, 24));
  CHECK_THROWS(derive_immersed(0, 0, 0, 24));
}

TEST_CASE("finite type order") {
  CHECK(finite_type_order(1, 0) == 1);
  CHECK(finite_type_order(0, 0) == 0);
  CHECK(finite_type_order(2, 3) == 1);
  CHECK(finite_type_order(1, 5) == 0);
  CHECK(finite_type_order(5, 40) == 0);
  for (int p = 0; p <= 5; ++p)
    for (int a = 0; a <= 2 * p; ++a) {
      int a2 = a % 2 ? a - 1 : a;
      CHECK(finite_type_order(p, a) == std::max(0L, floor_q(frac(2 * p + 2 - a2, 4))));
    }
  CHECK_THROWS(finite_type_order(1, -1));
  CHECK_THROWS(finite_type_order(-1, 0));
}

TEST_CASE("status names") {
  CHECK(to_string(CheckStatus::literal) == "literal");
  CHECK(to_string(CheckStatus::open) == "open");
}
