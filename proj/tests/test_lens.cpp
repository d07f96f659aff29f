#include "spherecalc/lens.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace sc;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SC_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Classes m in Z_{2p} with m == parity mod 2, identified with -m.
std::set<int> brute_force_classes(int p, int parity) {
  std::set<int> out;
  for (int m = 0; m < 2 * p; ++m)
    if (m % 2 == parity) out.insert(std::min(m, 2 * p - m));
  return out;
}

}  // namespace

TEST_CASE("character varieties") {
  for (int p = 1; p <= 9; ++p)
    for (int parity = 0; parity <= 1; ++parity) {
      auto chi = character_variety(p, parity);
      std::set<int> ms;
      for (const auto& c : chi) {
        ms.insert(c.m);
        CHECK(c.trivial == (c.m == 0 || c.m == p));
        CHECK(c.s == (c.trivial ? 3 : 1));
        CHECK(stabilizer_dim(p, c.m) == c.s);
      }
      CHECK(ms == brute_force_classes(p, parity));
    }
}

TEST_CASE("dimension formulas") {
  CHECK(dim_cylinder(6, frac(1, 2), 2, 4) == 3);
  CHECK(dim_cylinder(6, frac(1, 6), 0, 2) == 1);
  CHECK(dim_end(6, frac(3, 2), 6) == 9);
  CHECK(minimal_energy(6, 2, 4) == frac(1, 2));
  CHECK(minimal_energy(6, 0, 2) == frac(1, 6));
  CHECK(minimal_energy(6, 2, 0) == frac(5, 6));
}

TEST_CASE("admissible charges") {
  auto zero = admissible_charges(6, 0, Rational(3));
  REQUIRE(zero.size() == 3);
  CHECK(zero[0] == 1);
  auto two = admissible_charges(6, 2, Rational(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == frac(1, 6));
  for (const auto& k : admissible_charges(6, 4, Rational(5))) CHECK((dim_end(6, k, 4).get_den() == 1));
}

TEST_CASE("poset J_10 for p = 6") {
  PosetJ even = build_poset(6, 0, 10);
  CHECK(even.vertices.size() == 9);
  CHECK(even.edges.size() == 11);
  CHECK(poset_violations(even).empty());
  PosetJ odd = build_poset(6, 1, 10);
  CHECK(odd.vertices.size() == 7);
  CHECK(odd.edges.size() == 7);
  CHECK(poset_violations(odd).empty());
  for (const auto& v : even.vertices) {
    CHECK(v.dim > 0);
    CHECK(v.dim <= 20);
    CHECK(v.dim == dim_end(6, v.k, v.m) + stabilizer_dim(6, v.m));
  }
  for (const auto& e : even.edges) {
    const auto& a = even.vertices[e.from];
    const auto& b = even.vertices[e.to];
    CHECK(std::abs(a.m - b.m) == 2);
    CHECK(b.k - a.k == e.energy);
    CHECK(e.energy == minimal_energy(6, a.m, b.m));
  }
}

TEST_CASE("a corrupted edge is reported") {
  PosetJ j = build_poset(6, 0, 10);
  j.edges.front().energy += 1;
  CHECK_FALSE(poset_violations(j).empty());
}

TEST_CASE("poset renderings match the snapshots") {
  for (const char* par : {"even", "odd"}) {
    PosetJ j = build_poset(6, std::string(par) == "odd", 10);
    CHECK(render_poset(j, PosetFormat::dot) == read_golden(std::string("j10_p6_") + par + ".dot"));
    CHECK(render_poset(j, PosetFormat::ascii) == read_golden(std::string("j10_p6_") + par + ".txt"));
  }
}
