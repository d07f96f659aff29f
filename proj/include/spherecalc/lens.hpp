#pragma once

#include "spherecalc/rational.hpp"

#include <string>
#include <vector>

namespace sc {

// Flat U(2) connection on L(p,1) labelled by m = k - l in Z_{2p} modulo sign.
struct FlatClass {
  int m = 0;
  bool trivial = false;
  int s = 1;  // 3 when trivial
};

std::vector<FlatClass> character_variety(int p, int parity);

int stabilizer_dim(int p, int m);

Rational dim_cylinder(int p, const Rational& k, int m, int m_to);
Rational dim_end(int p, const Rational& k, int m);
Rational minimal_energy(int p, int m, int m_to);

// Charges k0, k0 + 1, ... up to cap; k0 is the least element of (1/p)Z with
// dim_end integral and k0 >= m^2/(4p). For m = 0 the charges are the
// positive integers.
std::vector<Rational> admissible_charges(int p, int m, const Rational& cap);

struct PosetVertex {
  int m = 0;
  Rational k;
  bool trivial = false;
  Rational dim;  // dim_end + s(m)
};

struct PosetEdge {
  int from = 0;
  int to = 0;
  Rational energy;
};

struct PosetJ {
  int n = 0;
  int p = 0;
  int parity = 0;
  std::vector<PosetVertex> vertices;  // sorted by (m, k)
  std::vector<PosetEdge> edges;       // sorted by (from, to)
};

PosetJ build_poset(int p, int parity, int n);

// Vertex bounds, integrality, edge energies and path independence.
std::vector<std::string> poset_violations(const PosetJ& j);

enum class PosetFormat { dot, ascii };

std::string render_poset(const PosetJ& j, PosetFormat format);

}  // namespace sc
