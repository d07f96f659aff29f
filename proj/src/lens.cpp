#include "spherecalc/lens.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sc {

namespace {

long floor_of(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return f.get_si();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace

std::vector<FlatClass> character_variety(int p, int parity) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  std::vector<FlatClass> out;
  for (int m = parity % 2; m <= p; m += 2) {
    bool trivial = m % p == 0;
    out.push_back({m, trivial, trivial ? 3 : 1});
  }
  return out;
}

int stabilizer_dim(int p, int m) { return m % p == 0 ? 3 : 1; }

Rational dim_cylinder(int p, const Rational& k, int m, int m_to) {
  return 8 * k + 2 * (m_to - m) - frac(2 * (m_to * m_to - m * m), p) - stabilizer_dim(p, m);
}

Rational dim_end(int p, const Rational& k, int m) {
  return 8 * k - 3 + 2 * m - frac(2 * m * m, p);
}

Rational minimal_energy(int p, int m, int m_to) {
  Rational e = frac(m_to * m_to - m * m, 4 * p);
  if (m_to < m) e += frac(m - m_to, 2);
  return e;
}

std::vector<Rational> admissible_charges(int p, int m, const Rational& cap) {
  std::vector<Rational> out;
  Rational k;
  if (m == 0) {
    k = 1;
  } else {
    long j = (static_cast<long>(m) * m + 3) / 4;
    for (;; ++j) {
      Rational cand = frac(j, p);
      if (is_integer(dim_end(p, cand, m))) {
        k = cand;
        break;
      }
      if (j > static_cast<long>(m) * m + 8L * p) throw std::logic_error("no integral charge");
    }
  }
  for (; k <= cap; k += 1) out.push_back(k);
  return out;
}

PosetJ build_poset(int p, int parity, int n) {
  PosetJ j;
  j.n = n;
  j.p = p;
  j.parity = parity;
  for (const auto& fc : character_variety(p, parity)) {
    // dim_end grows by 8 per unit charge; this cap is past 2n for every m.
    Rational cap = frac(2 * n + 3, 8) + frac(fc.m * fc.m, 4 * p) + 1;
    for (const auto& k : admissible_charges(p, fc.m, cap)) {
      Rational dim = dim_end(p, k, fc.m) + fc.s;
      if (dim > 0 && dim <= 2 * n) j.vertices.push_back({fc.m, k, fc.trivial, dim});
    }
  }
  std::sort(j.vertices.begin(), j.vertices.end(), [](const PosetVertex& a, const PosetVertex& b) {
    return a.m != b.m ? a.m < b.m : a.k < b.k;
  });
  int nv = static_cast<int>(j.vertices.size());
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b) {
      const auto& u = j.vertices[a];
      const auto& v = j.vertices[b];
      if (std::abs(u.m - v.m) != 2) continue;
      Rational e = minimal_energy(p, u.m, v.m);
      if (v.k - u.k == e) j.edges.push_back({a, b, e});
    }
  return j;
}

std::vector<std::string> poset_violations(const PosetJ& j) {
  std::vector<std::string> out;
  for (const auto& v : j.vertices) {
    Rational dim = dim_end(j.p, v.k, v.m) + stabilizer_dim(j.p, v.m);
    if (dim != v.dim) out.push_back("stored dimension differs");
    if (!is_integer(dim)) out.push_back("non-integral dimension at m=" + std::to_string(v.m));
    if (dim <= 0 || dim > 2 * j.n) out.push_back("dimension outside (0, 2n]");
  }
  for (const auto& e : j.edges) {
    const auto& u = j.vertices.at(e.from);
    const auto& v = j.vertices.at(e.to);
    if (std::abs(u.m - v.m) != 2) out.push_back("edge with |dm| != 2");
    if (v.k - u.k != e.energy || e.energy != minimal_energy(j.p, u.m, v.m))
      out.push_back("edge energy differs from minimal energy");
  }
  // Potential from accumulated energies; a conflict means path dependence.
  int nv = static_cast<int>(j.vertices.size());
  std::vector<std::vector<std::pair<int, Rational>>> adj(nv);
  for (const auto& e : j.edges) {
    adj[e.from].emplace_back(e.to, e.energy);
    adj[e.to].emplace_back(e.from, -e.energy);
  }
  std::vector<bool> seen(nv, false);
  std::vector<Rational> pot(nv);
  for (int root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (const auto& [v, w] : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          pot[v] = pot[u] + w;
          bfs.push(v);
        } else if (pot[v] != pot[u] + w) {
          out.push_back("path dependent energy");
        }
      }
    }
  }
  return out;
}

std::string render_poset(const PosetJ& j, PosetFormat format) {
  std::ostringstream os;
  std::map<long, std::vector<int>> columns;
  for (int i = 0; i < static_cast<int>(j.vertices.size()); ++i)
    columns[floor_of(j.vertices[i].k)].push_back(i);
  const char* parity = j.parity ? "odd" : "even";
  if (format == PosetFormat::dot) {
    os << "digraph J" << j.n << " {\n";
    os << "  label=\"J_" << j.n << " p=" << j.p << " " << parity << "\";\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=box];\n";
    for (int i = 0; i < static_cast<int>(j.vertices.size()); ++i) {
      const auto& v = j.vertices[i];
      os << "  v" << i << " [label=\"m=" << v.m << "\\nk=" << to_plain_string(v.k)
         << "\\ndim=" << to_plain_string(v.dim) << "\"" << (v.trivial ? ", style=bold" : "")
         << "];\n";
    }
    for (const auto& [col, ids] : columns) {
      os << "  { rank=same;";
      for (int i : ids) os << " v" << i << ";";
      os << " }\n";
    }
    for (const auto& e : j.edges)
      os << "  v" << e.from << " -> v" << e.to << " [label=\"" << to_plain_string(e.energy)
         << "\"];\n";
    os << "}\n";
    return os.str();
  }
  os << "J_" << j.n << " p=" << j.p << " " << parity << ": " << j.vertices.size()
     << " vertices, " << j.edges.size() << " edges\n";
  if (j.vertices.empty()) return os.str();
  constexpr int kWidth = 9;
  std::set<int> ms;
  for (const auto& v : j.vertices) ms.insert(v.m);
  std::ostringstream header;
  header << std::left << std::setw(6) << "m\\k";
  for (const auto& [col, ids] : columns)
    header << std::setw(kWidth) << ("[" + std::to_string(col) + "," + std::to_string(col + 1) + ")");
  std::string head = header.str();
  head.erase(head.find_last_not_of(' ') + 1);
  os << head << "\n";
  for (int m : ms) {
    std::ostringstream row;
    row << std::left << std::setw(6) << m;
    for (const auto& [col, ids] : columns) {
      std::string cell;
      for (int i : ids)
        if (j.vertices[i].m == m)
          cell = to_plain_string(j.vertices[i].k) + (j.vertices[i].trivial ? "*" : "");
      row << std::setw(kWidth) << cell;
    }
    std::string line = row.str();
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  for (const auto& e : j.edges) {
    const auto& u = j.vertices[e.from];
    const auto& v = j.vertices[e.to];
    os << "(" << u.m << "," << to_plain_string(u.k) << ") -> (" << v.m << ","
       << to_plain_string(v.k) << ")  energy " << to_plain_string(e.energy) << "\n";
  }
  return os.str();
}

}  // namespace sc
