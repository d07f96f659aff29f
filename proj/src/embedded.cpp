#include "spherecalc/embedded.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sc {

namespace {

constexpr int kExhaustiveTwistLimit = 14;

std::vector<int> sigma_powers(int count, int parity) {
  std::vector<int> p;
  for (int r = 0; r < count; ++r) p.push_back(2 * r + parity);
  return p;
}

TwistPattern pattern_with(int n, const std::vector<int>& twisted) {
  TwistPattern tp;
  tp.parities.assign(n, 0);
  for (int i : twisted) tp.parities.at(i) = 1;
  return tp;
}

std::map<std::pair<int, BasisMonomial>, PolyX> term_map(const EmbeddedRelation& rel) {
  std::map<std::pair<int, BasisMonomial>, PolyX> m;
  for (const auto* list : {&rel.cosh_terms, &rel.sinh_terms})
    for (const auto& t : *list)
      if (!t.coeff.is_zero()) m[{t.sigma_power, t.mono}] += t.coeff;
  return m;
}

// sum_j mu_j C_j, where mu_j are the moments of the model series `moments_of`.
SeriesT relation_rhs(const EmbeddedRelation& rel, const SeriesT& moments_of,
                     const std::vector<Rational>& sigma_scale, const BlowupFunctions& bf,
                     std::map<BasisMonomial, SeriesT>& cache) {
  SeriesT acc(moments_of.order());
  for (const auto* list : {&rel.cosh_terms, &rel.sinh_terms}) {
    for (const auto& t : *list) {
      if (t.sigma_power >= moments_of.order()) throw std::out_of_range("order too small for relation");
      PolyX mu = moments_of[t.sigma_power] * factorial(t.sigma_power);
      if (!sigma_scale.empty()) mu *= sigma_scale.at(t.sigma_power);
      if (mu.is_zero()) continue;
      auto it = cache.find(t.mono);
      if (it == cache.end()) it = cache.emplace(t.mono, basis_series(t.mono, bf)).first;
      acc += it->second * (mu * t.coeff);
    }
  }
  return acc;
}

}  // namespace

std::vector<BasisMonomial> case_basis(int n, int epsilon, int parity) {
  std::vector<BasisMonomial> out;
  for (int i = 0;; ++i) {
    BasisMonomial m;
    if (epsilon == 0 && parity == 0) m = {2 * i, n - 2 * i, 0};
    if (epsilon == 0 && parity == 1) m = {2 * i + 1, n - 2 * i - 3, 1};
    if (epsilon == 1 && parity == 0) m = {2 * i, n - 2 * i - 2, 1};
    if (epsilon == 1 && parity == 1) m = {2 * i + 1, n - 2 * i - 1, 0};
    if (m.b_exp < 0) break;
    out.push_back(m);
  }
  return out;
}

SeriesT basis_series(const BasisMonomial& m, const BlowupFunctions& bf) {
  SeriesT r = pow(bf.S, m.s_exp) * pow(bf.B, m.b_exp);
  if (m.delta_exp > 0) r = r * pow(bf.Delta, m.delta_exp);
  return r;
}

SeriesT model_row_function(int n, int epsilon, int parity, int i, ModelEvaluator& ev) {
  std::vector<int> twisted;
  bool z = false;
  if (epsilon == 0 && parity == 0) {
    for (int j = 0; j < 2 * i; ++j) twisted.push_back(j);
  } else if (epsilon == 1 && parity == 1) {
    for (int j = 0; j <= 2 * i; ++j) twisted.push_back(j);
  } else {
    // e1 twisted, e2 untwisted: (e1 - e2) turns S'B - SB' into a Delta factor.
    z = true;
    int others = epsilon == 0 ? 2 * i + 1 : 2 * i;
    twisted.push_back(0);
    for (int j = 0; j < others; ++j) twisted.push_back(2 + j);
  }
  SeriesT f = ev.exp_sigma(pattern_with(n, twisted), z);
  return parity == 0 ? f.even_part() : f.odd_part();
}

std::vector<std::vector<PolyX>> moment_matrix(int n, int epsilon, int parity,
                                              const BlowupFunctions& bf, bool normalized) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  ModelEvaluator ev(bf);
  auto basis = case_basis(n, epsilon, parity);
  int m = static_cast<int>(basis.size());
  auto pows = sigma_powers(m, parity);
  std::vector<std::vector<PolyX>> M(m, std::vector<PolyX>(m));
  for (int i = 0; i < m; ++i) {
    SeriesT f = model_row_function(n, epsilon, parity, i, ev);
    for (int r = 0; r < m; ++r) {
      if (pows[r] >= f.order()) throw std::out_of_range("order too small for moment matrix");
      M[i][r] = normalized ? f[pows[r]] : f[pows[r]] * factorial(pows[r]);
    }
  }
  return M;
}

std::vector<PolyX> fit_to_basis(const SeriesT& f, const std::vector<SeriesT>& basis) {
  SeriesT rem = f;
  int last = -1;
  std::vector<PolyX> coeffs;
  for (const auto& b : basis) {
    int lead = b.valuation();
    if (lead <= last || lead >= b.order() || b[lead] != PolyX(1L))
      throw std::invalid_argument("basis leading orders must increase with unit leading terms");
    last = lead;
    PolyX c = lead < rem.order() ? rem[lead] : PolyX();
    coeffs.push_back(c);
    if (!c.is_zero()) rem -= b * c;
  }
  if (!rem.is_zero())
    throw std::domain_error("outside basis span: remainder at t^" + std::to_string(rem.valuation()));
  return coeffs;
}

EmbeddedRelation derive_embedded(int n, int epsilon, const BlowupFunctions& bf) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (epsilon != 0 && epsilon != 1) throw std::invalid_argument("epsilon must be 0 or 1");
  EmbeddedRelation rel;
  rel.n = n;
  rel.epsilon = epsilon;
  rel.order = bf.order;
  ModelEvaluator ev(bf);
  for (int parity = 0; parity <= 1; ++parity) {
    auto basis = case_basis(n, epsilon, parity);
    int m = static_cast<int>(basis.size());
    if (m == 0) continue;
    auto pows = sigma_powers(m, parity);
    if (pows.back() >= bf.order - 1) throw std::out_of_range("order too small for n");
    std::vector<SeriesT> rows;
    std::vector<std::vector<PolyX>> M(m, std::vector<PolyX>(m));
    for (int i = 0; i < m; ++i) {
      rows.push_back(model_row_function(n, epsilon, parity, i, ev));
      for (int r = 0; r < m; ++r) M[i][r] = rows[i][pows[r]] * factorial(pows[r]);
    }
    // f_i = sum_r M[i][r] C_r with M upper triangular: back substitution.
    std::vector<SeriesT> C(m);
    for (int r = m - 1; r >= 0; --r) {
      if (!M[r][r].is_constant() || M[r][r].is_zero())
        throw std::logic_error("moment matrix diagonal is not a nonzero constant");
      for (int i = r + 1; i < m; ++i)
        if (!M[i][r].is_zero()) throw std::logic_error("moment matrix is not triangular");
      SeriesT acc = rows[r];
      for (int r2 = r + 1; r2 < m; ++r2)
        if (!M[r][r2].is_zero()) acc -= C[r2] * M[r][r2];
      C[r] = acc * PolyX(Rational(1) / M[r][r][0]);
    }
    std::vector<SeriesT> basis_f;
    for (const auto& b : basis) basis_f.push_back(basis_series(b, bf));
    auto& out = parity == 0 ? rel.cosh_terms : rel.sinh_terms;
    for (int r = 0; r < m; ++r) {
      auto coeffs = fit_to_basis(C[r], basis_f);
      for (int i = 0; i < m; ++i)
        if (!coeffs[i].is_zero()) out.push_back({pows[r], coeffs[i], basis[i]});
    }
  }
  return rel;
}

std::vector<TwistPattern> admissible_twists(int n, int epsilon) {
  if (n <= kExhaustiveTwistLimit) return twist_patterns(n, epsilon);
  std::vector<TwistPattern> out;
  for (int p1 = 0; p1 <= 1; ++p1)
    for (int p2 = 0; p2 <= 1; ++p2)
      for (int rest = 0; rest <= n - 2; ++rest) {
        if ((p1 + p2 + rest) % 2 != epsilon) continue;
        TwistPattern tp;
        tp.parities.assign(n, 0);
        tp.parities[0] = p1;
        tp.parities[1] = p2;
        for (int j = 0; j < rest; ++j) tp.parities[2 + j] = 1;
        out.push_back(std::move(tp));
      }
  return out;
}

RelationReport verify_embedded(const EmbeddedRelation& rel, const BlowupFunctions& bf) {
  ModelEvaluator ev(bf);
  RelationReport rep;
  std::map<BasisMonomial, SeriesT> cache;
  for (const auto& tp : admissible_twists(rel.n, rel.epsilon)) {
    for (int z = 0; z <= (rel.n >= 2 ? 1 : 0); ++z) {
      SeriesT lhs = ev.exp_sigma(tp, z == 1);
      SeriesT rhs = relation_rhs(rel, lhs, {}, bf, cache);
      SeriesT diff = lhs - rhs;
      ++rep.patterns_checked;
      if (!diff.is_zero()) {
        rep.ok = false;
        std::string pat;
        for (int p : tp.parities) pat += std::to_string(p);
        rep.failures.push_back("pattern " + pat + (z ? " z=e1-e2" : " z=1") + ": t^" +
                               std::to_string(diff.valuation()) + " residual " +
                               diff[diff.valuation()].str());
      }
    }
  }
  return rep;
}

int hat_power(int n, int epsilon) {
  if (epsilon == 0 && n % 2 == 0) return n - 1;
  if (epsilon == 1 && n % 2 == 1) return n - 1;
  return -1;
}

std::vector<EmbeddedRelation> reference_small_relations() {
  const PolyX x = PolyX::x();
  auto R = [](long p, long q) { return PolyX(frac(p, q)); };
  auto rel = [](int n, int eps, std::vector<EmbeddedTerm> terms) {
    EmbeddedRelation r;
    r.n = n;
    r.epsilon = eps;
    for (auto& t : terms) (t.sigma_power % 2 == 0 ? r.cosh_terms : r.sinh_terms).push_back(t);
    return r;
  };
  return {
      rel(2, 0, {{0, R(1, 1), {0, 2, 0}}, {2, R(1, 2), {2, 0, 0}}}),
      rel(2, 1, {{0, R(1, 1), {0, 0, 1}}, {1, R(1, 1), {1, 1, 0}}}),
      rel(3, 0, {{0, R(1, 1), {0, 3, 0}}, {1, R(1, 1), {1, 0, 1}}, {2, R(1, 2), {2, 1, 0}}}),
      rel(3, 1,
          {{0, R(1, 1), {0, 1, 1}},
           {1, R(1, 1), {1, 2, 0}},
           {1, x * frac(1, 6), {3, 0, 0}},
           {3, R(1, 6), {3, 0, 0}}}),
      rel(4, 0,
          {{0, R(1, 1), {0, 4, 0}},
           {0, R(1, 3), {4, 0, 0}},
           {1, R(1, 1), {1, 1, 1}},
           {2, R(1, 2), {2, 2, 0}},
           {2, x * frac(1, 6), {4, 0, 0}},
           {4, R(1, 24), {4, 0, 0}}}),
      rel(4, 1,
          {{0, R(1, 1), {0, 2, 1}},
           {0, x * frac(1, 2), {2, 0, 1}},
           {1, R(1, 1), {1, 3, 0}},
           {1, x * frac(1, 6), {3, 1, 0}},
           {2, R(1, 2), {2, 0, 1}},
           {3, R(1, 6), {3, 1, 0}}}),
  };
}

SmallFormulaReport verify_small_formulas(const BlowupFunctions& bf) {
  SmallFormulaReport rep;
  for (const auto& ref : reference_small_relations()) {
    EmbeddedRelation derived = derive_embedded(ref.n, ref.epsilon, bf);
    auto a = term_map(derived), b = term_map(ref);
    std::string label = "n=" + std::to_string(ref.n) + " eps=" + std::to_string(ref.epsilon);
    if (a == b) {
      rep.lines.push_back(label + ": matches reference (" + std::to_string(b.size()) + " terms)");
    } else {
      rep.ok = false;
      std::string diff;
      for (const auto& [k, v] : b) {
        auto it = a.find(k);
        if (it == a.end() || it->second != v)
          diff += " sigma^" + std::to_string(k.first) + " " + monomial_str(k.second) + ": reference " +
                  v.str() + ", derived " + (it == a.end() ? "0" : it->second.str()) + ";";
      }
      for (const auto& [k, v] : a)
        if (!b.count(k))
          diff += " sigma^" + std::to_string(k.first) + " " + monomial_str(k.second) +
                  ": reference 0, derived " + v.str() + ";";
      rep.lines.push_back(label + ": MISMATCH" + diff);
    }
  }

  // Double angle formulas: the n = 4, epsilon = 0 relation at sigma = 2e.
  EmbeddedRelation r4 = derive_embedded(4, 0, bf);
  std::map<BasisMonomial, SeriesT> cache;
  std::vector<Rational> pow2{Rational(1)};
  for (int j = 1; j < bf.order; ++j) pow2.push_back(pow2.back() * 2);
  auto check = [&](const std::string& name, const SeriesT& lhs, const SeriesT& rhs) {
    bool ok = agree(lhs, rhs);
    rep.ok = rep.ok && ok;
    rep.lines.push_back(name + (ok ? ": holds" : ": FAILS"));
  };
  SeriesT B4 = pow(bf.B, 4), S4 = pow(bf.S, 4);
  SeriesT rhs_untwisted = relation_rhs(r4, bf.B, pow2, bf, cache);
  check("B(2t) = B^4 - S^4 via sigma = 2e", series_rescale(bf.B, 2), rhs_untwisted);
  check("B^4 - S^4 from the relation", rhs_untwisted, B4 - S4);
  SeriesT rhs_twisted = relation_rhs(r4, bf.S, pow2, bf, cache);
  check("S(2t) = 2 Delta S B via sigma = 2e", series_rescale(bf.S, 2), rhs_twisted);
  check("2 Delta S B from the relation", rhs_twisted, bf.Delta * bf.S * bf.B * PolyX(2L));

  // Delta^2: sigma = e1 + ... + e4, twist e1 + e3, z = (e1 - e2)(e3 - e4).
  FormalExpr e = FormalExpr::exponential({1, 1, 1, 1}, SeriesT::constant(PolyX(1L), bf.order));
  FormalExpr z = e.times_class(0).times_class(2) - e.times_class(0).times_class(3) -
                 e.times_class(1).times_class(2) + e.times_class(1).times_class(3);
  SeriesT lhs = evaluate(z, pattern_with(4, {0, 2}), bf);
  SeriesT rhs = relation_rhs(r4, lhs, {}, bf, cache);
  SeriesT expected = B4 - pow(bf.S, 2) * pow(bf.B, 2) * PolyX::x() + S4;
  check("Delta^2 from the relation (twist e1+e3, z=(e1-e2)(e3-e4))", lhs, rhs);
  check("Delta^2 = B^4 - x S^2 B^2 + S^4", rhs, expected);
  return rep;
}

std::string monomial_str(const BasisMonomial& m) {
  std::string out;
  auto part = [&](const char* sym, int e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += sym;
    if (e > 1) out += "^" + std::to_string(e);
  };
  part("S", m.s_exp);
  part("B", m.b_exp);
  part("Delta", m.delta_exp);
  return out.empty() ? "1" : out;
}

}  // namespace sc
