#include "spherecalc/immersed.hpp"

#include <algorithm>
#include <stdexcept>

namespace sc {

namespace {

PolyX x2_minus_4() { return PolyX::x() * PolyX::x() - PolyX(4L); }

// One pattern per orbit of the permutations fixing e1 and e2.
std::vector<TwistPattern> orbit_patterns(int n, int parity) {
  std::vector<TwistPattern> out;
  if (n == 1) {
    if (parity % 2 == 1) out.push_back(TwistPattern{{1}});
    else out.push_back(TwistPattern{{0}});
    return out;
  }
  for (int p1 = 0; p1 <= 1; ++p1)
    for (int p2 = 0; p2 <= 1; ++p2)
      for (int rest = 0; rest <= n - 2; ++rest) {
        if ((p1 + p2 + rest) % 2 != parity) continue;
        TwistPattern tp;
        tp.parities.assign(n, 0);
        tp.parities[0] = p1;
        tp.parities[1] = p2;
        for (int j = 0; j < rest; ++j) tp.parities[2 + j] = 1;
        out.push_back(std::move(tp));
      }
  return out;
}

StepCheck literal_check(const std::string& name, bool holds, std::string detail = {}) {
  return {name, holds ? CheckStatus::literal : CheckStatus::failed, true, std::move(detail)};
}

}  // namespace

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int r_index(int p, int s) { return floor_div(p + 1 - s, 2); }
int k_index(int a, int s) { return s - floor_div(a + 1, 2) - 1; }
int k0_index(int a, int s) { return k_index(a, s) + ((a % 2 != 0) ? 1 : 0); }

bool operator==(const NormalForm& x, const NormalForm& y) {
  return x.p == y.p && x.s == y.s && x.a == y.a && x.r == y.r && x.k == y.k && x.k0 == y.k0 &&
         x.c == y.c && x.d == y.d;
}

std::vector<std::string> normal_form_violations(const NormalForm& nf) {
  std::vector<std::string> v;
  if (nf.r != r_index(nf.p, nf.s)) v.push_back("r differs from floor((p+1-s)/2)");
  if (nf.k != k_index(nf.a, nf.s)) v.push_back("k differs from s - floor((a+1)/2) - 1");
  if (nf.k0 != k0_index(nf.a, nf.s)) v.push_back("k0 differs from its parity rule");
  if (static_cast<int>(nf.c.size()) != std::max(nf.k + 1, 0)) v.push_back("cosh list length");
  if (static_cast<int>(nf.d.size()) != std::max(nf.k0 + 1, 0)) v.push_back("sinh list length");
  for (std::size_t i = 0; i < nf.c.size(); ++i) {
    if (nf.c[i].degree() > 2 * static_cast<int>(i)) v.push_back("deg c_" + std::to_string(i));
    if (!nf.c[i].has_parity(0)) v.push_back("c_" + std::to_string(i) + " not even");
  }
  for (std::size_t i = 0; i < nf.d.size(); ++i) {
    if (nf.d[i].degree() > 2 * static_cast<int>(i) + 1) v.push_back("deg d_" + std::to_string(i));
    if (!nf.d[i].has_parity(1)) v.push_back("d_" + std::to_string(i) + " not odd");
  }
  return v;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::literal: return "literal";
    case CheckStatus::certified: return "certified";
    case CheckStatus::model: return "model";
    case CheckStatus::open: return "open";
    case CheckStatus::failed: return "failed";
  }
  return "failed";
}

bool StepRecord::ok() const {
  for (const auto& c : checks)
    if (c.required && (c.status == CheckStatus::failed || c.status == CheckStatus::open))
      return false;
  return true;
}

int immersed_required_order(int p, int s, int a) {
  (void)s;
  int n = 4 * p - a;
  return std::max(16, n + 8);
}

ImmersedEngine::ImmersedEngine(int order, bool model_checks)
    : bf_(blowup_functions(order)), model_checks_(model_checks), ev_(bf_) {
  for (int j = 0; j < bf_.order; ++j) {
    moment_b_.push_back(moments(bf_, Kind::B, j));
    moment_s_.push_back(moments(bf_, Kind::S, j));
  }
}

AlphaPoly ImmersedEngine::shift_reduce(const AlphaPoly& poly, Kind mode) const {
  const auto& mom = mode == Kind::B ? moment_b_ : moment_s_;
  std::vector<PolyX> out(std::max(poly.degree() + 1, 0));
  for (int j = 0; j <= poly.degree(); ++j) {
    if (poly[j].is_zero()) continue;
    Rational pow2 = 1;
    for (int l = 0; l <= j; ++l, pow2 *= 2) {
      if (l >= static_cast<int>(mom.size())) throw std::out_of_range("order too small for transport");
      if (mom[l].is_zero()) continue;
      out[j - l] += poly[j] * mom[l] * Rational(binomial(j, l) * pow2);
    }
  }
  return AlphaPoly(std::move(out));
}

AlphaPoly ImmersedEngine::shift_reduce2(const AlphaPoly& poly, Kind mode1, Kind mode2) const {
  const auto& m1 = mode1 == Kind::B ? moment_b_ : moment_s_;
  const auto& m2 = mode2 == Kind::B ? moment_b_ : moment_s_;
  std::vector<PolyX> out(std::max(poly.degree() + 1, 0));
  for (int j = 0; j <= poly.degree(); ++j) {
    if (poly[j].is_zero()) continue;
    for (int l1 = 0; l1 <= j; ++l1) {
      if (l1 >= static_cast<int>(m1.size())) throw std::out_of_range("order too small for transport");
      if (m1[l1].is_zero()) continue;
      for (int l2 = 0; l1 + l2 <= j; ++l2) {
        if (l2 >= static_cast<int>(m2.size())) throw std::out_of_range("order too small for transport");
        if (m2[l2].is_zero()) continue;
        Rational w = binomial(j, l1) * binomial(j - l1, l2);
        mpq_mul_2exp(w.get_mpq_t(), w.get_mpq_t(), l1 + l2);
        out[j - l1 - l2] += poly[j] * (m1[l1] * m2[l2]) * w;
      }
    }
  }
  return AlphaPoly(std::move(out));
}

const SeriesT& ImmersedEngine::r_series(int a, int s) {
  auto key = std::make_pair(a, s);
  auto it = r_cache_.find(key);
  if (it != r_cache_.end()) return it->second;
  SeriesT base = a <= 0 ? bf_.B : series_inverse(bf_.B);
  SeriesT r = pow(base, static_cast<unsigned>(std::abs(a)));
  if (s > 0) {
    SeriesT two_minus_xq = SeriesT::constant(PolyX(2L), bf_.order) - bf_.q * PolyX::x();
    r = r * pow(series_inverse(two_minus_xq), static_cast<unsigned>(s));
  }
  return r_cache_.emplace(key, std::move(r)).first->second;
}

const SeriesT& ImmersedEngine::rho_series(int a, int s, int parity, int i) {
  auto key = std::make_tuple(a, s, parity, i);
  auto it = rho_series_cache_.find(key);
  if (it != rho_series_cache_.end()) return it->second;
  SeriesT v = i == 0 ? r_series(a, s) * (parity == 0 ? bf_.Qprime : bf_.Q)
                     : rho_series(a, s, parity, i - 1) * bf_.q;
  return rho_series_cache_.emplace(key, std::move(v)).first->second;
}

const std::vector<PolyX>& ImmersedEngine::rho_row(int a, int s, int parity, int m) {
  auto key = std::make_tuple(a, s, parity, m);
  auto it = rho_row_cache_.find(key);
  if (it != rho_row_cache_.end()) return it->second;
  int j = 2 * m + parity;
  std::vector<PolyX> row;
  for (int i = 0; i <= m; ++i) {
    const SeriesT& f = rho_series(a, s, parity, i);
    if (j >= f.order()) throw std::out_of_range("order too small for moment row");
    row.push_back(f[j] * factorial(j));
  }
  return rho_row_cache_.emplace(key, std::move(row)).first->second;
}

std::vector<AlphaPoly> ImmersedEngine::canonical_coeffs(int a, int s, int parity) {
  auto key = std::make_tuple(a, s, parity);
  auto it = canon_cache_.find(key);
  if (it != canon_cache_.end()) return it->second;
  int kk = parity == 0 ? k_index(a, s) : k0_index(a, s);
  std::vector<AlphaPoly> c;
  for (int m = 0; m <= kk; ++m) {
    const auto& row = rho_row(a, s, parity, m);
    const PolyX& diag = row[m];
    if (!diag.is_constant() || diag.is_zero())
      throw std::logic_error("normal form moment matrix has a singular diagonal");
    AlphaPoly acc = AlphaPoly::monomial(PolyX(1L), 2 * m + parity);
    for (int i = 0; i < m; ++i)
      if (!row[i].is_zero()) acc -= c[i] * row[i];
    c.push_back(acc * PolyX(Rational(1 / diag[0])));
  }
  return canon_cache_.emplace(key, c).first->second;
}

NormalForm ImmersedEngine::canonical(int p, int s, int a) {
  NormalForm nf;
  nf.p = p;
  nf.s = s;
  nf.a = a;
  nf.r = r_index(p, s);
  nf.k = k_index(a, s);
  nf.k0 = k0_index(a, s);
  nf.c = canonical_coeffs(a, s, 0);
  nf.d = canonical_coeffs(a, s, 1);
  return nf;
}

AlphaPoly ImmersedEngine::reduce_by(int a, int s, int parity, const AlphaPoly& mu) {
  int kk = parity == 0 ? k_index(a, s) : k0_index(a, s);
  int top = 2 * kk + parity;
  std::vector<PolyX> low;
  for (int j = 0; j <= std::min(top, mu.degree()); ++j) low.push_back(mu[j]);
  AlphaPoly out(std::move(low));
  const auto coeffs = canonical_coeffs(a, s, parity);
  for (int j = top + 1; j <= mu.degree(); ++j) {
    if (mu[j].is_zero()) continue;
    int m = (j - parity) / 2;
    auto key = std::make_tuple(a, s, parity, m);
    auto it = rule_cache_.find(key);
    if (it == rule_cache_.end()) {
      const auto& row = rho_row(a, s, parity, m);
      AlphaPoly e;
      for (int i = 0; i <= kk; ++i)
        if (!row[i].is_zero()) e += coeffs[i] * row[i];
      it = rule_cache_.emplace(key, std::move(e)).first;
    }
    out += it->second * mu[j];
  }
  return out;
}

bool ImmersedEngine::kernel_member(int p, int a, int parity, const AlphaPoly& mu, int r_ctx) {
  if (mu.is_zero()) return true;
  if (!mu.has_parity(parity)) return false;
  int rmax = 0;
  for (int s = 0; s <= p; ++s) rmax = std::max(rmax, r_index(p, s));
  const PolyX div = x2_minus_4();
  AlphaPoly m = mu;
  for (;;) {
    if (m.is_zero()) return true;
    int best_s = -1, best_k = 0;
    for (int s = 0; s <= p; ++s) {
      if (r_index(p, s) > r_ctx) continue;
      int kk = parity == 0 ? k_index(a, s) : k0_index(a, s);
      if (best_s < 0 || kk < best_k) {
        best_s = s;
        best_k = kk;
      }
    }
    if (best_s >= 0) {
      if (best_k < 0) return true;
      m = reduce_by(a, best_s, parity, m);
      if (m.is_zero()) return true;
    }
    if (r_ctx >= rmax) return false;
    AlphaPoly quotient;
    if (!m.divide_coeffs(div, quotient)) return false;
    m = std::move(quotient);
    ++r_ctx;
  }
}

std::vector<PolyX> ImmersedEngine::model_moments(const SeriesT& l, int upto) const {
  std::vector<PolyX> mom;
  for (int j = 0; j < std::min(upto, l.order()); ++j) mom.push_back(l[j] * factorial(j));
  return mom;
}

bool ImmersedEngine::model_kernel_member(int a, const AlphaPoly& mu) {
  if (a > -1) throw std::invalid_argument("model kernel needs a <= -1");
  if (mu.is_zero()) return true;
  int n = -a;
  for (const auto& tp : orbit_patterns(n, 1))
    for (int z = 0; z <= (n >= 2 ? 1 : 0); ++z) {
      SeriesT l = ev_.exp_sigma(tp, z == 1);
      if (!mu.apply(model_moments(l, l.order())).is_zero()) return false;
    }
  return true;
}

RelationReport ImmersedEngine::model_check(const NormalForm& nf) {
  if (nf.a > -1) throw std::invalid_argument("model check needs a <= -1");
  RelationReport rep;
  int n = -nf.a;
  for (const auto& tp : orbit_patterns(n, 1))
    for (int z = 0; z <= (n >= 2 ? 1 : 0); ++z) {
      SeriesT l = ev_.exp_sigma(tp, z == 1);
      auto mom = model_moments(l, l.order());
      for (int parity = 0; parity <= 1; ++parity) {
        const auto& coeffs = parity == 0 ? nf.c : nf.d;
        SeriesT side = parity == 0 ? l.even_part() : l.odd_part();
        SeriesT rhs(l.order());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          PolyX dc = coeffs[i].apply(mom);
          if (!dc.is_zero()) rhs += rho_series(nf.a, nf.s, parity, static_cast<int>(i)) * dc;
        }
        SeriesT diff = side - rhs;
        ++rep.patterns_checked;
        if (!diff.is_zero()) {
          rep.ok = false;
          std::string pat;
          for (int b : tp.parities) pat += std::to_string(b);
          rep.failures.push_back(std::string(parity ? "sinh" : "cosh") + " pattern " + pat +
                                 (z ? " z=e1-e2" : " z=1") + ": t^" +
                                 std::to_string(diff.valuation()));
        }
      }
    }
  return rep;
}

StepCheck ImmersedEngine::certify(const std::string& name, int p, int a, int parity,
                                  const AlphaPoly& mu, int r_ctx, bool required) {
  if (mu.is_zero()) return {name, CheckStatus::literal, required, {}};
  if (kernel_member(p, a, parity, mu, r_ctx)) return {name, CheckStatus::certified, required, {}};
  return {name, CheckStatus::open, required, "residual " + mu.str()};
}

StepCheck ImmersedEngine::certify_or_model(const std::string& name, int p, int a, int parity,
                                           const AlphaPoly& mu, int r_ctx, bool required) {
  StepCheck c = certify(name, p, a, parity, mu, r_ctx, required);
  if (c.status == CheckStatus::open && a <= -1 && model_checks_)
    c.status = model_kernel_member(a, mu) ? CheckStatus::model : CheckStatus::failed;
  return c;
}

void ImmersedEngine::attach_model_check(StepRecord& rec, const NormalForm& nf) {
  if (nf.a > -1 || !model_checks_) return;
  RelationReport rep = model_check(nf);
  rec.checks.push_back({"model relation", rep.ok ? CheckStatus::model : CheckStatus::failed, true,
                        rep.ok ? std::to_string(rep.patterns_checked) + " patterns"
                               : rep.failures.front()});
}

void ImmersedEngine::attach_canonical_comparison(StepRecord& rec, const QAlpha& raw_c,
                                                 const QAlpha& raw_d, const NormalForm& out) {
  bool all = true;
  for (int par = 0; par <= 1; ++par) {
    const auto& raw = par == 0 ? raw_c : raw_d;
    const auto& canon = par == 0 ? out.c : out.d;
    for (std::size_t i = 0; i < canon.size(); ++i)
      if (!kernel_member(out.p, out.a, par, raw[static_cast<int>(i)] - canon[i], out.r)) all = false;
    for (int i = static_cast<int>(canon.size()); i <= raw.degree(); ++i)
      if (!kernel_member(out.p, out.a, par, raw[i], out.r)) all = false;
  }
  rec.checks.push_back(
      {"raw coefficients match normal form", all ? CheckStatus::certified : CheckStatus::open, false, {}});
}

NormalForm ImmersedEngine::base_case(int a) {
  if (a > -2) throw std::invalid_argument("no embedded base case");
  int n = -a;
  EmbeddedRelation rel = derive_embedded(n, 1, bf_);
  NormalForm nf;
  nf.a = a;
  nf.r = r_index(0, 0);
  nf.k = k_index(a, 0);
  nf.k0 = k0_index(a, 0);
  std::vector<std::vector<PolyX>> c(std::max(nf.k + 1, 0)), d(std::max(nf.k0 + 1, 0));
  auto place = [](std::vector<std::vector<PolyX>>& v, int i, int power, const PolyX& coeff) {
    if (i < 0 || i >= static_cast<int>(v.size())) throw std::logic_error("embedded term outside normal form");
    if (static_cast<int>(v[i].size()) <= power) v[i].resize(power + 1);
    v[i][power] += coeff;
  };
  for (const auto& t : rel.cosh_terms) {
    if (t.mono.delta_exp != 1 || t.mono.s_exp % 2 != 0 || t.mono.b_exp != n - t.mono.s_exp - 2)
      throw std::logic_error("unexpected cosh monomial " + monomial_str(t.mono));
    place(c, t.mono.s_exp / 2, t.sigma_power, t.coeff);
  }
  for (const auto& t : rel.sinh_terms) {
    if (t.mono.delta_exp != 0 || t.mono.s_exp % 2 != 1 || t.mono.b_exp != n - t.mono.s_exp)
      throw std::logic_error("unexpected sinh monomial " + monomial_str(t.mono));
    place(d, (t.mono.s_exp - 1) / 2, t.sigma_power, t.coeff);
  }
  for (auto& v : c) nf.c.emplace_back(std::move(v));
  for (auto& v : d) nf.d.emplace_back(std::move(v));
  return nf;
}

NormalForm ImmersedEngine::step_raise_s(const NormalForm& in) {
  int p = in.p + 1, s = in.s + 1, a = in.a + 4;
  NormalForm out = canonical(p, s, a);
  StepRecord rec{"raise-s", p, s, a, {}};
  rec.checks.push_back(literal_check("index shift", in.k == out.k + 1 && in.k0 == out.k0 + 1 &&
                                                        in.r == out.r));
  const PolyX half(frac(1, 2));
  QAlpha cB, dS, cS, dB;
  {
    std::vector<AlphaPoly> v1, v2;
    for (const auto& c : in.c) {
      v1.push_back(shift_reduce(c, Kind::B));
      v2.push_back(shift_reduce(c, Kind::S) * half);
    }
    cB = QAlpha(v1);
    cS = QAlpha(v2);
    v1.clear();
    v2.clear();
    for (const auto& d : in.d) {
      v1.push_back(shift_reduce(d, Kind::S) * half);
      v2.push_back(shift_reduce(d, Kind::B));
    }
    dS = QAlpha(v1);
    dB = QAlpha(v2);
  }
  const QPoly f = q_one_minus_q2(), g = q_one_minus_xq_plus_q2();
  // cosh: the new coefficients are c(a+2e)|_B + d(a+2e)|_S / 2 up to index k.
  QAlpha w = cB + dS;
  for (int i = out.k + 1; i <= w.degree(); ++i)
    rec.checks.push_back(certify("cosh top cancellation q^" + std::to_string(i), p, a, 0, w[i],
                                 out.r, true));
  QAlpha lambda = cB * g - dS * f;
  for (int i = 0; i <= lambda.degree(); ++i)
    rec.checks.push_back(certify("cosh consistency q^" + std::to_string(i), p, a, 0, lambda[i],
                                 out.r, false));
  // sinh: twisted transport, constant term vanishes, then multiply by 2 - xq.
  rec.checks.push_back(literal_check("twisted transport has no constant term", cS[0].is_zero()));
  QAlpha v = cS.div_q();
  QAlpha dfull = v * q_two_minus_xq();
  for (int i = out.k0 + 1; i <= dfull.degree(); ++i)
    rec.checks.push_back(certify_or_model("sinh top term q^" + std::to_string(i), p, a, 1,
                                          dfull[i], out.r, false));
  QAlpha lambda1 = dB - v * f;
  for (int i = 0; i <= lambda1.degree(); ++i)
    rec.checks.push_back(certify("sinh consistency q^" + std::to_string(i), p, a, 1,
                                 lambda1[i], out.r, false));
  attach_canonical_comparison(rec, w.truncated(out.k + 1), dfull.truncated(out.k0 + 1), out);
  attach_model_check(rec, out);
  records_.push_back(std::move(rec));
  return out;
}

NormalForm ImmersedEngine::step_p_odd(const NormalForm& in) {
  int p = in.p + 1, s = 0, a = in.a + 4;
  NormalForm out = canonical(p, s, a);
  StepRecord rec{"p-odd", p, s, a, {}};
  rec.checks.push_back(literal_check("index shift", in.k == out.k + 2 && in.k0 == out.k0 + 2 &&
                                                        out.r == in.r + 1));
  const PolyX half(frac(1, 2));
  const PolyX x = PolyX::x();
  const QPoly f = q_one_minus_q2(), g = q_one_minus_xq_plus_q2();
  const QPoly phi1({x * x - PolyX(2L), -x}), phi2({PolyX(-2L), -x});
  rec.checks.push_back(literal_check("Bezout pair", qpoly_bezout_check(f, g, phi1, phi2, x2_minus_4())));
  std::vector<AlphaPoly> v1, v2, v3;
  for (const auto& c : in.c) v1.push_back(shift_reduce(c, Kind::B));
  for (const auto& d : in.d) {
    v2.push_back(shift_reduce(d, Kind::S) * half);
    v3.push_back(shift_reduce(d, Kind::B));
  }
  QAlpha ct(v1), dt(v2), dB(v3);
  QAlpha lambda = ct * g - dt * f;
  for (int i = 0; i <= lambda.degree(); ++i)
    rec.checks.push_back(certify("cosh consistency q^" + std::to_string(i), p, a, 0, lambda[i],
                                 in.r, false));
  // (x^2-4) ct == f * U with U = phi1 ct + phi2 dt.
  QAlpha u = ct * phi1 + dt * phi2;
  QAlpha payload = ct.scaled(x2_minus_4()) - u * f;
  for (int i = 0; i <= payload.degree(); ++i)
    rec.checks.push_back(certify("Bezout payload q^" + std::to_string(i), p, a, 0, payload[i],
                                 in.r, false));
  auto cdiv = qpoly_divmod(ct, f);
  for (int i = out.k + 1; i <= cdiv.quotient.degree(); ++i)
    rec.checks.push_back(certify("cosh quotient above degree bound q^" + std::to_string(i), p, a,
                                 0, cdiv.quotient[i], out.r, true));
  for (int i = 0; i <= cdiv.remainder.degree(); ++i)
    rec.checks.push_back(certify("cosh division remainder q^" + std::to_string(i), p, a, 0,
                                 cdiv.remainder[i], out.r, true));
  auto ddiv = qpoly_divmod(dB, f);
  for (int i = out.k0 + 1; i <= ddiv.quotient.degree(); ++i)
    rec.checks.push_back(certify("sinh quotient above degree bound q^" + std::to_string(i), p, a,
                                 1, ddiv.quotient[i], out.r, true));
  for (int i = 0; i <= ddiv.remainder.degree(); ++i)
    rec.checks.push_back(certify("sinh division remainder q^" + std::to_string(i), p, a, 1,
                                 ddiv.remainder[i], out.r, true));
  attach_canonical_comparison(rec, cdiv.quotient, ddiv.quotient, out);
  attach_model_check(rec, out);
  records_.push_back(std::move(rec));
  return out;
}

NormalForm ImmersedEngine::step_p_even(const NormalForm& in) {
  int p = in.p + 2, s = 0, a = in.a + 8;
  NormalForm out = canonical(p, s, a);
  StepRecord rec{"p-even", p, s, a, {}};
  rec.checks.push_back(literal_check("index shift", in.k == out.k + 4 && in.k0 == out.k0 + 4 &&
                                                        out.r == in.r + 1));
  const PolyX x = PolyX::x();
  const QPoly f = q_one_minus_q2(), g = q_one_minus_xq_plus_q2();
  const QPoly f2 = f * f;
  const QPoly phi1({x * x - PolyX(1L), -x});
  const QPoly phi2({PolyX(-3L), x * PolyX(-2L), PolyX(1L), x});
  rec.checks.push_back(literal_check("Bezout pair", qpoly_bezout_check(f2, g, phi1, phi2, x2_minus_4())));
  const PolyX half(frac(1, 2)), quarter(frac(1, 4));
  std::vector<AlphaPoly> va, vb, vc, vd;
  for (const auto& c : in.c) {
    va.push_back(shift_reduce2(c, Kind::B, Kind::B));
    vc.push_back(shift_reduce2(c, Kind::S, Kind::S) * quarter);
  }
  for (const auto& d : in.d) {
    vb.push_back(shift_reduce2(d, Kind::B, Kind::S) * half);
    vd.push_back(shift_reduce2(d, Kind::B, Kind::B));
  }
  QAlpha A(va), bq(vb), c3(vc), dBB(vd);
  rec.checks.push_back(literal_check("doubly twisted transport has no constant term", c3[0].is_zero()));
  QAlpha d3 = c3.div_q();
  QAlpha lambda_a = bq.shifted(1) - c3 * f;
  for (int i = 0; i <= lambda_a.degree(); ++i)
    rec.checks.push_back(certify("mixed consistency q^" + std::to_string(i), p, a, 1, lambda_a[i],
                                 in.r, false));
  QAlpha lambda_b = A * g - d3 * f2;
  for (int i = 0; i <= lambda_b.degree(); ++i)
    rec.checks.push_back(certify("cosh consistency q^" + std::to_string(i), p, a, 0, lambda_b[i],
                                 in.r, false));
  auto cdiv = qpoly_divmod(A, f2);
  for (int i = out.k + 1; i <= cdiv.quotient.degree(); ++i)
    rec.checks.push_back(certify("cosh quotient above degree bound q^" + std::to_string(i), p, a,
                                 0, cdiv.quotient[i], out.r, true));
  for (int i = 0; i <= cdiv.remainder.degree(); ++i)
    rec.checks.push_back(certify("cosh division remainder q^" + std::to_string(i), p, a, 0,
                                 cdiv.remainder[i], out.r, true));
  auto ddiv = qpoly_divmod(dBB, f2);
  for (int i = out.k0 + 1; i <= ddiv.quotient.degree(); ++i)
    rec.checks.push_back(certify("sinh quotient above degree bound q^" + std::to_string(i), p, a,
                                 1, ddiv.quotient[i], out.r, true));
  for (int i = 0; i <= ddiv.remainder.degree(); ++i)
    rec.checks.push_back(certify("sinh division remainder q^" + std::to_string(i), p, a, 1,
                                 ddiv.remainder[i], out.r, true));
  attach_canonical_comparison(rec, cdiv.quotient, ddiv.quotient, out);
  attach_model_check(rec, out);
  records_.push_back(std::move(rec));
  return out;
}

const NormalForm& ImmersedEngine::derive(int p, int s, int a) {
  if (p < 0 || s < 0 || s > p) throw std::invalid_argument("need 0 <= s <= p");
  if (a - 4 * p > -2) throw std::invalid_argument("base case outside embedded range");
  if (immersed_required_order(p, s, a) > bf_.order)
    throw std::out_of_range("engine order too small for this relation");
  auto key = std::make_tuple(p, s, a);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  NormalForm out;
  if (p == 0) {
    out = base_case(a);
    StepRecord rec{"base", 0, 0, a, {}};
    NormalForm canon = canonical(0, 0, a);
    rec.checks.push_back(literal_check("embedded relation equals normal form", out == canon));
    rec.checks.push_back(literal_check("shape", normal_form_violations(out).empty()));
    attach_model_check(rec, out);
    records_.push_back(std::move(rec));
  } else if (s > 0) {
    NormalForm in = derive(p - 1, s - 1, a - 4);
    out = step_raise_s(in);
  } else if (p % 2 == 1) {
    NormalForm in = derive(p - 1, 0, a - 4);
    out = step_p_odd(in);
  } else {
    NormalForm in = derive(p - 2, 0, a - 8);
    out = step_p_even(in);
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

NormalForm derive_immersed(int p, int s, int a, int order) {
  ImmersedEngine engine(std::max(order, immersed_required_order(p, s, a)), false);
  return engine.derive(p, s, a);
}

int finite_type_order(int p, int a) {
  if (p < 0) throw std::invalid_argument("p must be nonnegative");
  if (a < 0) throw std::invalid_argument("a must be nonnegative");
  int ae = a % 2 == 0 ? a : a - 1;
  return std::max(0, floor_div(2 * p + 2 - ae, 4));
}

}  // namespace sc
