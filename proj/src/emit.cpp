#include "spherecalc/emit.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace sc {

namespace {

Json doc(const char* kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

bool compound(const PolyX& c) { return c.degree() > 0 && c.str().find_first_of("+-", 1) != std::string::npos; }

std::string latex_rational(const Rational& r, bool drop_one) {
  Rational mag = abs(r);
  std::string sign = r < 0 ? "-" : "";
  if (drop_one && mag == 1) return sign;
  if (mag.get_den() == 1) return sign + mag.get_num().get_str();
  return sign + "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

std::string latex_monomial(const BasisMonomial& m) {
  std::string out;
  auto part = [&](const char* sym, int e) {
    if (e == 0) return;
    out += sym;
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  };
  part("S", m.s_exp);
  part("B", m.b_exp);
  part("\\Delta", m.delta_exp);
  return out.empty() ? "1" : out;
}

std::string latex_alphapoly(const AlphaPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int j = a.degree(); j >= 0; --j) {
    const PolyX& c = a[j];
    if (c.is_zero()) continue;
    std::string mono = j == 0 ? "" : (j == 1 ? "\\alpha" : "\\alpha^{" + std::to_string(j) + "}");
    std::string coef = latex_polyx(c);
    std::string term;
    if (mono.empty())
      term = coef;
    else if (c.is_constant())
      term = latex_rational(c[0], true) + mono;
    else
      term = (compound(c) ? "\\left(" + coef + "\\right)" : coef) + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

// Groups terms by sigma power; `term` renders coefficient times monomial.
template <class Render>
std::string grouped(const EmbeddedRelation& rel, const std::string& sigma_sym,
                    const std::string& open, const std::string& close, Render term,
                    std::string (*power)(const std::string&, int)) {
  std::map<int, std::vector<std::string>> groups;
  for (const auto* list : {&rel.cosh_terms, &rel.sinh_terms})
    for (const auto& t : *list)
      if (!t.coeff.is_zero()) groups[t.sigma_power].push_back(term(t));
  std::string out;
  for (const auto& [j, terms] : groups) {
    std::string body;
    for (const auto& s : terms) {
      if (body.empty())
        body = s;
      else if (s[0] == '-')
        body += " - " + s.substr(1);
      else
        body += " + " + s;
    }
    std::string g;
    if (j == 0)
      g = body;
    else if (terms.size() == 1 && body[0] == '-')
      g = "-" + power(sigma_sym, j) + body.substr(1);
    else if (terms.size() == 1)
      g = power(sigma_sym, j) + body;
    else
      g = power(sigma_sym, j) + open + body + close;
    if (out.empty())
      out = g;
    else if (g[0] == '-')
      out += " - " + g.substr(1);
    else
      out += " + " + g;
  }
  return out.empty() ? "0" : out;
}

std::string text_power(const std::string& sym, int j) {
  return sym + (j > 1 ? "^" + std::to_string(j) : "") + "*";
}

std::string latex_power(const std::string& sym, int j) {
  return sym + (j > 1 ? "^{" + std::to_string(j) + "}" : " ");
}

std::string text_term(const EmbeddedTerm& t) {
  std::string mono = monomial_str(t.mono);
  if (t.coeff == PolyX(1L)) return mono;
  if (t.coeff == PolyX(-1L)) return "-" + mono;
  std::string c = t.coeff.str();
  return (compound(t.coeff) ? "(" + c + ")" : c) + " " + mono;
}

std::string latex_term(const EmbeddedTerm& t) {
  std::string mono = latex_monomial(t.mono);
  if (t.coeff.is_constant()) return latex_rational(t.coeff[0], true) + mono;
  std::string c = latex_polyx(t.coeff);
  return (compound(t.coeff) ? "\\left(" + c + "\\right)" : c) + mono;
}

std::string prefactor(int r, const std::string& fn, bool latex) {
  std::string arg = latex ? "\\" + fn + "(t\\alpha)" : fn + "(tα)";
  if (r == 0) return arg;
  if (latex) return "(x^2-4)" + (r > 1 ? "^{" + std::to_string(r) + "}" : std::string()) + arg;
  return "(x²−4)" + (r > 1 ? "^" + std::to_string(r) : std::string()) + "·" + arg;
}

std::string normal_side(const NormalForm& nf, bool cosh, bool latex) {
  const auto& list = cosh ? nf.c : nf.d;
  int top = cosh ? nf.k : nf.k0;
  std::string pre = prefactor(nf.r, cosh ? "cosh" : "sinh", latex);
  if (latex) {
    if (list.empty()) return "D_w\\left(" + pre + "\\right) = 0";
    std::string rhs = "B^{" + std::to_string(-nf.a) + "}";
    if (nf.s > 0) rhs += "(2-xq)^{-" + std::to_string(nf.s) + "}";
    rhs += "\\sum_{i=0}^{" + std::to_string(top) + "} q^i " + (cosh ? "Q'" : "Q") + " " +
           (cosh ? "c_i" : "d_i") + "(\\alpha)";
    return "D_w\\left(" + pre + "\\right) = D_w\\left(" + rhs + "\\right)";
  }
  if (list.empty()) return "D_w(" + pre + ") = 0";
  std::string rhs = "B^" + std::to_string(-nf.a);
  if (nf.s > 0) rhs += "·(2−xq)^-" + std::to_string(nf.s);
  rhs += "·Σ_{i=0}^{" + std::to_string(top) + "} q^i·" + (cosh ? "Q′" : "Q") + "·" +
         (cosh ? "c_i" : "d_i") + "(α)";
  return "D_w(" + pre + ") = D_w(" + rhs + ")";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  if (name == "dot") return Format::dot;
  if (name == "ascii") return Format::ascii;
  throw std::invalid_argument("unknown format: " + name);
}

std::string format_name(Format f) {
  switch (f) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::latex: return "latex";
    case Format::dot: return "dot";
    case Format::ascii: return "ascii";
  }
  return "text";
}

Json to_json(const Rational& r) { return to_fraction_string(r); }

Json to_json(const PolyX& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const SeriesT& s) {
  Json j;
  j["order"] = s.order();
  Json c = Json::array();
  for (const auto& p : s.coeffs()) c.push_back(to_json(p));
  j["coeffs"] = c;
  return j;
}

Json to_json(const AlphaPoly& a) {
  Json arr = Json::array();
  for (const auto& c : a.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

PolyX polyx_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return PolyX(std::move(c));
}

SeriesT series_from_json(const Json& j) {
  int order = j.at("order").get<int>();
  const Json& c = j.at("coeffs");
  if (!c.is_array() || static_cast<int>(c.size()) != order)
    throw std::invalid_argument("series coefficient count differs from order");
  std::vector<PolyX> v;
  for (const auto& e : c) v.push_back(polyx_from_json(e));
  return SeriesT(std::move(v));
}

AlphaPoly alphapoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("alpha polynomial must be an array");
  std::vector<PolyX> v;
  for (const auto& e : j) v.push_back(polyx_from_json(e));
  return AlphaPoly(std::move(v));
}

Json embedded_json(const EmbeddedRelation& rel) {
  Json j = doc("embedded");
  j["n"] = rel.n;
  j["epsilon"] = rel.epsilon;
  j["order"] = rel.order;
  for (const char* side : {"cosh", "sinh"}) {
    const auto& list = std::string(side) == "cosh" ? rel.cosh_terms : rel.sinh_terms;
    Json arr = Json::array();
    for (const auto& t : list) {
      Json e;
      e["sigma_power"] = t.sigma_power;
      e["S"] = t.mono.s_exp;
      e["B"] = t.mono.b_exp;
      e["Delta"] = t.mono.delta_exp;
      e["coeff"] = to_json(t.coeff);
      arr.push_back(e);
    }
    j[side] = arr;
  }
  return j;
}

EmbeddedRelation embedded_from_json(const Json& j) {
  if (j.at("schema") != kSchema || j.at("kind") != "embedded")
    throw std::invalid_argument("not an embedded relation document");
  EmbeddedRelation rel;
  rel.n = j.at("n").get<int>();
  rel.epsilon = j.at("epsilon").get<int>();
  rel.order = j.at("order").get<int>();
  for (const char* side : {"cosh", "sinh"}) {
    auto& list = std::string(side) == "cosh" ? rel.cosh_terms : rel.sinh_terms;
    for (const auto& e : j.at(side))
      list.push_back({e.at("sigma_power").get<int>(), polyx_from_json(e.at("coeff")),
                      {e.at("S").get<int>(), e.at("B").get<int>(), e.at("Delta").get<int>()}});
  }
  return rel;
}

Json immersed_json(const NormalForm& nf, int order) {
  Json j = doc("immersed");
  j["order"] = order;
  j["p"] = nf.p;
  j["s"] = nf.s;
  j["a"] = nf.a;
  j["r"] = nf.r;
  j["k"] = nf.k;
  j["k0"] = nf.k0;
  Json c = Json::array(), d = Json::array();
  for (const auto& a : nf.c) c.push_back(to_json(a));
  for (const auto& a : nf.d) d.push_back(to_json(a));
  j["c"] = c;
  j["d"] = d;
  return j;
}

NormalForm immersed_from_json(const Json& j) {
  if (j.at("schema") != kSchema || j.at("kind") != "immersed")
    throw std::invalid_argument("not an immersed relation document");
  NormalForm nf;
  nf.p = j.at("p").get<int>();
  nf.s = j.at("s").get<int>();
  nf.a = j.at("a").get<int>();
  nf.r = j.at("r").get<int>();
  nf.k = j.at("k").get<int>();
  nf.k0 = j.at("k0").get<int>();
  for (const auto& e : j.at("c")) nf.c.push_back(alphapoly_from_json(e));
  for (const auto& e : j.at("d")) nf.d.push_back(alphapoly_from_json(e));
  return nf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string latex_polyx(const PolyX& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^{" + std::to_string(i) + "}");
    std::string term = mono.empty() ? latex_rational(c, false) : latex_rational(c, true) + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

const SeriesT& named_series(const BlowupFunctions& bf, const std::string& name) {
  if (name == "B") return bf.B;
  if (name == "S") return bf.S;
  if (name == "Delta") return bf.Delta;
  if (name == "Q") return bf.Q;
  if (name == "q") return bf.q;
  if (name == "Qprime") return bf.Qprime;
  throw std::invalid_argument("unknown series: " + name);
}

std::string emit_series(const std::string& name, const SeriesT& s, Format f) {
  if (f == Format::json) {
    Json j = doc("series");
    j["fn"] = name;
    j["order"] = s.order();
    j["series"] = to_json(s);
    return dump(j);
  }
  if (f == Format::latex) {
    std::string body;
    for (int i = 0; i < s.order(); ++i) {
      if (s[i].is_zero()) continue;
      std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^{" + std::to_string(i) + "}");
      std::string term;
      if (mono.empty())
        term = latex_polyx(s[i]);
      else if (s[i].is_constant())
        term = latex_rational(s[i][0], true) + mono;
      else
        term = (compound(s[i]) ? "\\left(" + latex_polyx(s[i]) + "\\right)" : latex_polyx(s[i])) + mono;
      if (body.empty())
        body = term;
      else if (term[0] == '-')
        body += " - " + term.substr(1);
      else
        body += " + " + term;
    }
    if (body.empty()) body = "0";
    std::string sym = name == "Delta" ? "\\Delta" : (name == "Qprime" ? "Q'" : name);
    return sym + "(t) = " + body + " + O(t^{" + std::to_string(s.order()) + "})\n";
  }
  if (f != Format::text) throw std::invalid_argument("series supports text, json, latex");
  return name + " = " + s.str() + "\n";
}

std::string emit_embedded(const EmbeddedRelation& rel, Format f) {
  if (f == Format::json) return dump(embedded_json(rel));
  bool empty = rel.cosh_terms.empty() && rel.sinh_terms.empty();
  if (f == Format::latex) {
    std::string head = "% n = " + std::to_string(rel.n) + ", epsilon = " +
                       std::to_string(rel.epsilon) + ", order " + std::to_string(rel.order) + "\n";
    if (empty) return head + "0 = 0\n";
    return head + "D_w\\left(e^{t\\sigma}\\right) = D_w\\left(" +
           grouped(rel, "\\sigma", "\\left(", "\\right)", latex_term, latex_power) + "\\right)\n";
  }
  if (f != Format::text) throw std::invalid_argument("embedded supports text, json, latex");
  std::string head = "embedded sphere n=" + std::to_string(rel.n) + " epsilon=" +
                     std::to_string(rel.epsilon) + " order=" + std::to_string(rel.order) + "\n";
  if (empty) return head + "0 = 0\n";
  return head + "D_w(exp(t sigma)) = D_w(" +
         grouped(rel, "sigma", "(", ")", text_term, text_power) + ")\n";
}

std::string cosh_statement(const NormalForm& nf) { return normal_side(nf, true, false); }

std::string emit_immersed(const NormalForm& nf, int order, Format f) {
  if (f == Format::json) return dump(immersed_json(nf, order));
  std::ostringstream os;
  if (f == Format::latex) {
    os << "% p = " << nf.p << ", s = " << nf.s << ", a = " << nf.a << ", r = " << nf.r
       << ", k = " << nf.k << ", k0 = " << nf.k0 << ", order " << order << "\n";
    os << normal_side(nf, true, true) << "\n";
    os << normal_side(nf, false, true) << "\n";
    if (!nf.c.empty() || !nf.d.empty()) {
      os << "\\begin{aligned}\n";
      for (std::size_t i = 0; i < nf.c.size(); ++i)
        os << "c_{" << i << "} &= " << latex_alphapoly(nf.c[i]) << " \\\\\n";
      for (std::size_t i = 0; i < nf.d.size(); ++i)
        os << "d_{" << i << "} &= " << latex_alphapoly(nf.d[i])
           << (i + 1 < nf.d.size() ? " \\\\" : "") << "\n";
      os << "\\end{aligned}\n";
    }
    return os.str();
  }
  if (f != Format::text) throw std::invalid_argument("immersed supports text, json, latex");
  os << "immersed sphere p=" << nf.p << " s=" << nf.s << " a=" << nf.a << " order=" << order << "\n";
  os << "r=" << nf.r << " k=" << nf.k << " k0=" << nf.k0 << "\n";
  os << normal_side(nf, true, false) << "\n";
  os << normal_side(nf, false, false) << "\n";
  for (std::size_t i = 0; i < nf.c.size(); ++i) os << "c_" << i << " = " << nf.c[i].str() << "\n";
  for (std::size_t i = 0; i < nf.d.size(); ++i) os << "d_" << i << " = " << nf.d[i].str() << "\n";
  return os.str();
}

std::string emit_finite_type(int p, int a, int r, int order, Format f) {
  if (f == Format::json) {
    Json j = doc("finite-type");
    j["order"] = order;
    j["p"] = p;
    j["a"] = a;
    j["r"] = r;
    return dump(j);
  }
  if (f == Format::latex)
    return "D_w\\left((x^2-4)^{" + std::to_string(r) + "}z\\right) = 0\n";
  if (f != Format::text) throw std::invalid_argument("finite-type supports text, json, latex");
  return "r = " + std::to_string(r) + "\n";
}

std::string emit_character_variety(int p, int parity, const std::vector<FlatClass>& chi, Format f) {
  if (f == Format::json) {
    Json j = doc("character-variety");
    j["p"] = p;
    j["parity"] = parity ? "odd" : "even";
    Json arr = Json::array();
    for (const auto& c : chi) {
      Json e;
      e["m"] = c.m;
      e["trivial"] = c.trivial;
      e["s"] = c.s;
      arr.push_back(e);
    }
    j["classes"] = arr;
    return dump(j);
  }
  if (f == Format::latex) {
    std::string out = "\\chi_w = \\{";
    for (std::size_t i = 0; i < chi.size(); ++i) {
      if (i) out += ",";
      std::string m = std::to_string(chi[i].m);
      out += chi[i].trivial ? "\\mathbf{" + m + "}" : m;
    }
    return out + "\\}\n";
  }
  if (f != Format::text) throw std::invalid_argument("lens chi supports text, json, latex");
  std::ostringstream os;
  os << "L(" << p << ",1) " << (parity ? "odd" : "even") << ":";
  for (const auto& c : chi) os << " " << c.m << (c.trivial ? "*" : "");
  os << "\n";
  for (const auto& c : chi)
    os << "m=" << c.m << " " << (c.trivial ? "trivial" : "nontrivial") << " s=" << c.s << "\n";
  return os.str();
}

std::string emit_poset(const PosetJ& j, Format f) {
  if (f == Format::dot) return render_poset(j, PosetFormat::dot);
  if (f == Format::ascii || f == Format::text) return render_poset(j, PosetFormat::ascii);
  if (f != Format::json) throw std::invalid_argument("lens poset supports dot, ascii, json");
  Json d = doc("poset");
  d["p"] = j.p;
  d["parity"] = j.parity ? "odd" : "even";
  d["n"] = j.n;
  Json vs = Json::array(), es = Json::array();
  for (const auto& v : j.vertices) {
    Json e;
    e["m"] = v.m;
    e["k"] = to_json(v.k);
    e["trivial"] = v.trivial;
    e["dim"] = to_json(v.dim);
    vs.push_back(e);
  }
  for (const auto& e : j.edges) {
    Json x;
    x["from"] = e.from;
    x["to"] = e.to;
    x["energy"] = to_json(e.energy);
    es.push_back(x);
  }
  d["vertices"] = vs;
  d["edges"] = es;
  return dump(d);
}

}  // namespace sc
