#include "spherecalc/blowup.hpp"

#include <algorithm>
#include <stdexcept>

namespace sc {

PolyX moments(const BlowupFunctions& bf, Kind kind, int j) {
  const SeriesT& f = kind == Kind::B ? bf.B : bf.S;
  if (j < 0) throw std::invalid_argument("negative moment index");
  if (j >= f.order()) throw std::out_of_range("moment beyond series order");
  return f[j] * factorial(j);
}

int TwistPattern::parity_sum() const {
  int s = 0;
  for (int p : parities) s += p;
  return s;
}

std::vector<TwistPattern> twist_patterns(int n, int parity) {
  if (n > 24) throw std::invalid_argument("too many classes to enumerate twist patterns");
  std::vector<TwistPattern> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    TwistPattern tp;
    tp.parities.resize(n);
    for (int i = 0; i < n; ++i) tp.parities[i] = (mask >> i) & 1UL;
    if (tp.parity_sum() % 2 == parity % 2) out.push_back(std::move(tp));
  }
  return out;
}

FormalExpr FormalExpr::exponential(const std::vector<int>& a, const SeriesT& coeff) {
  FormalExpr e;
  e.classes = static_cast<int>(a.size());
  FormalTerm t;
  t.coeff = coeff;
  for (int ai : a) t.factors.push_back({0, ai});
  e.terms.push_back(std::move(t));
  return e;
}

FormalExpr FormalExpr::times_class(int i) const {
  FormalExpr r = *this;
  for (auto& t : r.terms) t.factors.at(i).k += 1;
  return r;
}

FormalExpr FormalExpr::operator+(const FormalExpr& o) const {
  if (classes != o.classes) throw std::invalid_argument("class count mismatch");
  FormalExpr r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r;
}

FormalExpr FormalExpr::operator-(const FormalExpr& o) const {
  FormalExpr neg = o;
  for (auto& t : neg.terms) t.coeff = -t.coeff;
  return *this + neg;
}

const SeriesT& ModelEvaluator::factor(const Key& key) {
  auto it = factors_.find(key);
  if (it != factors_.end()) return it->second;
  auto [parity, k, a] = key;
  SeriesT f = parity ? bf_.S : bf_.B;
  for (int i = 0; i < k; ++i) f = derivative(f);
  return factors_.emplace(key, series_rescale(f, a)).first->second;
}

const SeriesT& ModelEvaluator::power(const Key& key, int count) {
  auto id = std::make_pair(key, count);
  auto it = powers_.find(id);
  if (it != powers_.end()) return it->second;
  SeriesT value = count == 1 ? factor(key) : power(key, count - 1) * factor(key);
  return powers_.emplace(id, std::move(value)).first->second;
}

SeriesT ModelEvaluator::product(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  std::vector<std::pair<Key, int>> sig;
  for (const auto& k : keys) {
    if (!sig.empty() && sig.back().first == k)
      ++sig.back().second;
    else
      sig.emplace_back(k, 1);
  }
  auto it = products_.find(sig);
  if (it != products_.end()) return it->second;
  SeriesT acc = SeriesT::constant(PolyX(1L), bf_.order);
  for (const auto& [k, c] : sig) acc = acc * power(k, c);
  products_.emplace(sig, acc);
  return acc;
}

SeriesT ModelEvaluator::evaluate(const FormalExpr& expr, const TwistPattern& twists) {
  if (static_cast<int>(twists.parities.size()) != expr.classes)
    throw std::invalid_argument("twist pattern does not cover the expression");
  SeriesT acc;
  bool first = true;
  for (const auto& term : expr.terms) {
    std::vector<Key> keys;
    for (int i = 0; i < expr.classes; ++i)
      keys.emplace_back(twists.parities[i], term.factors[i].k, term.factors[i].a);
    SeriesT value = product(std::move(keys)) * term.coeff;
    if (first) {
      acc = std::move(value);
      first = false;
    } else {
      acc += value;
    }
  }
  if (first) acc = SeriesT(bf_.order);
  return acc;
}

SeriesT ModelEvaluator::exp_sigma(const TwistPattern& twists, bool z_insertion) {
  int n = static_cast<int>(twists.parities.size());
  std::vector<Key> keys;
  for (int i = 0; i < n; ++i) keys.emplace_back(twists.parities[i], 0, 1);
  if (!z_insertion) return product(keys);
  if (n < 2) throw std::invalid_argument("z = e1 - e2 needs two classes");
  std::vector<Key> first = keys, second = keys;
  std::get<1>(first[0]) = 1;
  std::get<1>(second[1]) = 1;
  return product(first) - product(second);
}

SeriesT evaluate(const FormalExpr& expr, const TwistPattern& twists, const BlowupFunctions& bf) {
  ModelEvaluator ev(bf);
  return ev.evaluate(expr, twists);
}

RelationReport verify_relation(const FormalExpr& lhs, const FormalExpr& rhs,
                               const std::vector<TwistPattern>& twistset, int order,
                               const BlowupFunctions& bf) {
  ModelEvaluator ev(bf);
  RelationReport rep;
  for (const auto& tp : twistset) {
    SeriesT diff = ev.evaluate(lhs, tp) - ev.evaluate(rhs, tp);
    int upto = std::min(order, diff.order());
    ++rep.patterns_checked;
    int v = diff.truncated(upto).valuation();
    if (v < upto) {
      rep.ok = false;
      std::string pat;
      for (int p : tp.parities) pat += std::to_string(p);
      rep.failures.push_back("pattern " + pat + ": t^" + std::to_string(v) + " residual " +
                             diff[v].str());
    }
  }
  return rep;
}

}  // namespace sc
