#pragma once

#include "spherecalc/elliptic.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace sc {

enum class Kind { B, S };

// j! [t^j] B or j! [t^j] S.
PolyX moments(const BlowupFunctions& bf, Kind kind, int j);

// Parity of w'.e_i for each exceptional class in scope.
struct TwistPattern {
  std::vector<int> parities;
  int parity_sum() const;
};

// All patterns on n classes whose parity sum is congruent to `parity`.
std::vector<TwistPattern> twist_patterns(int n, int parity);

// e_i^k exp(a t e_i)
struct ClassFactor {
  int k = 0;
  int a = 0;
};

struct FormalTerm {
  SeriesT coeff;
  std::vector<ClassFactor> factors;  // one per class
};

// Linear combination of monomials prod e_i^{k_i} exp(t sum a_i e_i) with
// series coefficients.
struct FormalExpr {
  int classes = 0;
  std::vector<FormalTerm> terms;

  // coeff * exp(t sum a_i e_i)
  static FormalExpr exponential(const std::vector<int>& a, const SeriesT& coeff);
  // The same expression multiplied by e_i.
  FormalExpr times_class(int i) const;
  FormalExpr operator+(const FormalExpr& o) const;
  FormalExpr operator-(const FormalExpr& o) const;
};

// Evaluates formal expressions on the n-fold blowup. Every class contributes
// F^{(k)}(a t) with F = B untwisted, S twisted; equal factors are shared, so
// patterns that differ by a permutation of classes cost one lookup.
class ModelEvaluator {
 public:
  explicit ModelEvaluator(const BlowupFunctions& bf) : bf_(bf) {}

  const BlowupFunctions& functions() const { return bf_; }

  SeriesT evaluate(const FormalExpr& expr, const TwistPattern& twists);

  // z exp(t sigma) for sigma = e_1 + ... + e_n; z = 1 or z = e_1 - e_2.
  SeriesT exp_sigma(const TwistPattern& twists, bool z_insertion);

 private:
  using Key = std::tuple<int, int, int>;  // parity, k, a
  const SeriesT& factor(const Key& key);
  const SeriesT& power(const Key& key, int count);
  SeriesT product(std::vector<Key> keys);

  const BlowupFunctions& bf_;
  std::map<Key, SeriesT> factors_;
  std::map<std::pair<Key, int>, SeriesT> powers_;
  std::map<std::vector<std::pair<Key, int>>, SeriesT> products_;
};

SeriesT evaluate(const FormalExpr& expr, const TwistPattern& twists, const BlowupFunctions& bf);

struct RelationReport {
  bool ok = true;
  int patterns_checked = 0;
  std::vector<std::string> failures;
};

// evaluate(lhs) - evaluate(rhs) = O(t^order) for every pattern.
RelationReport verify_relation(const FormalExpr& lhs, const FormalExpr& rhs,
                               const std::vector<TwistPattern>& twistset, int order,
                               const BlowupFunctions& bf);

}  // namespace sc
