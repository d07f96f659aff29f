#pragma once

#include "spherecalc/blowup.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sc {

// S^s B^b Delta^d
struct BasisMonomial {
  int s_exp = 0;
  int b_exp = 0;
  int delta_exp = 0;
  auto operator<=>(const BasisMonomial&) const = default;
};

struct EmbeddedTerm {
  int sigma_power = 0;
  PolyX coeff;
  BasisMonomial mono;
};

// exp(t sigma) == sum of sigma^j * coeff * monomial, for an embedded sphere
// with sigma.sigma = -n and w.sigma = epsilon mod 2. cosh_terms carry even
// sigma powers, sinh_terms odd ones.
struct EmbeddedRelation {
  int n = 0;
  int epsilon = 0;
  int order = 0;
  std::vector<EmbeddedTerm> cosh_terms;
  std::vector<EmbeddedTerm> sinh_terms;
};

// epsilon 0: even S^{2i} B^{n-2i}, odd S^{2i+1} Delta B^{n-2i-3};
// epsilon 1: even S^{2i} Delta B^{n-2i-2}, odd S^{2i+1} B^{n-2i-1}.
std::vector<BasisMonomial> case_basis(int n, int epsilon, int parity);

SeriesT basis_series(const BasisMonomial& m, const BlowupFunctions& bf);

// The model function whose moments give row i: the twist pattern (and
// e1 - e2 insertion for the Delta rows) that produces the i-th basis element.
SeriesT model_row_function(int n, int epsilon, int parity, int i, ModelEvaluator& ev);

// Entry (i, r) = (2r+parity)! [t^{2r+parity}] f_i. Upper triangular with
// factorial diagonal; `normalized` divides column r by (2r+parity)!.
std::vector<std::vector<PolyX>> moment_matrix(int n, int epsilon, int parity,
                                              const BlowupFunctions& bf, bool normalized = false);

// Greedy triangular elimination against a basis of strictly increasing
// leading orders with unit leading coefficients. Throws std::domain_error
// ("outside basis span") on a nonvanishing remainder.
std::vector<PolyX> fit_to_basis(const SeriesT& f, const std::vector<SeriesT>& basis);

EmbeddedRelation derive_embedded(int n, int epsilon, const BlowupFunctions& bf);

// Twist patterns with parity sum epsilon. Exhaustive for small n; above the
// threshold one pattern per orbit of permutations fixing e1 and e2, which
// leave sigma and z = e1 - e2 unchanged.
std::vector<TwistPattern> admissible_twists(int n, int epsilon);

RelationReport verify_embedded(const EmbeddedRelation& rel, const BlowupFunctions& bf);

// The sigma power excluded by the degree caps (2k-1 for epsilon 0, n = 2k;
// 2k for epsilon 1, n = 2k+1), or -1 when no cap applies.
int hat_power(int n, int epsilon);

// Reference relations for n = 2, 3, 4 in both parities, entered by hand.
std::vector<EmbeddedRelation> reference_small_relations();

struct SmallFormulaReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// Derives n = 2, 3, 4 in both parities, compares them term by term with the
// reference relations and re-derives the double angle formulas and the Delta^2
// identity from the n = 4 relation.
SmallFormulaReport verify_small_formulas(const BlowupFunctions& bf);

std::string monomial_str(const BasisMonomial& m);

}  // namespace sc
