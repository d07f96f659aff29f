#pragma once

#include "spherecalc/alphapoly.hpp"
#include "spherecalc/blowup.hpp"
#include "spherecalc/embedded.hpp"
#include "spherecalc/qpoly.hpp"

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace sc {

int floor_div(int a, int b);
int r_index(int p, int s);   // floor((p+1-s)/2)
int k_index(int a, int s);   // s - floor((a+1)/2) - 1
int k0_index(int a, int s);  // k, or k+1 when a is odd

// (x^2-4)^r cosh(t alpha) == B^{-a} (x^2-4)^r / (2-xq)^s * sum_{i<=k} q^i Q' c_i(alpha)
// and the sinh twin with Q and d_i, i <= k0.
struct NormalForm {
  int p = 0, s = 0, a = 0;
  int r = 0, k = 0, k0 = 0;
  std::vector<AlphaPoly> c;
  std::vector<AlphaPoly> d;
};

bool operator==(const NormalForm& x, const NormalForm& y);

// Shape laws: index formulas, list lengths, degree and parity bounds.
std::vector<std::string> normal_form_violations(const NormalForm& nf);

using QAlpha = QPolyOver<AlphaPoly>;

enum class CheckStatus {
  literal,    // exact identity
  certified,  // zero modulo kernel relations of the same family
  model,      // zero in the blowup model of the kinked embedded sphere
  open,       // neither certificate applies
  failed
};

std::string to_string(CheckStatus s);

struct StepCheck {
  std::string name;
  CheckStatus status = CheckStatus::failed;
  bool required = true;
  std::string detail;
};

struct StepRecord {
  std::string step;  // base, raise-s, p-odd, p-even
  int p = 0, s = 0, a = 0;
  std::vector<StepCheck> checks;
  bool ok() const;
};

int immersed_required_order(int p, int s, int a);

class ImmersedEngine {
 public:
  // The engine checks every result against the blowup model when a <= -1
  // unless model_checks is false.
  explicit ImmersedEngine(int order, bool model_checks = true);

  const BlowupFunctions& functions() const { return bf_; }
  int order() const { return bf_.order; }

  const NormalForm& derive(int p, int s, int a);

  NormalForm base_case(int a);
  AlphaPoly shift_reduce(const AlphaPoly& poly, Kind mode) const;
  AlphaPoly shift_reduce2(const AlphaPoly& poly, Kind mode1, Kind mode2) const;
  NormalForm step_raise_s(const NormalForm& in);
  NormalForm step_p_odd(const NormalForm& in);
  NormalForm step_p_even(const NormalForm& in);

  // The unique coefficients within the degree bounds whose low moments match
  // alpha^{2m} (alpha^{2m+1}) exactly; depends on (a, s) only.
  NormalForm canonical(int p, int s, int a);
  std::vector<AlphaPoly> canonical_coeffs(int a, int s, int parity);

  // Sound test for (x^2-4)^r_ctx mu == 0 modulo the kernel, using the
  // canonical relations of all s' <= p for the same alpha.
  bool kernel_member(int p, int a, int parity, const AlphaPoly& mu, int r_ctx);

  // For a <= -1: alpha = e_1 + ... + e_{-a} is an embedded sphere with p
  // positive kinks, so the relation must hold exactly in the model.
  RelationReport model_check(const NormalForm& nf);
  bool model_kernel_member(int a, const AlphaPoly& mu);

  const std::vector<StepRecord>& records() const { return records_; }

 private:
  const SeriesT& r_series(int a, int s);
  const SeriesT& rho_series(int a, int s, int parity, int i);
  const std::vector<PolyX>& rho_row(int a, int s, int parity, int m);
  AlphaPoly reduce_by(int a, int s, int parity, const AlphaPoly& mu);
  StepCheck certify(const std::string& name, int p, int a, int parity, const AlphaPoly& mu,
                    int r_ctx, bool required);
  StepCheck certify_or_model(const std::string& name, int p, int a, int parity,
                             const AlphaPoly& mu, int r_ctx, bool required);
  void attach_model_check(StepRecord& rec, const NormalForm& nf);
  void attach_canonical_comparison(StepRecord& rec, const QAlpha& raw_c, const QAlpha& raw_d,
                                   const NormalForm& out);
  std::vector<PolyX> model_moments(const SeriesT& l, int upto) const;

  BlowupFunctions bf_;
  bool model_checks_;
  std::vector<PolyX> moment_b_, moment_s_;
  ModelEvaluator ev_;
  std::map<std::tuple<int, int, int>, NormalForm> memo_;
  std::map<std::pair<int, int>, SeriesT> r_cache_;
  std::map<std::tuple<int, int, int, int>, SeriesT> rho_series_cache_;
  std::map<std::tuple<int, int, int, int>, std::vector<PolyX>> rho_row_cache_;
  std::map<std::tuple<int, int, int>, std::vector<AlphaPoly>> canon_cache_;
  std::map<std::tuple<int, int, int, int>, AlphaPoly> rule_cache_;
  std::vector<StepRecord> records_;
};

// Convenience driver with an engine sized for (p, s, a).
NormalForm derive_immersed(int p, int s, int a, int order);

// floor((2p+2-a)/4), with odd a first replaced by a-1; never below zero.
int finite_type_order(int p, int a);

}  // namespace sc
