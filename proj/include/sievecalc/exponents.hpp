#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sievecalc/rational.hpp"

namespace sievecalc {

// Half-open or closed subinterval of [0, 1/2] with exact rational endpoints.
struct Interval {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = false;

  bool contains(const Rational& x) const {
    if (lo_closed ? x < lo : x <= lo) return false;
    if (hi_closed ? x > hi : x >= hi) return false;
    return true;
  }
  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
};

// Derived exponent system: sigma = rho - 1/6, b = 1/6 - 5*sigma,
// f = 1/3 - 4*sigma, and the decomposition intervals I2..I7.
struct ExponentParams {
  Rational rho, sigma, b, f;
  std::array<Interval, 6> intervals;  // I2..I7

  const Interval& I(int k) const { return intervals.at(static_cast<size_t>(k - 2)); }

  // Legal window: 1/120 < sigma <= 1/102.  Throws OUT_OF_RANGE outside.
  static ExponentParams from_rho(const Rational& rho);
  static ExponentParams from_sigma(const Rational& sigma);
  // Same derivation with the window check skipped (for probing illegal sigma).
  static ExponentParams from_sigma_unchecked(const Rational& sigma);
};

// One checked inequality, normalized to "lhs <= rhs" with slack = rhs - lhs.
// `strict` records whether the source relation is strict; satisfied is always
// slack >= 0 (strict entries additionally report positive slack via `slack`).
struct ConstraintReport {
  std::string id;
  Rational lhs, rhs, slack;
  bool strict = false;
  bool satisfied = false;
};

ConstraintReport make_report(std::string id, const Rational& lhs, const Rational& rhs,
                             bool strict);

bool all_satisfied(const std::vector<ConstraintReport>& reports);
bool all_strictly_satisfied(const std::vector<ConstraintReport>& reports);

// Hypotheses of the Type I bound: 3v+2w <= 2-3rho, v+3w <= 3-15rho/2,
// v+w <= 2-8rho, for dyadic block exponents v, w >= 0.
std::vector<ConstraintReport> check_type1_hypotheses(const Rational& v_exp,
                                                     const Rational& w_exp,
                                                     const ExponentParams& p);

// Hypotheses of the bilinear (Type II) bound: rho <= y <= 1-4rho, and the
// rho window 1/6 < rho < 1/5.
std::vector<ConstraintReport> check_type2_hypotheses(const Rational& y_exp,
                                                     const ExponentParams& p);

// 3rho+2nu <= 3/2-3sigma, rho+3nu <= 7/4-15sigma/2, rho+nu <= 2/3-8sigma.
std::vector<ConstraintReport> check_lemma7(const Rational& nu_exp, const ExponentParams& p);

// The full hand-enumerated inequality ledger: every displayed verification
// chain with worst-case endpoint values substituted.
std::vector<ConstraintReport> verify_ledger(const ExponentParams& p);

// Constructive subset selection: given rhos sorted descending with total in
// (f, 2/3-8sigma) and 0 < g <= 1/6-2sigma, rhos[0] <= total-g, returns indices
// whose sum lies in [g, f].  Throws HYPOTHESIS_VIOLATION if preconditions fail.
std::vector<size_t> find_subproduct(const std::vector<Rational>& rhos, const Rational& g,
                                    const ExponentParams& p);

std::string reports_to_json(const std::vector<ConstraintReport>& reports);
std::string reports_to_text(const std::vector<ConstraintReport>& reports);

}  // namespace sievecalc
