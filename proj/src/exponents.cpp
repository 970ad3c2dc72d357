#include "sievecalc/exponents.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace sievecalc {

namespace {

const Rational kSixth(1, 6);
const Rational kSigmaLo(1, 120);
const Rational kSigmaHi(1, 102);

}  // namespace

ExponentParams ExponentParams::from_sigma_unchecked(const Rational& sigma) {
  ExponentParams p;
  p.sigma = sigma;
  p.rho = kSixth + sigma;
  p.b = kSixth - 5 * sigma;
  p.f = Rational(1, 3) - 4 * sigma;
  const Rational i2lo = p.b;
  const Rational i2hi = kSixth + sigma;  // = rho
  const Rational i3hi = Rational(1, 3) - 4 * sigma;
  const Rational i4hi = Rational(1, 3) + 8 * sigma;
  const Rational i5hi = Rational(1, 2) - 9 * sigma;
  const Rational i6hi = Rational(3, 8) + Rational(33, 4) * sigma;
  const Rational half(1, 2);
  p.intervals = {
      Interval{i2lo, i2hi, true, false},   // I2 = [1/6-5s, 1/6+s)
      Interval{i2hi, i3hi, false, false},  // I3 = (1/6+s, 1/3-4s)
      Interval{i3hi, i4hi, true, false},   // I4 = [1/3-4s, 1/3+8s)
      Interval{i4hi, i5hi, true, false},   // I5 = [1/3+8s, 1/2-9s)
      Interval{i5hi, i6hi, true, false},   // I6 = [1/2-9s, 3/8+33s/4)
      Interval{i6hi, half, true, true},    // I7 = [3/8+33s/4, 1/2]
  };
  return p;
}

ExponentParams ExponentParams::from_sigma(const Rational& sigma) {
  if (!(sigma > kSigmaLo && sigma <= kSigmaHi)) {
    throw Error(Errc::out_of_range,
                "sigma = " + rational_str(sigma) + " outside (1/120, 1/102]");
  }
  return from_sigma_unchecked(sigma);
}

ExponentParams ExponentParams::from_rho(const Rational& rho) {
  return from_sigma(rho - kSixth);
}

ConstraintReport make_report(std::string id, const Rational& lhs, const Rational& rhs,
                             bool strict) {
  ConstraintReport r;
  r.id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.strict = strict;
  r.satisfied = r.slack >= 0;
  return r;
}

bool all_satisfied(const std::vector<ConstraintReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const ConstraintReport& r) { return r.satisfied; });
}

bool all_strictly_satisfied(const std::vector<ConstraintReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const ConstraintReport& r) {
    return r.strict ? r.slack > 0 : r.slack >= 0;
  });
}

std::vector<ConstraintReport> check_type1_hypotheses(const Rational& v, const Rational& w,
                                                     const ExponentParams& p) {
  if (v < 0 || w < 0)
    throw Error(Errc::domain, "dyadic block exponents must be nonnegative");
  const Rational& rho = p.rho;
  return {
      make_report("type1.V3W2", 3 * v + 2 * w, 2 - 3 * rho, false),
      make_report("type1.VW3", v + 3 * w, 3 - Rational(15, 2) * rho, false),
      make_report("type1.VW", v + w, 2 - 8 * rho, false),
  };
}

std::vector<ConstraintReport> check_type2_hypotheses(const Rational& y,
                                                     const ExponentParams& p) {
  if (y < 0) throw Error(Errc::domain, "y exponent must be nonnegative");
  const Rational& rho = p.rho;
  return {
      make_report("type2.rho_gt_sixth", kSixth, rho, true),
      make_report("type2.rho_lt_fifth", rho, Rational(1, 5), true),
      make_report("type2.Y_lower", rho, y, false),
      make_report("type2.Y_upper", y, 1 - 4 * rho, false),
  };
}

std::vector<ConstraintReport> check_lemma7(const Rational& nu, const ExponentParams& p) {
  if (nu < 0) throw Error(Errc::domain, "nu must be nonnegative");
  const Rational& rho = p.rho;
  const Rational& s = p.sigma;
  return {
      make_report("lemma7.4_10", 3 * rho + 2 * nu, Rational(3, 2) - 3 * s, false),
      make_report("lemma7.4_11", rho + 3 * nu, Rational(7, 4) - Rational(15, 2) * s, false),
      make_report("lemma7.4_12", rho + nu, Rational(2, 3) - 8 * s, false),
  };
}

namespace {

// Linear-in-gamma expression a + c*gamma maximized over [glo, ghi].
Rational max_linear(const Rational& a, const Rational& c, const Rational& glo,
                    const Rational& ghi) {
  return c >= 0 ? a + c * ghi : a + c * glo;
}
Rational min_linear(const Rational& a, const Rational& c, const Rational& glo,
                    const Rational& ghi) {
  return c >= 0 ? a + c * glo : a + c * ghi;
}

// Both sides linear in gamma: evaluate at the endpoint where the slack
// rhs - lhs is smallest, so the report carries the slack actually achieved.
std::pair<Rational, Rational> worst_pair(const Rational& al, const Rational& cl,
                                         const Rational& ar, const Rational& cr,
                                         const Rational& glo, const Rational& ghi) {
  const Rational slack_lo = (ar + cr * glo) - (al + cl * glo);
  const Rational slack_hi = (ar + cr * ghi) - (al + cl * ghi);
  const Rational& g = slack_lo <= slack_hi ? glo : ghi;
  return {al + cl * g, ar + cr * g};
}

}  // namespace

std::vector<ConstraintReport> verify_ledger(const ExponentParams& p) {
  const Rational& s = p.sigma;
  const Rational& rho = p.rho;
  const Rational& b = p.b;
  const Rational& f = p.f;
  const Rational half(1, 2);
  const Rational rhs1 = Rational(3, 2) - 3 * s;       // 2-3rho
  const Rational rhs2 = Rational(7, 4) - Rational(15, 2) * s;  // 3-15rho/2
  const Rational rhs3 = Rational(2, 3) - 8 * s;       // 2-8rho
  const Rational i6lo = p.I(6).lo, i6hi = p.I(6).hi;
  const Rational i7lo = p.I(7).lo;
  const Rational i4hi = p.I(4).hi;

  std::vector<ConstraintReport> out;
  auto add = [&out](std::string id, const Rational& lhs, const Rational& rhs, bool strict) {
    out.push_back(make_report(std::move(id), lhs, rhs, strict));
  };

  // Parameter sanity (section 4 setup).
  add("basic.sigma_gt_1_120", kSigmaLo, s, true);
  add("basic.sigma_le_1_102", s, kSigmaHi, false);
  add("basic.b_positive", Rational(0), b, true);
  add("basic.b_lt_rho", b, rho, true);
  add("basic.rho_lt_f", rho, f, true);
  add("basic.rho_le_2b", rho, 2 * b, false);
  add("basic.thm2_rho_window", rho, Rational(2, 11), true);
  add("basic.thm3_rho_window", rho, Rational(1, 5), true);

  // Interval system well-formedness (empty allowed at the sigma boundary).
  for (int k = 2; k <= 7; ++k)
    add("intervals.I" + std::to_string(k), p.I(k).lo, p.I(k).hi, false);

  // Lemma 10 case 1.  gamma ranges over I7; g has two branches split at
  // 11/24 - sigma/4.  Each chain is linear in gamma, so the worst case sits
  // at a branch endpoint.
  {
    const Rational split = Rational(11, 24) - s / 4;
    // branch A: gamma in [i7lo, split], g = 3*gamma - 5/4 - 15s/2
    // 3g + 2 - 2gamma = 7*gamma - 7/4 - 45s/2
    add("L10.case1.V3W2.gA",
        max_linear(-Rational(7, 4) - Rational(45, 2) * s, 7, i7lo, split), rhs1, false);
    // g + 3 - 3gamma = 7/4 - 15s/2 identically
    add("L10.case1.VW3.gA", rhs2, rhs2, false);
    // g + 1 - gamma = 2*gamma - 1/4 - 15s/2
    add("L10.case1.VW.gA",
        max_linear(-Rational(1, 4) - Rational(15, 2) * s, 2, i7lo, split), rhs3, false);
    // branch B: gamma in [split, 1/2], g = gamma - 1/3 - 8s
    add("L10.case1.V3W2.gB", max_linear(1 - 24 * s, 1, split, half), rhs1, false);
    add("L10.case1.VW3.gB",
        max_linear(Rational(8, 3) - 8 * s, -2, split, half), rhs2, false);
    add("L10.case1.VW.gB", rhs3, rhs3, false);
    // side conditions: g <= gamma - 1/3 - 8s <= (2gamma - 3s - 1/2)/3
    {
      auto [lhs, rhs] = worst_pair(-Rational(1, 3) - 8 * s, 1, -(3 * s + half) / 3,
                                   Rational(2, 3), i7lo, half);
      add("L10.case1.g_window", lhs, rhs, false);
    }
    add("L10.g_positive.gA", Rational(0),
        min_linear(-Rational(5, 4) - Rational(15, 2) * s, 3, i7lo, split), true);
    add("L10.g_positive.gB", Rational(0),
        min_linear(-Rational(1, 3) - 8 * s, 1, split, half), true);
    // rho1 >= gamma - g > 1/4
    add("L10.case1.rho1_gt_quarter.gA", Rational(1, 4),
        min_linear(Rational(5, 4) + Rational(15, 2) * s, -2, i7lo, split), true);
    add("L10.case1.rho1_gt_quarter.gB", Rational(1, 4), Rational(1, 3) + 8 * s, true);
  }

  // Lemma 10 case 2.
  add("L10.case2.narrow.V3W2", Rational(7, 6) + 19 * s, rhs1, true);
  add("L10.case2.narrow.VW3", Rational(7, 6) + 25 * s, rhs2, true);
  add("L10.case2.narrow.VW", half + 9 * s, rhs3, false);
  add("L10.case2.wide.V3W2", max_linear(3 + 18 * s, -4, i7lo, i7lo), rhs1, true);
  add("L10.case2.wide.VW3",
      max_linear(Rational(47, 12) + Rational(47, 2) * s, -6, i7lo, i7lo), rhs2, true);
  add("L10.case2.wide.VW",
      max_linear(Rational(17, 12) + Rational(17, 2) * s, -2, i7lo, i7lo), rhs3, false);

  // Lemma 11.  gamma in [1/3+8s, 1/2-9s].
  {
    const Rational glo = p.I(5).lo, ghi = p.I(5).hi;
    add("L11.V3W2", max_linear(3 * rho, 2, glo, ghi), rhs1, true);
    add("L11.VW3", max_linear(rho, 3, glo, ghi), rhs2, true);
    add("L11.VW", max_linear(rho, 1, glo, ghi), rhs3, false);
    add("L11.reflection_window", max_linear(half, -half, glo, ghi), f, false);
    add("L11.gap_bound", 2 * rho, min_linear(Rational(5, 6) - s, -1, glo, ghi), true);
    {
      auto [lhs, rhs] =
          worst_pair(Rational(1), -1, Rational(5, 3) - 2 * s, -2, glo, ghi);
      add("L11.single_large", lhs, rhs, true);
    }
  }

  // Section 5 verification chain.  gamma in I6.
  add("S5.V3W2", max_linear(2 - 24 * s, -1, i6lo, i6hi), rhs1, true);
  add("S5.VW3", max_linear(Rational(2, 3) - 8 * s, 2, i6lo, i6hi), rhs2, true);
  add("S5.VW", rhs3, rhs3, false);
  // Sieve parameter window: Z <= D <= Z^3 for D = N^(2/3-8s-gamma), Z = N^(rho/2).
  add("S5.sieve_D_ge_Z", rho / 2, min_linear(rhs3, -1, i6lo, i6hi), false);
  add("S5.sieve_D_le_Z3", max_linear(rhs3, -1, i6lo, i6hi), 3 * rho / 2, false);

  // Section 6 chains.
  add("S6.S10.V3W2", 7 * rho, Rational(3, 2) - 2 * s, false);           // as displayed
  add("S6.S10.V3W2.variant_3s", 7 * rho, rhs1, false);                  // flagged variant
  add("S6.S10.VW3", 7 * rho, rhs2, false);
  add("S6.S10.VW", 3 * rho, rhs3, false);
  add("S6.S14.V3W2", 3 * rho + 2 * i4hi, rhs1, true);
  add("S6.S14.VW3", rho + 3 * i4hi, rhs2, true);
  add("S6.S14.VW", rho + i4hi, rhs3, false);
  add("S6.S15.rho_le_2b", rho, 2 * b, false);
  add("S6.S15.window_sup", 2 * (f / 2), f, false);

  // Section 6 shape-exclusion arithmetic for the D'-terms.
  add("S6.D13.four_f", Rational(1), 4 * f, true);
  add("S6.D13.eq620", Rational(1), 3 * f + (kSixth - 2 * s), true);
  add("S6.D13.k_gt_2", Rational(1, 3) + 8 * s + 3 * rho, Rational(1), true);
  add("S6.D17.alpha2_window", (Rational(5, 8) - Rational(33, 4) * s) / 2, f, true);
  add("S6.D17.exclusion", Rational(1), i7lo + 2 * f, true);
  add("S6.D17.k_gt_1", half + 2 * rho, Rational(1), true);
  add("S6.D18.exclusion", Rational(1), i6lo + 2 * f, true);
  add("S6.D18.k3_excluded", i7lo + 3 * rho, Rational(1), true);

  return out;
}

std::vector<size_t> find_subproduct(const std::vector<Rational>& rhos, const Rational& g,
                                    const ExponentParams& p) {
  const Rational gamma = std::accumulate(rhos.begin(), rhos.end(), Rational(0));
  auto reject = [](const std::string& m) { return Error(Errc::hypothesis_violation, m); };
  if (rhos.empty()) throw reject("empty exponent list");
  for (size_t i = 0; i < rhos.size(); ++i) {
    if (rhos[i] < 0) throw reject("negative exponent");
    if (i + 1 < rhos.size() && rhos[i] < rhos[i + 1]) throw reject("not sorted descending");
  }
  if (!(g > 0 && g <= Rational(1, 6) - 2 * p.sigma)) throw reject("g outside (0, 1/6-2s]");
  if (!(gamma > p.f && gamma < Rational(2, 3) - 8 * p.sigma))
    throw reject("total outside (1/3-4s, 2/3-8s)");
  if (!(rhos[0] <= gamma - g)) throw reject("rhos[0] > total - g");

  // Largest element already in the window.
  if (rhos[0] >= g && rhos[0] <= p.f) return {0};
  // Largest element overshoots: the rest sums into the window.
  if (rhos[0] > p.f) {
    std::vector<size_t> rest(rhos.size() - 1);
    std::iota(rest.begin(), rest.end(), 1);
    return rest;
  }
  // All elements below g: accumulate until the prefix reaches g; each step
  // adds at most g, and 2g <= f keeps the prefix inside the window.
  Rational sum(0);
  std::vector<size_t> prefix;
  for (size_t i = 0; i < rhos.size(); ++i) {
    sum += rhos[i];
    prefix.push_back(i);
    if (sum >= g) return prefix;
  }
  throw reject("total below g");  // unreachable when preconditions hold
}

std::string reports_to_json(const std::vector<ConstraintReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"id", r.id},
                   {"lhs", rational_str(r.lhs)},
                   {"rhs", rational_str(r.rhs)},
                   {"slack", rational_str(r.slack)},
                   {"lhs_value", to_double(r.lhs)},
                   {"rhs_value", to_double(r.rhs)},
                   {"slack_value", to_double(r.slack)},
                   {"strict", r.strict},
                   {"satisfied", r.satisfied}});
  }
  return arr.dump(2);
}

std::string reports_to_text(const std::vector<ConstraintReport>& reports) {
  size_t idw = 4;
  for (const auto& r : reports) idw = std::max(idw, r.id.size());
  std::ostringstream os;
  char buf[160];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%-*s  %12.9f %s %12.9f   slack %+.9f (%s)  %s\n",
                  static_cast<int>(idw), r.id.c_str(), to_double(r.lhs),
                  r.strict ? "< " : "<=", to_double(r.rhs), to_double(r.slack),
                  rational_str(r.slack).c_str(), r.satisfied ? "ok" : "FAIL");
    os << buf;
  }
  return os.str();
}

}  // namespace sievecalc
