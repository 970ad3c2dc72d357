#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sievecalc/errors.hpp"

namespace sievecalc {

inline constexpr int kMaxDim = 4;

struct Box {
  int dim = 0;
  std::array<double, kMaxDim> lo{}, hi{};

  double volume() const {
    double v = 1.0;
    for (int i = 0; i < dim; ++i) v *= hi[i] - lo[i];
    return v;
  }
};

// sum_i coef[i]*x[i] <= bound
struct LinearConstraint {
  std::array<double, kMaxDim> coef{};
  double bound = 0;
};

struct Region {
  int dim = 0;
  Box bbox;
  std::vector<LinearConstraint> constraints;

  enum class Class { inside, outside, straddle };

  bool contains(const double* x) const {
    for (const auto& c : constraints) {
      double s = 0;
      for (int i = 0; i < dim; ++i) s += c.coef[i] * x[i];
      if (s > c.bound) return false;
    }
    return true;
  }

  // Exact classification of an axis-aligned box against the half-spaces.
  Class classify(const Box& cell) const {
    bool all_inside = true;
    for (const auto& c : constraints) {
      double mn = 0, mx = 0;
      for (int i = 0; i < cell.dim; ++i) {
        const double a = c.coef[i] * cell.lo[i], b = c.coef[i] * cell.hi[i];
        mn += a < b ? a : b;
        mx += a < b ? b : a;
      }
      if (mn > c.bound) return Class::outside;
      if (mx > c.bound) all_inside = false;
    }
    return all_inside ? Class::inside : Class::straddle;
  }
};

struct QuadratureResult {
  double value = 0;
  double abs_error_estimate = 0;
  long n_evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(const double*)>;
// Guaranteed upper bound for |f| over a box (used for boundary cells at the
// subdivision depth cap).
using SupBound = std::function<double(const Box&)>;

struct QuadratureOptions {
  double tol = 1e-7;
  long max_evaluations = 200000000;
  int depth_cap = 60;           // total splits before sup*volume bounding
  bool throw_on_failure = true; // NO_CONVERGENCE when the budget runs out
};

QuadratureResult integrate_region(const Integrand& f, const Region& region,
                                  const QuadratureOptions& opt,
                                  const SupBound* sup = nullptr);

QuadratureResult integrate_box(const Integrand& f, const Box& box,
                               const QuadratureOptions& opt);

// Fixed-grid midpoint rule with a region-indicator: the independent oracle
// used by the test suite to cross-check the adaptive engine.
double midpoint_oracle(const Integrand& f, const Region& region, int points_per_axis);

}  // namespace sievecalc
