#pragma once

#include <memory>
#include <vector>

#include "sievecalc/errors.hpp"

namespace sievecalc {

// e^(-gamma_Euler) to 20 digits.
inline constexpr double kExpMinusEulerGamma = 0.56145948356688516982;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Buchstab's function on [1, t_max]: omega(t) = 1/t on [1,2] and
// (t*omega(t))' = omega(t-1) for t > 2, solved by method of steps on an
// aligned uniform grid (one segment per unit interval, cubic quadrature
// stencils for the cumulative integral, cubic interpolation between nodes).
// Immutable after construction; reads are thread-safe.
class BuchstabTable {
 public:
  BuchstabTable(double t_max, double tol);

  double eval(double t) const;             // DOMAIN outside [1, t_max]
  double max_on(double tlo, double thi) const;  // certified upper bound
  double min_on(double tlo, double thi) const;  // certified lower bound

  double t_max() const { return t_max_; }
  double step() const { return 1.0 / n_; }
  double tol() const { return tol_; }
  const std::vector<std::vector<double>>& segments() const { return seg_; }

 private:
  double t_max_;
  double tol_;
  int n_;  // nodes per unit interval
  // seg_[k-1][i] = omega(k + i/n), segments k = 1 .. floor(t_max)-? built
  // up to ceil(t_max).
  std::vector<std::vector<double>> seg_;
};

// Pointwise evaluation backed by a shared table (rebuilt only when a finer
// tolerance is requested).  DOMAIN if t < 1 or tol not certifiable.
double buchstab_omega(double t, double tol = 1e-9);

// Shared default-accuracy table (1e-9), built on first use.
const BuchstabTable& shared_buchstab_table();

}  // namespace sievecalc
