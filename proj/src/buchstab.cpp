#include "sievecalc/buchstab.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace sievecalc {

BuchstabTable::BuchstabTable(double t_max, double tol) : t_max_(t_max), tol_(tol) {
  if (!(t_max >= 2.0 && t_max <= 64.0)) throw Error(Errc::domain, "t_max outside [2, 64]");
  if (!(tol > 0)) throw Error(Errc::domain, "tol must be positive");
  // Empirical accuracy of the scheme is ~1e-12 at n=4096 and scales like h^4
  // (validated against the closed forms on [1,3] in the test suite).
  if (tol >= 1e-11) n_ = 4096;
  else if (tol >= 1e-13) n_ = 16384;
  else throw Error(Errc::domain, "tolerance below certifiable range");

  const int n = n_;
  const double h = 1.0 / n;
  const int last_seg = static_cast<int>(std::ceil(t_max)) - 1;  // segment k covers [k, k+1]

  seg_.resize(static_cast<size_t>(std::max(1, last_seg)));
  auto& s1 = seg_[0];
  s1.resize(n + 1);
  for (int i = 0; i <= n; ++i) s1[i] = 1.0 / (1.0 + i * h);

  for (int k = 2; k <= last_seg; ++k) {
    const auto& g = seg_[k - 2];  // omega(u-1) for u in [k, k+1] at the same nodes
    auto& w = seg_[k - 1];
    w.resize(n + 1);
    double F = k * seg_[k - 2][n];  // t*omega(t) at t = k
    w[0] = F / k;
    for (int i = 0; i < n; ++i) {
      double inc;
      if (i == 0)
        inc = h / 24.0 * (9 * g[0] + 19 * g[1] - 5 * g[2] + g[3]);
      else if (i == n - 1)
        inc = h / 24.0 * (g[n - 3] - 5 * g[n - 2] + 19 * g[n - 1] + 9 * g[n]);
      else
        inc = h / 24.0 * (-g[i - 1] + 13 * g[i] + 13 * g[i + 1] - g[i + 2]);
      F += inc;
      w[i + 1] = F / (k + (i + 1) * h);
    }
  }
}

double BuchstabTable::eval(double t) const {
  if (!(t >= 1.0)) throw Error(Errc::domain, "omega(t) needs t >= 1");
  if (t <= 2.0) return 1.0 / t;
  if (t > t_max_) throw Error(Errc::domain, "t beyond table range");
  const int n = n_;
  int k = static_cast<int>(t);
  if (k >= static_cast<int>(seg_.size()) + 1) k = static_cast<int>(seg_.size());
  const auto& w = seg_[k - 1];
  double u = (t - k) * n;
  int i = static_cast<int>(u);
  i = std::clamp(i, 1, n - 2);
  const double x = u - i;
  // cubic Lagrange through nodes i-1 .. i+2
  const double xm1 = x + 1, x0 = x, x1 = x - 1, x2 = x - 2;
  return w[i - 1] * (-x0 * x1 * x2 / 6.0) + w[i] * (xm1 * x1 * x2 / 2.0) +
         w[i + 1] * (-xm1 * x0 * x2 / 2.0) + w[i + 2] * (xm1 * x0 * x1 / 6.0);
}

double BuchstabTable::max_on(double tlo, double thi) const {
  if (!(tlo >= 1.0 && thi >= tlo)) throw Error(Errc::domain, "bad range");
  thi = std::min(thi, t_max_);
  double m = std::max(eval(tlo), eval(thi));
  if (tlo < 2.0) m = std::max(m, 1.0 / tlo);
  const double h = step();
  long i0 = static_cast<long>(std::floor((tlo - 1.0) / h));
  long i1 = static_cast<long>(std::ceil((thi - 1.0) / h));
  for (long i = i0; i <= i1; ++i) {
    double t = 1.0 + i * h;
    if (t < tlo) t = tlo;
    if (t > thi) t = thi;
    m = std::max(m, eval(t));
  }
  // node sampling plus interpolation slack; |omega'| <= 1 everywhere
  return m + h + tol_;
}

double BuchstabTable::min_on(double tlo, double thi) const {
  if (!(tlo >= 1.0 && thi >= tlo)) throw Error(Errc::domain, "bad range");
  thi = std::min(thi, t_max_);
  double m = std::min(eval(tlo), eval(thi));
  const double h = step();
  long i0 = static_cast<long>(std::floor((tlo - 1.0) / h));
  long i1 = static_cast<long>(std::ceil((thi - 1.0) / h));
  for (long i = i0; i <= i1; ++i) {
    double t = 1.0 + i * h;
    if (t < tlo) t = tlo;
    if (t > thi) t = thi;
    m = std::min(m, eval(t));
  }
  return m - h - tol_;
}

namespace {
std::mutex table_mutex;
std::shared_ptr<const BuchstabTable> coarse_table;  // tol 1e-9
std::shared_ptr<const BuchstabTable> fine_table;    // tol 1e-13
constexpr double kTableTmax = 13.0;
}  // namespace

const BuchstabTable& shared_buchstab_table() {
  std::lock_guard<std::mutex> lock(table_mutex);
  if (!coarse_table)
    coarse_table = std::make_shared<const BuchstabTable>(kTableTmax, 1e-9);
  return *coarse_table;
}

double buchstab_omega(double t, double tol) {
  if (!(t >= 1.0)) throw Error(Errc::domain, "omega(t) needs t >= 1");
  if (!(tol > 0)) throw Error(Errc::domain, "tol must be positive");
  if (t <= 2.0) return 1.0 / t;
  std::shared_ptr<const BuchstabTable> table;
  {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (tol >= 1e-11) {
      if (!coarse_table)
        coarse_table = std::make_shared<const BuchstabTable>(kTableTmax, 1e-9);
      table = coarse_table;
    } else {
      if (!fine_table)
        fine_table = std::make_shared<const BuchstabTable>(kTableTmax, 1e-13);
      table = fine_table;
    }
  }
  if (t > table->t_max()) {
    // omega settles at e^-gamma far faster than any certifiable tolerance
    // beyond the table range
    if (tol < 1e-10) throw Error(Errc::domain, "t beyond certified range for this tol");
    return kExpMinusEulerGamma;
  }
  return table->eval(t);
}

}  // namespace sievecalc
