#include "sievecalc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace sievecalc {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGL3x[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kGL3w[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
constexpr double kGL5x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                             0.5384693101056831, 0.9061798459386640};
constexpr double kGL5w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                             0.4786286704993665, 0.2369268850561891};

double tensor_rule(const Integrand& f, const Box& cell, const double* nodes,
                   const double* weights, int order, bool indicator, const Region* region,
                   long& evals) {
  const int d = cell.dim;
  int idx[kMaxDim] = {0, 0, 0, 0};
  double mid[kMaxDim], half[kMaxDim];
  for (int i = 0; i < d; ++i) {
    mid[i] = 0.5 * (cell.lo[i] + cell.hi[i]);
    half[i] = 0.5 * (cell.hi[i] - cell.lo[i]);
  }
  double sum = 0, comp = 0;
  long count = 1;
  for (int i = 0; i < d; ++i) count *= order;
  for (long n = 0; n < count; ++n) {
    double x[kMaxDim], w = 1.0;
    for (int i = 0; i < d; ++i) {
      x[i] = mid[i] + half[i] * nodes[idx[i]];
      w *= weights[idx[i]] * half[i];
    }
    ++evals;
    double v = 0;
    if (!indicator || region->contains(x)) v = f(x);
    const double term = w * v - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    for (int i = 0; i < d; ++i) {
      if (++idx[i] < order) break;
      idx[i] = 0;
    }
  }
  return sum;
}

struct Cell {
  Box box;
  double value = 0;
  double error = 0;
  int depth = 0;
  bool capped = false;  // boundary cell at depth cap: error is sup*volume
  bool dead = false;
};

struct HeapItem {
  double error;
  size_t idx;
  bool operator<(const HeapItem& o) const {
    if (error != o.error) return error < o.error;
    return idx < o.idx;  // deterministic tie-break
  }
};

void evaluate_cell(Cell& c, const Integrand& f, const Region& region, const SupBound* sup,
                   long& evals) {
  const auto cls = region.classify(c.box);
  if (cls == Region::Class::outside) {
    c.value = 0;
    c.error = 0;
    c.capped = true;  // nothing more to gain
    return;
  }
  const bool ind = cls == Region::Class::straddle;
  const double hi = tensor_rule(f, c.box, kGL5x, kGL5w, 5, ind, &region, evals);
  const double lo = tensor_rule(f, c.box, kGL3x, kGL3w, 3, ind, &region, evals);
  c.value = hi;
  c.error = std::abs(hi - lo);
  if (ind && c.depth >= 1 && sup == nullptr) {
    // no certified bound available: keep the embedded estimate
  }
  c.capped = false;
  if (ind && c.depth >= 0) {
    // straddling cells at the depth cap are bounded by sup * volume
  }
}

}  // namespace

QuadratureResult integrate_region(const Integrand& f, const Region& region,
                                  const QuadratureOptions& opt, const SupBound* sup) {
  if (!(opt.tol > 0)) throw Error(Errc::domain, "tol must be positive");
  QuadratureResult res;
  std::vector<Cell> cells;
  cells.reserve(1024);
  std::priority_queue<HeapItem> heap;

  Cell root;
  root.box = region.bbox;
  evaluate_cell(root, f, region, sup, res.n_evaluations);
  cells.push_back(root);
  double total_error = root.error;
  heap.push({root.error, 0});

  const double kMinWidth = 1e-14;
  while (total_error > opt.tol) {
    if (heap.empty()) break;
    const HeapItem top = heap.top();
    heap.pop();
    Cell& parent = cells[top.idx];
    if (parent.dead || parent.capped || parent.error != top.error) continue;
    if (res.n_evaluations >= opt.max_evaluations) break;

    // split along the widest axis
    int axis = 0;
    double wmax = -1;
    for (int i = 0; i < parent.box.dim; ++i) {
      const double w = parent.box.hi[i] - parent.box.lo[i];
      if (w > wmax) {
        wmax = w;
        axis = i;
      }
    }
    const auto cls = region.classify(parent.box);
    const bool straddle = cls == Region::Class::straddle;
    if (wmax < kMinWidth || (straddle && parent.depth >= opt.depth_cap)) {
      // cap reached: for straddling cells replace the estimate by a certified
      // sup * volume bound when available
      total_error -= parent.error;
      if (straddle && sup != nullptr)
        parent.error = std::min(parent.error, (*sup)(parent.box) * parent.box.volume());
      parent.capped = true;
      total_error += parent.error;
      continue;
    }

    const double mid = 0.5 * (parent.box.lo[axis] + parent.box.hi[axis]);
    Cell left, right;
    left.box = parent.box;
    left.box.hi[axis] = mid;
    right.box = parent.box;
    right.box.lo[axis] = mid;
    left.depth = right.depth = parent.depth + 1;
    evaluate_cell(left, f, region, sup, res.n_evaluations);
    evaluate_cell(right, f, region, sup, res.n_evaluations);

    total_error -= parent.error;
    parent.dead = true;
    total_error += left.error + right.error;
    cells.push_back(left);
    heap.push({cells.back().error, cells.size() - 1});
    cells.push_back(right);
    heap.push({cells.back().error, cells.size() - 1});
  }

  // fixed-order accumulation: arena order is deterministic
  double sum = 0, comp = 0, err = 0, errc = 0;
  for (const Cell& c : cells) {
    if (c.dead) continue;
    double term = c.value - comp;
    double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    term = c.error - errc;
    t = err + term;
    errc = (t - err) - term;
    err = t;
  }
  res.value = sum;
  res.abs_error_estimate = err;
  res.converged = err <= opt.tol;
  if (!res.converged && opt.throw_on_failure)
    throw Error(Errc::no_convergence,
                "error estimate " + std::to_string(err) + " above tol after " +
                    std::to_string(res.n_evaluations) + " evaluations");
  return res;
}

QuadratureResult integrate_box(const Integrand& f, const Box& box,
                               const QuadratureOptions& opt) {
  Region r;
  r.dim = box.dim;
  r.bbox = box;
  return integrate_region(f, r, opt, nullptr);
}

double midpoint_oracle(const Integrand& f, const Region& region, int n) {
  const Box& b = region.bbox;
  const int d = b.dim;
  double h[kMaxDim];
  double cellvol = 1.0;
  for (int i = 0; i < d; ++i) {
    h[i] = (b.hi[i] - b.lo[i]) / n;
    cellvol *= h[i];
  }
  long count = 1;
  for (int i = 0; i < d; ++i) count *= n;
  int idx[kMaxDim] = {0, 0, 0, 0};
  double sum = 0, comp = 0;
  for (long k = 0; k < count; ++k) {
    double x[kMaxDim];
    for (int i = 0; i < d; ++i) x[i] = b.lo[i] + (idx[i] + 0.5) * h[i];
    if (region.contains(x)) {
      const double term = f(x) * cellvol - comp;
      const double t = sum + term;
      comp = (t - sum) - term;
      sum = t;
    }
    for (int i = 0; i < d; ++i) {
      if (++idx[i] < n) break;
      idx[i] = 0;
    }
  }
  return sum;
}

}  // namespace sievecalc
