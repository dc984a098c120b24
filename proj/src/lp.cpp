#include "harmonia/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace harmonia {

namespace {

constexpr double kEps = 1e-11;

// Tableau simplex, reduced costs recomputed per iteration (cheap at this
// scale). Dantzig pricing with a Bland fallback against cycling.
struct Tableau {
  int m = 0, cols = 0; // cols excludes the rhs column
  std::vector<std::vector<double>> t;
  std::vector<int> basis;

  double& at(int r, int c) { return t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  double rhs(int r) { return at(r, cols); }

  void pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= cols; ++j) at(r, j) /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis[static_cast<std::size_t>(r)] = c;
  }

  // returns false on unboundedness (or iteration blow-up)
  bool maximize(const std::vector<double>& obj) {
    const int max_iter = 2000 + 50 * cols;
    for (int iter = 0; iter < max_iter; ++iter) {
      const bool bland = iter > max_iter / 2;
      int enter = -1;
      double best = kEps;
      for (int j = 0; j < cols; ++j) {
        double rc = obj[static_cast<std::size_t>(j)];
        for (int r = 0; r < m; ++r)
          rc -= obj[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])] * at(r, j);
        if (rc > best) {
          enter = j;
          if (bland) break;
          best = rc;
        }
      }
      if (enter < 0) return true; // optimal
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m; ++r) {
        const double a = at(r, enter);
        if (a <= kEps) continue;
        const double ratio = rhs(r) / a;
        if (ratio < best_ratio - kEps ||
            (ratio <= best_ratio + kEps && leave >= 0 &&
             basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
          best_ratio = ratio;
          leave = r;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    return false;
  }
};

} // namespace

LpResult lp_solve(const std::vector<double>& c, const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  LpResult res;

  int art = 0;
  for (double bi : b)
    if (bi < 0) ++art;

  Tableau T;
  T.m = m;
  T.cols = n + m + art;
  T.t.assign(static_cast<std::size_t>(m),
             std::vector<double>(static_cast<std::size_t>(T.cols) + 1, 0.0));
  T.basis.assign(static_cast<std::size_t>(m), 0);

  int next_art = n + m;
  for (int i = 0; i < m; ++i) {
    const double sign = (b[static_cast<std::size_t>(i)] < 0) ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j)
      T.at(i, j) = sign * A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    T.at(i, n + i) = sign;
    T.at(i, T.cols) = sign * b[static_cast<std::size_t>(i)];
    if (sign < 0) {
      T.at(i, next_art) = 1.0;
      T.basis[static_cast<std::size_t>(i)] = next_art++;
    } else {
      T.basis[static_cast<std::size_t>(i)] = n + i;
    }
  }

  if (art > 0) {
    std::vector<double> phase1(static_cast<std::size_t>(T.cols), 0.0);
    for (int j = n + m; j < T.cols; ++j) phase1[static_cast<std::size_t>(j)] = -1.0;
    if (!T.maximize(phase1)) return res;
    double infeas = 0.0;
    for (int r = 0; r < m; ++r)
      if (T.basis[static_cast<std::size_t>(r)] >= n + m) infeas += std::abs(T.rhs(r));
    if (infeas > 1e-8) return res;
    for (int r = 0; r < m; ++r) {
      if (T.basis[static_cast<std::size_t>(r)] < n + m) continue;
      for (int j = 0; j < n + m; ++j)
        if (std::abs(T.at(r, j)) > kEps) {
          T.pivot(r, j);
          break;
        }
    }
  }

  std::vector<double> obj(static_cast<std::size_t>(T.cols), 0.0);
  for (int j = 0; j < n; ++j) obj[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
  for (int j = n + m; j < T.cols; ++j) obj[static_cast<std::size_t>(j)] = -1e9; // keep artificials out
  res.feasible = true;
  if (!T.maximize(obj)) {
    res.bounded = false;
    return res;
  }
  res.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < m; ++r)
    if (T.basis[static_cast<std::size_t>(r)] < n)
      res.x[static_cast<std::size_t>(T.basis[static_cast<std::size_t>(r)])] = T.rhs(r);
  res.objective = 0.0;
  for (int j = 0; j < n; ++j)
    res.objective += c[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
  return res;
}

} // namespace harmonia
