#include "reachshape/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace reachshape {

NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& x0, double step, int max_evals, double spread_tol) {
  const int n = static_cast<int>(x0.size());
  const double alpha = 1.0, gamma = 2.0, beta = 0.5, sigma = 0.5;

  std::vector<Eigen::VectorXd> x(n + 1, x0);
  std::vector<double> f(n + 1);
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& p) {
    ++evals;
    double v = objective(p);
    return std::isfinite(v) ? v : std::numeric_limits<double>::max();
  };

  for (int i = 1; i <= n; ++i) x[i](i - 1) += step;
  for (int i = 0; i <= n; ++i) f[i] = eval(x[i]);

  std::vector<int> order(n + 1);
  NelderMeadResult result;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f[a] < f[b]; });
    const int best = order[0], worst = order[n], second = order[n - 1];

    double spread = std::abs(f[worst] - f[best]);
    if (spread < spread_tol) {
      result.converged = true;
      break;
    }
    if (evals >= max_evals) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i) {
      if (i != worst) centroid += x[i];
    }
    centroid /= n;

    Eigen::VectorXd xr = centroid + alpha * (centroid - x[worst]);
    double fr = eval(xr);
    if (fr < f[best]) {
      Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
      double fe = eval(xe);
      if (fe < fr) {
        x[worst] = xe;
        f[worst] = fe;
      } else {
        x[worst] = xr;
        f[worst] = fr;
      }
    } else if (fr < f[second]) {
      x[worst] = xr;
      f[worst] = fr;
    } else {
      bool outside = fr < f[worst];
      Eigen::VectorXd xc = outside ? centroid + beta * (xr - centroid)
                                   : centroid + beta * (x[worst] - centroid);
      double fc = eval(xc);
      if (fc < (outside ? fr : f[worst])) {
        x[worst] = xc;
        f[worst] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          x[i] = x[best] + sigma * (x[i] - x[best]);
          f[i] = eval(x[i]);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (f[i] < f[best]) best = i;
  }
  result.x = x[best];
  result.value = f[best];
  result.evaluations = evals;
  return result;
}

}  // namespace reachshape
