#pragma once

#include <functional>

#include <Eigen/Dense>

namespace reachshape {

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;  // simplex spread fell below tol within budget
};

// Standard downhill simplex (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5). Deterministic: the initial simplex is x0 plus step * e_i.
NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& x0, double step, int max_evals, double spread_tol);

}  // namespace reachshape
