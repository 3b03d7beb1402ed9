#pragma once

#include <Eigen/Dense>

namespace reachshape {

// e^M by scaling-and-squaring with a degree-18 Taylor approximant after
// scaling ||M||_inf below 1/4. Inputs with ||M||_inf > kExpmNormLimit are
// rejected. Relative error <= 1e-12 inside the guard for well-scaled inputs.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& M);

}  // namespace reachshape
