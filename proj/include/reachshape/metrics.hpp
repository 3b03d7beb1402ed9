#pragma once

#include <Eigen/Dense>

#include "reachshape/direction_grid.hpp"
#include "reachshape/support_body.hpp"

namespace reachshape {

// Smallest t >= 1 with t*body1 containing body2, evaluated on the grid:
// max(1, max_xi H2(xi) / H1(xi)).
double containment_factor(const SupportBody& body1, const SupportBody& body2,
                          const DirectionGrid& grid);

struct BmResult {
  double rho;
  double t12;  // containment factor t(body1, body2)
  double t21;  // containment factor t(body2, body1)
};

// Banach-Mazur distance log(t12 * t21) on the grid.
BmResult bm_factors(const SupportBody& body1, const SupportBody& body2,
                    const DirectionGrid& grid);
double bm_distance(const SupportBody& body1, const SupportBody& body2,
                   const DirectionGrid& grid);

// Least-squares fit of h(xi)^2 by xi^T Q xi over the grid, projected to SPD
// by clamping eigenvalues below kRankTol * lambda_max.
Eigen::MatrixXd fit_ellipsoid(const SupportBody& body,
                              const DirectionGrid& grid);

}  // namespace reachshape
