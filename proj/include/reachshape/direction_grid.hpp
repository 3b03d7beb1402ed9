#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace reachshape {

// Deterministic unit-direction set used to discretize the dual sphere.
// n = 2 uses equally spaced angles; n = 3 a spherical Fibonacci set;
// n >= 4 a Halton sequence pushed through the inverse normal CDF.
class DirectionGrid {
 public:
  DirectionGrid(int dimension, int count);

  int dimension() const { return dimension_; }
  int count() const { return static_cast<int>(directions_.size()); }
  const std::vector<Eigen::VectorXd>& directions() const { return directions_; }
  const Eigen::VectorXd& direction(int i) const { return directions_[i]; }
  const std::string& scheme() const { return scheme_; }

  // Identity of the point set; grids with equal keys hold identical directions.
  std::string key() const;

 private:
  int dimension_;
  std::string scheme_;
  std::vector<Eigen::VectorXd> directions_;
};

}  // namespace reachshape
