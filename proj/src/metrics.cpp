#include "reachshape/metrics.hpp"

#include <cmath>

#include "reachshape/common.hpp"

namespace reachshape {

namespace {

void check_same_dimension(const SupportBody& a, const SupportBody& b,
                          const DirectionGrid& grid) {
  if (a.dimension() != b.dimension() || a.dimension() != grid.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch between bodies and grid");
  }
}

void check_positive(const std::vector<double>& h, const char* which) {
  for (double v : h) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::DegenerateBody,
                  std::string("degenerate body: ") + which +
                      " has nonpositive support on a grid direction");
    }
  }
}

}  // namespace

double containment_factor(const SupportBody& body1, const SupportBody& body2,
                          const DirectionGrid& grid) {
  check_same_dimension(body1, body2, grid);
  const auto& h1 = body1.samples(grid);
  const auto& h2 = body2.samples(grid);
  check_positive(h1, "first body");
  check_positive(h2, "second body");
  double t = 1.0;
  for (int i = 0; i < grid.count(); ++i) {
    t = std::max(t, h2[i] / h1[i]);
  }
  return t;
}

BmResult bm_factors(const SupportBody& body1, const SupportBody& body2,
                    const DirectionGrid& grid) {
  check_same_dimension(body1, body2, grid);
  const auto& h1 = body1.samples(grid);
  const auto& h2 = body2.samples(grid);
  check_positive(h1, "first body");
  check_positive(h2, "second body");
  double t12 = 1.0, t21 = 1.0;
  for (int i = 0; i < grid.count(); ++i) {
    double r = h2[i] / h1[i];
    t12 = std::max(t12, r);
    t21 = std::max(t21, 1.0 / r);
  }
  return {std::log(t12 * t21), t12, t21};
}

double bm_distance(const SupportBody& body1, const SupportBody& body2,
                   const DirectionGrid& grid) {
  return bm_factors(body1, body2, grid).rho;
}

Eigen::MatrixXd fit_ellipsoid(const SupportBody& body,
                              const DirectionGrid& grid) {
  const int n = body.dimension();
  const int p = n * (n + 1) / 2;
  if (grid.count() < p) {
    throw Error(ErrorCode::GridTooSmall,
                "grid too small: ellipsoid fit needs at least n(n+1)/2 "
                "directions");
  }
  const auto& h = body.samples(grid);
  check_positive(h, "body");

  // Design row for xi: [xi_i^2 ... , 2 xi_i xi_j (i<j) ...] against h^2.
  Eigen::MatrixXd design(grid.count(), p);
  Eigen::VectorXd rhs(grid.count());
  for (int r = 0; r < grid.count(); ++r) {
    const Eigen::VectorXd& xi = grid.direction(r);
    int c = 0;
    for (int i = 0; i < n; ++i) design(r, c++) = xi(i) * xi(i);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) design(r, c++) = 2.0 * xi(i) * xi(j);
    }
    rhs(r) = h[r] * h[r];
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) <= kRankTol * s(0)) {
    throw Error(ErrorCode::GridTooSmall,
                "grid too small: rank-deficient normal equations");
  }
  Eigen::VectorXd q = svd.solve(rhs);

  Eigen::MatrixXd Q(n, n);
  int c = 0;
  for (int i = 0; i < n; ++i) Q(i, i) = q(c++);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Q(i, j) = q(c);
      Q(j, i) = q(c);
      ++c;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
  Eigen::VectorXd ev = es.eigenvalues();
  double lmax = ev.maxCoeff();
  if (!(lmax > 0.0)) {
    throw Error(ErrorCode::DegenerateBody,
                "degenerate body: ellipsoid fit produced no positive "
                "eigenvalue");
  }
  double floor = kRankTol * lmax;
  for (int i = 0; i < n; ++i) ev(i) = std::max(ev(i), floor);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace reachshape
