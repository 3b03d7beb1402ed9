#include "reachshape/support_body.hpp"

#include <cmath>

#include "reachshape/common.hpp"

namespace reachshape {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " has non-finite entries");
  }
}

int matrix_rank(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  double tol = kRankTol * s(0);
  int r = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > tol) ++r;
  }
  return r;
}

}  // namespace

SupportBody::SupportBody(int dimension, BodyKind kind, Evaluator evaluator)
    : dimension_(dimension),
      kind_(kind),
      evaluator_(std::move(evaluator)),
      cache_(std::make_shared<SampleCache>()) {
  if (dimension < 1) {
    throw Error(ErrorCode::InvalidArgument, "body dimension must be positive");
  }
}

double SupportBody::support(const Eigen::VectorXd& xi) const {
  if (xi.size() != dimension_) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: direction has size " +
                    std::to_string(xi.size()) + ", body dimension is " +
                    std::to_string(dimension_));
  }
  if (!xi.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "direction has non-finite entries");
  }
  return evaluator_(xi);
}

const std::vector<double>& SupportBody::samples(
    const DirectionGrid& grid) const {
  if (grid.dimension() != dimension_) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch between grid and body");
  }
  const std::string key = grid.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return *it->second;
  }
  auto values = std::make_shared<std::vector<double>>(grid.count());
  const auto& dirs = grid.directions();
  parallel_for(dirs.size(),
               [&](std::size_t i) { (*values)[i] = evaluator_(dirs[i]); });
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto [it, inserted] = cache_->entries.emplace(key, values);
  (void)inserted;
  return *it->second;
}

SupportBody SupportBody::with_primitive(PrimitiveSpec spec) const {
  SupportBody out = *this;
  out.primitive_ = std::move(spec);
  return out;
}

SupportBody SupportBody::with_note(std::string note) const {
  SupportBody out = *this;
  out.notes_.push_back(std::move(note));
  return out;
}

SupportBody SupportBody::with_meta(std::string key, std::string value) const {
  SupportBody out = *this;
  out.meta_[std::move(key)] = std::move(value);
  return out;
}

SupportBody make_box(const Eigen::VectorXd& half_widths) {
  require_finite(half_widths, "box half-widths");
  if (half_widths.size() < 1 || (half_widths.array() <= 0.0).any()) {
    throw Error(ErrorCode::DegenerateBody,
                "degenerate body: box half-widths must be positive");
  }
  Eigen::VectorXd a = half_widths;
  SupportBody body(
      static_cast<int>(a.size()), BodyKind::Primitive,
      [a](const Eigen::VectorXd& xi) { return a.dot(xi.cwiseAbs()); });
  return body.with_primitive({PrimitiveKind::Box, a, {}});
}

SupportBody make_ball(int dimension, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::DegenerateBody,
                "degenerate body: ball radius must be positive");
  }
  SupportBody body(dimension, BodyKind::Primitive,
                   [radius](const Eigen::VectorXd& xi) {
                     return radius * xi.norm();
                   });
  Eigen::VectorXd r(1);
  r(0) = radius;
  return body.with_primitive({PrimitiveKind::Ball, r, {}});
}

SupportBody make_ellipsoid(const Eigen::MatrixXd& Q) {
  require_finite(Q, "ellipsoid matrix");
  if (Q.rows() != Q.cols() || Q.rows() < 1) {
    throw Error(ErrorCode::DimensionMismatch, "ellipsoid matrix must be square");
  }
  Eigen::MatrixXd S = 0.5 * (Q + Q.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw Error(ErrorCode::DegenerateBody,
                "degenerate body: ellipsoid matrix is not positive definite");
  }
  SupportBody body(static_cast<int>(S.rows()), BodyKind::Primitive,
                   [S](const Eigen::VectorXd& xi) {
                     return std::sqrt(xi.dot(S * xi));
                   });
  return body.with_primitive({PrimitiveKind::Ellipsoid, {}, S});
}

SupportBody make_polytope(const Eigen::MatrixXd& vertices) {
  require_finite(vertices, "polytope vertices");
  if (matrix_rank(vertices) < vertices.rows()) {
    throw Error(ErrorCode::DegenerateBody,
                "degenerate body: polytope vertices do not span the space");
  }
  Eigen::MatrixXd V = vertices;
  SupportBody body(static_cast<int>(V.rows()), BodyKind::Primitive,
                   [V](const Eigen::VectorXd& xi) {
                     return (V.transpose() * xi).cwiseAbs().maxCoeff();
                   });
  return body.with_primitive({PrimitiveKind::Polytope, {}, V});
}

SupportBody make_zonotope(const Eigen::MatrixXd& generators) {
  require_finite(generators, "zonotope generators");
  if (matrix_rank(generators) < generators.rows()) {
    throw Error(ErrorCode::DegenerateBody,
                "degenerate body: zonotope generators do not span the space");
  }
  Eigen::MatrixXd G = generators;
  SupportBody body(static_cast<int>(G.rows()), BodyKind::Primitive,
                   [G](const Eigen::VectorXd& xi) {
                     return (G.transpose() * xi).cwiseAbs().sum();
                   });
  return body.with_primitive({PrimitiveKind::Zonotope, {}, G});
}

ControlSet control_box(const Eigen::VectorXd& half_widths) {
  return {make_box(half_widths)};
}
ControlSet control_ball(int dimension, double radius) {
  return {make_ball(dimension, radius)};
}
ControlSet control_ellipsoid(const Eigen::MatrixXd& Q) {
  return {make_ellipsoid(Q)};
}
ControlSet control_polytope(const Eigen::MatrixXd& vertices) {
  return {make_polytope(vertices)};
}
ControlSet control_zonotope(const Eigen::MatrixXd& generators) {
  return {make_zonotope(generators)};
}

double support_eval(const SupportBody& body, const Eigen::VectorXd& xi) {
  return body.support(xi);
}

SupportBody linear_image(const SupportBody& body, const Eigen::MatrixXd& M) {
  require_finite(M, "linear map");
  if (M.rows() != M.cols() || M.rows() != body.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: linear map must be square of the body "
                "dimension");
  }
  Eigen::MatrixXd Mt = M.transpose();
  SupportBody inner = body;
  SupportBody out(body.dimension(), BodyKind::LinearImage,
                  [inner, Mt](const Eigen::VectorXd& xi) {
                    return inner.support(Mt * xi);
                  });
  double det = M.determinant();
  if (std::abs(det) < 1e-12) {
    out = out.with_note("linear_image: |det M| < 1e-12, image may be degenerate");
  }
  return out;
}

}  // namespace reachshape
