#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reachshape/direction_grid.hpp"

namespace reachshape {

enum class BodyKind { Primitive, LinearImage, Reachable, Limit, Normalized };

enum class PrimitiveKind { Box, Ball, Ellipsoid, Polytope, Zonotope };

// Parameters of a primitive body, kept so the body can be serialized.
struct PrimitiveSpec {
  PrimitiveKind kind;
  // box: half-widths (n); ball: single entry radius; ellipsoid: unused.
  Eigen::VectorXd vec;
  // ellipsoid: SPD matrix Q (n x n); polytope: vertices as columns;
  // zonotope: generators as columns.
  Eigen::MatrixXd mat;
};

// Centrally symmetric convex body represented by its support function.
// Immutable after construction; the evaluator is pure. Grid samples are
// materialized on demand and cached (copies share the cache).
class SupportBody {
 public:
  using Evaluator = std::function<double(const Eigen::VectorXd&)>;

  SupportBody(int dimension, BodyKind kind, Evaluator evaluator);

  int dimension() const { return dimension_; }
  BodyKind kind() const { return kind_; }

  // Support value h(xi). Throws on dimension mismatch.
  double support(const Eigen::VectorXd& xi) const;

  // Samples over the grid, parallel over directions, cached by grid key.
  const std::vector<double>& samples(const DirectionGrid& grid) const;

  const std::optional<PrimitiveSpec>& primitive() const { return primitive_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::map<std::string, std::string>& meta() const { return meta_; }

  SupportBody with_primitive(PrimitiveSpec spec) const;
  SupportBody with_note(std::string note) const;
  SupportBody with_meta(std::string key, std::string value) const;

 private:
  struct SampleCache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<double>>> entries;
  };

  int dimension_;
  BodyKind kind_;
  Evaluator evaluator_;
  std::optional<PrimitiveSpec> primitive_;
  std::vector<std::string> notes_;
  std::map<std::string, std::string> meta_;
  std::shared_ptr<SampleCache> cache_;
};

// Control set: a primitive body in control space, serializable.
struct ControlSet {
  SupportBody body;

  int dimension() const { return body.dimension(); }
  double support(const Eigen::VectorXd& v) const { return body.support(v); }
  const PrimitiveSpec& spec() const { return *body.primitive(); }
};

// Primitive constructors. All reject degenerate parameters.
SupportBody make_box(const Eigen::VectorXd& half_widths);
SupportBody make_ball(int dimension, double radius);
SupportBody make_ellipsoid(const Eigen::MatrixXd& Q);
SupportBody make_polytope(const Eigen::MatrixXd& vertices);
SupportBody make_zonotope(const Eigen::MatrixXd& generators);

ControlSet control_box(const Eigen::VectorXd& half_widths);
ControlSet control_ball(int dimension, double radius);
ControlSet control_ellipsoid(const Eigen::MatrixXd& Q);
ControlSet control_polytope(const Eigen::MatrixXd& vertices);
ControlSet control_zonotope(const Eigen::MatrixXd& generators);

// Explicit accessor mirroring body.support().
double support_eval(const SupportBody& body, const Eigen::VectorXd& xi);

// Exact support function of M * body: xi -> h_body(M^T xi).
SupportBody linear_image(const SupportBody& body, const Eigen::MatrixXd& M);

}  // namespace reachshape
