#include "reachshape/direction_grid.hpp"

#include <cmath>

#include "reachshape/common.hpp"

namespace reachshape {

namespace {

// Inverse standard normal CDF, Acklam's rational approximation polished with
// one Halley step against std::erf. Good to ~1e-15 over (0,1).
double inverse_normal_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement: F(x) - p where F is the normal CDF.
  double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  int i = index;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

}  // namespace

DirectionGrid::DirectionGrid(int dimension, int count) : dimension_(dimension) {
  if (dimension < 1) {
    throw Error(ErrorCode::InvalidArgument, "grid dimension must be positive");
  }
  if (count < 2 * dimension) {
    throw Error(ErrorCode::GridTooSmall,
                "grid too small: count must be at least 2*dimension");
  }
  directions_.reserve(count);
  if (dimension == 1) {
    scheme_ = "signs";
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXd v(1);
      v(0) = (i % 2 == 0) ? 1.0 : -1.0;
      directions_.push_back(v);
    }
  } else if (dimension == 2) {
    scheme_ = "angles";
    for (int i = 0; i < count; ++i) {
      double theta = 2.0 * M_PI * i / count;
      Eigen::VectorXd v(2);
      v << std::cos(theta), std::sin(theta);
      directions_.push_back(v.normalized());
    }
  } else if (dimension == 3) {
    scheme_ = "fibonacci";
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 0; i < count; ++i) {
      double z = 1.0 - (2.0 * i + 1.0) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = 2.0 * M_PI * std::fmod(i * golden, 1.0);
      Eigen::VectorXd v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      directions_.push_back(v.normalized());
    }
  } else {
    scheme_ = "halton-normal";
    static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                 23, 29, 31, 37, 41, 43, 47, 53};
    if (dimension > static_cast<int>(sizeof(primes) / sizeof(primes[0]))) {
      throw Error(ErrorCode::InvalidArgument,
                  "grid dimension too large for the Halton scheme");
    }
    int produced = 0;
    int index = 1;
    while (produced < count) {
      Eigen::VectorXd v(dimension);
      for (int j = 0; j < dimension; ++j) {
        double u = halton(index, primes[j]);
        // Keep u strictly inside (0,1).
        u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
        v(j) = inverse_normal_cdf(u);
      }
      ++index;
      double nrm = v.norm();
      if (nrm < 1e-8) continue;
      directions_.push_back(v / nrm);
      ++produced;
    }
  }
}

std::string DirectionGrid::key() const {
  return scheme_ + ":" + std::to_string(dimension_) + ":" +
         std::to_string(count());
}

}  // namespace reachshape
