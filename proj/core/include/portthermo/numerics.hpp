// Shared numerical helpers: finite-difference derivatives used as fallbacks
// wherever a closed-form gradient or Hessian is not supplied.
#pragma once

#include <Eigen/Dense>

#include <functional>

namespace portthermo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

using ScalarFn = std::function<double(const Vec&)>;

// Central-difference step h = 1e-6 * (1 + |x|), balancing truncation against
// rounding for O(1)-to-O(1e5) coordinate magnitudes.
double fd_step(double x);

// Gradient of f at x, central differences coordinate by coordinate.
Vec fd_gradient(const ScalarFn& f, const Vec& x);

// Hessian of f at x from central differences of fd_gradient, symmetrized.
// Accuracy is ~1e-4 relative at double precision; prefer closed forms for
// anything feeding an integrator.
Mat fd_hessian(const ScalarFn& f, const Vec& x);

// |a - b| / (1 + max(|a|, |b|)).
double rel_diff(double a, double b);

}  // namespace portthermo
