#include "portthermo/numerics.hpp"

#include <cmath>

namespace portthermo {

double fd_step(double x) { return 1e-6 * (1.0 + std::abs(x)); }

Vec fd_gradient(const ScalarFn& f, const Vec& x) {
  Vec g(x.size());
  Vec xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = fd_step(x[i]);
    xp[i] = x[i] + h;
    const double fp = f(xp);
    xp[i] = x[i] - h;
    const double fm = f(xp);
    xp[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Mat fd_hessian(const ScalarFn& f, const Vec& x) {
  const Eigen::Index n = x.size();
  Mat h_mat(n, n);
  Vec xp = x;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double h = fd_step(x[i]);
    xp[i] = x[i] + h;
    const Vec gp = fd_gradient(f, xp);
    xp[i] = x[i] - h;
    const Vec gm = fd_gradient(f, xp);
    xp[i] = x[i];
    h_mat.col(i) = (gp - gm) / (2.0 * h);
  }
  return 0.5 * (h_mat + h_mat.transpose());
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace portthermo
