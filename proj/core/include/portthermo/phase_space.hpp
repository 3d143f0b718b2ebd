// Geometry of the symplectic extension T*Z minus its zero section: cotangent
// points over a named extensive-variable space, the Liouville one-form,
// degree-of-homogeneity diagnostics, and the gauge charts that trade the
// homogeneous co-variables p for intensive coordinates gamma.
#pragma once

#include "portthermo/numerics.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace portthermo {

// Ordered list of extensive coordinates z. Energy sits at energy_index
// (position 0 by convention). Entropy coordinates are listed explicitly:
// a pure-mechanics subsystem has none, a composite may carry several, and
// every Second-Law statement in this library is about their sum S_total.
struct ExtensiveSpace {
  std::vector<std::string> names;
  std::size_t energy_index = 0;
  std::vector<std::size_t> entropy_indices;
  std::vector<std::string> units;  // optional SI tags; empty or one per name

  std::size_t size() const { return names.size(); }
  std::size_t index_of(const std::string& name) const;
  bool is_entropy(std::size_t i) const;
  // Throws std::invalid_argument on duplicate names or out-of-range indices.
  void validate() const;
};

// Convenience builder for the common single-entropy layout (E, S, rest...).
ExtensiveSpace make_space(std::vector<std::string> names,
                          std::vector<std::string> units = {});

// A point of T*Z with the zero co-vector excluded. p is stored unnormalized;
// normalization to a gauge ray happens only at chart boundaries.
struct CotangentPoint {
  Vec z;
  Vec p;
};

// Intensive chart: the co-variable at gauge_index is pinned to -1 and the
// remaining ratios gamma_i = p_i / (-p_gauge) are kept in coordinate order.
// With the energy gauge this makes gamma_S = T and gamma_V = -P directly;
// with the entropy gauge, gamma_E = 1/T and gamma_V = P/T.
struct ContactPoint {
  Vec z;
  std::size_t gauge_index = 0;
  Vec gamma;  // length z.size() - 1
};

// Pairing of the canonical one-form with a tangent vector: sum_i p_i v_i.
double liouville_eval(const CotangentPoint& pt, const Vec& tangent);

struct HomogeneityReport {
  // max over lambda of |f(z, lambda*p) - lambda^degree
  //  * f(z,p)| / (1 + |f(z,p)|)
  double max_rel_error = 0.0;
  // |sum_i p_i df/dp_i - degree * f|, partials by central differences
  double euler_residual = 0.0;
  // scale 1 + |f| + sum_i |p_i df/dp_i| for judging euler_residual
  double euler_scale = 1.0;
  std::vector<std::string> failures;  // per-lambda evaluation errors

  bool pass(double tol = 1e-12) const {
    return failures.empty() && max_rel_error <= tol;
  }
};

using PhaseFn = std::function<double(const Vec& z, const Vec& p)>;

// Checks fn(z, lambda*p) = lambda^degree * fn(z, p) over the given lambdas and
// the Euler identity sum_i p_i dfn/dp_i = degree * fn at the base point.
HomogeneityReport check_homogeneity(const PhaseFn& fn, const CotangentPoint& pt,
                                    int degree,
                                    const std::vector<double>& lambdas);

// Chart to intensive coordinates; requires p[gauge_index] != 0. Ray-invariant:
// scaling p leaves the result unchanged.
ContactPoint gauge_fix(const CotangentPoint& pt, std::size_t gauge_index);

// Inverse chart: p[gauge] = -scale, p_i = scale * gamma_i for i != gauge.
// gauge_fix(lift_contact(cp, s), cp.gauge_index) == cp for any s != 0.
CotangentPoint lift_contact(const ContactPoint& cp, double scale);

}  // namespace portthermo
