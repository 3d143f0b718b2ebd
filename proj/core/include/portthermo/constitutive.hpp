// State properties: generating functions for homogeneous Lagrangian
// submanifolds, on-submanifold residuals, partial Legendre transforms between
// thermodynamic potentials, and the built-in ideal gas.
#pragma once

#include "portthermo/phase_space.hpp"

#include <functional>
#include <string>
#include <vector>

namespace portthermo {

// One extensive coordinate (dependent_index) expressed as a function of the
// others. In the energy representation the dependent variable is E and
// gradient components are the intensive variables (T, -P, mu, ...); in the
// entropy representation it is S and they are (1/T, P/T, -mu/T, ...).
struct GeneratingFunction {
  ExtensiveSpace space;
  std::size_t dependent_index = 0;
  ScalarFn value;  // of the independent coordinates, in coordinate order
  std::function<Vec(const Vec&)> gradient;  // optional closed form
  std::function<Mat(const Vec&)> hessian;   // optional closed form

  std::vector<std::size_t> independent_indices() const;
  // Closed form when supplied, central differences otherwise.
  Vec grad(const Vec& z_indep) const;
  Mat hess(const Vec& z_indep) const;
};

// Verifies a supplied gradient against finite differences (1e-5 relative) and
// Hessian symmetry (1e-10) at the given samples; throws on mismatch.
void check_consistency(const GeneratingFunction& gen,
                       const std::vector<Vec>& samples);

struct ConstitutiveRelation {
  GeneratingFunction gen;
  std::string label;
};

// The submanifold L of a relation is
//   { (z,p) | z_dep = value(z_indep), p_indep = -p_dep * gradient(z_indep),
//     p_dep != 0 },
// the zero set of the homogeneous generating function -p_dep * value.

// Point of L over z_indep with p_dep = -scale, p_indep = scale * gradient.
CotangentPoint point_on(const ConstitutiveRelation& rel, const Vec& z_indep,
                        double scale);

// Distance-to-L monitor: max of the dependent-coordinate defect and, after
// normalizing p_dep to -1, the co-vector defect against the gradient, each
// relative to 1 + magnitude. Zero (to rounding) exactly on L.
double residual_on(const ConstitutiveRelation& rel, const CotangentPoint& pt);

// Scatters independent coordinates (and the generator value) into a full
// z-vector; convenience used throughout the catalog.
Vec assemble_z(const ConstitutiveRelation& rel, const Vec& z_indep);
// Extracts the independent block of a full z-vector.
Vec extract_indep(const ConstitutiveRelation& rel, const Vec& z);

struct NewtonOptions {
  Vec guess;          // starting iterate for the swapped block; may be empty
  Vec bracket_lo;     // optional coarse-scan bracket (per swapped coordinate)
  Vec bracket_hi;
  int max_iter = 50;
  double tol = 1e-12;  // on the gradient equation, relative to 1 + |target|
};

// Mixed-representation generating function F(z_I, gamma_J) obtained from a
// relation by trading the independent coordinates J for their conjugate
// intensive variables. The source submanifold is recovered through
//   z_dep = F - gamma_J . dF/dgamma_J,  z_J = -dF/dgamma_J,
//   gamma_I = dF/dz_I.
struct MixedGenerating {
  ExtensiveSpace space;
  std::size_t dependent_index = 0;
  std::vector<std::size_t> I;  // global coordinate indices kept extensive
  std::vector<std::size_t> J;  // global coordinate indices made intensive
  std::function<double(const Vec& zI, const Vec& gJ)> value;
  std::function<Vec(const Vec& zI, const Vec& gJ)> grad_zI;  // = dE/dz_I
  std::function<Vec(const Vec& zI, const Vec& gJ)> grad_gJ;  // = -z_J
  std::function<Vec(const Vec& zI, const Vec& gJ)> solve_zJ;  // Newton inverse
};

// Partial Legendre transform over the swapped subset J (global coordinate
// indices, subset of the independents): F(z_I, gamma_J) = E - gamma_J . z_J
// with z_J solved from dE/dz_J = gamma_J by damped Newton.
MixedGenerating partial_legendre(const ConstitutiveRelation& rel,
                                 const std::vector<std::size_t>& J,
                                 const NewtonOptions& opts = {});

// d2F/dgamma_J2 by central differences of the closed-form gradient.
Mat hessian_gamma_block(const MixedGenerating& mixed, const Vec& zI,
                        const Vec& gJ);

// Full point of the source submanifold from mixed coordinates; p is lifted
// with p_dep = -scale.
CotangentPoint reconstruct(const MixedGenerating& mixed, const Vec& zI,
                           const Vec& gJ, double scale = 1.0);

// Back-transform: recover the source-representation relation from a mixed
// potential (solves gamma_J from z_J = -dF/dgamma_J). Inverse of
// partial_legendre up to the usual constants.
ConstitutiveRelation to_relation(const MixedGenerating& mixed,
                                 const std::string& label,
                                 const NewtonOptions& opts = {});

struct DualityReport {
  double max_err = 0.0;  // worst |H_E(J,J) * (-d2F/dgamma_J2) - I| entry
  bool pass = false;
};

// Checks the Hessian duality between a potential and its partial Legendre
// transform: the swapped block of the source Hessian times the negated
// gamma-block Hessian of F is the identity.
DualityReport hessian_duality_check(const ConstitutiveRelation& rel,
                                    const std::vector<std::size_t>& J,
                                    const std::vector<Vec>& samples,
                                    double tol = 1e-6,
                                    const NewtonOptions& opts = {});

// Ideal gas in energy representation over (E, S, V):
//   T(S,V) = exp((S - a - N R ln V) / C_V),  E = C_V T + W,
// equivalently S(T,V) = C_V ln T + N R ln V + a. Satisfies P V = N R T with
// P = -dE/dV. C_V is the total heat capacity (J/K), N the amount (mol).
struct IdealGasParams {
  double C_V = 12.471;  // 1.5 R
  double R = 8.314;
  double N = 1.0;
  double a = 0.0;  // entropy constant
  double W = 0.0;  // energy offset
};

ConstitutiveRelation ideal_gas(const IdealGasParams& g);
double ideal_gas_temperature(const IdealGasParams& g, double S, double V);
double ideal_gas_entropy(const IdealGasParams& g, double T, double V);

}  // namespace portthermo
