#include "portthermo/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace portthermo {

std::size_t ExtensiveSpace::index_of(const std::string& name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw std::invalid_argument("ExtensiveSpace: no coordinate named '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

bool ExtensiveSpace::is_entropy(std::size_t i) const {
  return std::find(entropy_indices.begin(), entropy_indices.end(), i) !=
         entropy_indices.end();
}

void ExtensiveSpace::validate() const {
  if (names.empty()) throw std::invalid_argument("ExtensiveSpace: no coordinates");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size())
    throw std::invalid_argument("ExtensiveSpace: coordinate names must be unique");
  if (energy_index >= names.size())
    throw std::invalid_argument("ExtensiveSpace: energy_index out of range");
  std::set<std::size_t> sidx;
  for (std::size_t i : entropy_indices) {
    if (i >= names.size())
      throw std::invalid_argument("ExtensiveSpace: entropy index out of range");
    if (i == energy_index)
      throw std::invalid_argument("ExtensiveSpace: entropy index equals energy_index");
    if (!sidx.insert(i).second)
      throw std::invalid_argument("ExtensiveSpace: duplicate entropy index");
  }
  if (!units.empty() && units.size() != names.size())
    throw std::invalid_argument("ExtensiveSpace: units must be empty or one per name");
}

ExtensiveSpace make_space(std::vector<std::string> names,
                          std::vector<std::string> units) {
  ExtensiveSpace sp;
  sp.names = std::move(names);
  sp.units = std::move(units);
  sp.energy_index = 0;
  if (sp.names.size() > 1) sp.entropy_indices = {1};
  sp.validate();
  return sp;
}

double liouville_eval(const CotangentPoint& pt, const Vec& tangent) {
  if (tangent.size() != pt.p.size())
    throw std::invalid_argument("liouville_eval: tangent length must match z");
  return pt.p.dot(tangent);
}

HomogeneityReport check_homogeneity(const PhaseFn& fn, const CotangentPoint& pt,
                                    int degree,
                                    const std::vector<double>& lambdas) {
  if (lambdas.empty())
    throw std::invalid_argument("check_homogeneity: lambdas must be nonempty");
  for (double l : lambdas)
    if (l == 0.0)
      throw std::invalid_argument("check_homogeneity: lambdas must be nonzero");

  HomogeneityReport rep;
  const double f0 = fn(pt.z, pt.p);
  for (double l : lambdas) {
    try {
      const double fl = fn(pt.z, l * pt.p);
      const double err =
          std::abs(fl - std::pow(l, degree) * f0) / (1.0 + std::abs(f0));
      rep.max_rel_error = std::max(rep.max_rel_error, err);
    } catch (const std::exception& e) {
      rep.failures.push_back("lambda=" + std::to_string(l) + ": " + e.what());
    }
  }

  // Euler identity at the base point, p-partials by central differences.
  double pdf = 0.0, abs_pdf = 0.0;
  Vec pp = pt.p;
  for (Eigen::Index i = 0; i < pt.p.size(); ++i) {
    const double h = fd_step(pt.p[i]);
    pp[i] = pt.p[i] + h;
    const double fp = fn(pt.z, pp);
    pp[i] = pt.p[i] - h;
    const double fm = fn(pt.z, pp);
    pp[i] = pt.p[i];
    const double term = pt.p[i] * (fp - fm) / (2.0 * h);
    pdf += term;
    abs_pdf += std::abs(term);
  }
  rep.euler_residual = std::abs(pdf - degree * f0);
  rep.euler_scale = 1.0 + std::abs(f0) + abs_pdf;
  return rep;
}

ContactPoint gauge_fix(const CotangentPoint& pt, std::size_t gauge_index) {
  if (gauge_index >= static_cast<std::size_t>(pt.p.size()))
    throw std::invalid_argument("gauge_fix: gauge_index out of range");
  const double pg = pt.p[static_cast<Eigen::Index>(gauge_index)];
  if (pg == 0.0)
    throw std::domain_error(
        "gauge_fix: p[gauge_index] vanishes; pick another gauge coordinate");
  ContactPoint cp;
  cp.z = pt.z;
  cp.gauge_index = gauge_index;
  cp.gamma.resize(pt.p.size() - 1);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < pt.p.size(); ++i) {
    if (static_cast<std::size_t>(i) == gauge_index) continue;
    cp.gamma[k++] = pt.p[i] / (-pg);
  }
  return cp;
}

CotangentPoint lift_contact(const ContactPoint& cp, double scale) {
  if (scale == 0.0)
    throw std::invalid_argument("lift_contact: scale must be nonzero");
  if (cp.gauge_index >= static_cast<std::size_t>(cp.z.size()))
    throw std::invalid_argument("lift_contact: gauge_index out of range");
  if (cp.gamma.size() + 1 != cp.z.size())
    throw std::invalid_argument("lift_contact: gamma must have length z - 1");
  CotangentPoint pt;
  pt.z = cp.z;
  pt.p.resize(cp.z.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < pt.p.size(); ++i) {
    if (static_cast<std::size_t>(i) == cp.gauge_index)
      pt.p[i] = -scale;
    else
      pt.p[i] = scale * cp.gamma[k++];
  }
  return pt;
}

}  // namespace portthermo
