// Cotangent-space geometry: Liouville pairing, homogeneity checks, gauge charts.
#include <catch2/catch_amalgamated.hpp>

#include "portthermo/phase_space.hpp"

#include <cmath>
#include <random>

using namespace portthermo;

namespace {

Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("extensive space validation", "[phase_space]") {
  ExtensiveSpace sp = make_space({"E", "S", "V"});
  REQUIRE(sp.energy_index == 0);
  REQUIRE(sp.entropy_indices == std::vector<std::size_t>{1});
  REQUIRE(sp.index_of("V") == 2);
  REQUIRE_THROWS_AS(sp.index_of("N"), std::invalid_argument);

  ExtensiveSpace dup;
  dup.names = {"E", "E"};
  REQUIRE_THROWS_AS(dup.validate(), std::invalid_argument);

  ExtensiveSpace bad;
  bad.names = {"E", "S"};
  bad.entropy_indices = {0};  // collides with energy
  REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);

  // No entropy coordinate is legal (pure mechanics).
  ExtensiveSpace mech;
  mech.names = {"E", "pi"};
  mech.validate();
  REQUIRE_FALSE(mech.is_entropy(1));
}

TEST_CASE("liouville form pairs p with tangents", "[phase_space]") {
  CotangentPoint pt{vec({0, 0, 0}), vec({1, 2, 3})};
  CHECK(liouville_eval(pt, vec({1, 0, 0})) == 1.0);

  CotangentPoint th{vec({0, 0, 0}), vec({-1, 400, -100})};
  CHECK(liouville_eval(th, vec({0, 1, 0})) == 400.0);

  // Tangent to the heat-compartment state manifold E = exp(S) at S = 0:
  // (dE, dS) = (E'(S)u, u); the form vanishes on it.
  const double u = 0.7;
  CotangentPoint hc{vec({1.0, 0.0}), vec({-1.0, 1.0})};
  CHECK(liouville_eval(hc, vec({u, u})) == 0.0);

  CHECK_THROWS_AS(liouville_eval(pt, vec({1, 0})), std::invalid_argument);
}

TEST_CASE("liouville form scales linearly in p", "[phase_space]") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    Vec p(4), v(4);
    for (int i = 0; i < 4; ++i) {
      p[i] = d(rng);
      v[i] = d(rng);
    }
    const double lam = d(rng);
    CotangentPoint a{Vec::Zero(4), p}, b{Vec::Zero(4), lam * p};
    const double lhs = liouville_eval(b, v);
    const double rhs = lam * liouville_eval(a, v);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("homogeneity check distinguishes degrees", "[phase_space]") {
  // Heat-compartment control term p_S + p_E E'(S) with E = exp(S):
  // linear in p, so degree 1 errors are exactly zero.
  PhaseFn kc = [](const Vec& z, const Vec& p) {
    return p[1] + p[0] * std::exp(z[1]);
  };
  CotangentPoint pt{vec({1.0, 0.3}), vec({-1.0, 1.2})};
  auto rep = check_homogeneity(kc, pt, 1, {2.0});
  CHECK(rep.max_rel_error == 0.0);
  CHECK(rep.euler_residual <= 1e-9 * rep.euler_scale);

  // p_S^2 is degree 2; the degree-1 check must see it.
  PhaseFn quad = [](const Vec&, const Vec& p) { return p[1] * p[1]; };
  auto bad = check_homogeneity(quad, pt, 1, {2.0});
  CHECK(bad.max_rel_error > 0.1);
}

TEST_CASE("heat-exchanger drift term is degree one", "[phase_space]") {
  // K^a = lam (1/T1 - 1/T2)(p_S1 T2 - p_S2 T1) over z = (E, S1, S2),
  // compartments E_i = C_i exp(S_i / C_i) so T_i = exp(S_i / C_i).
  const double lam = 1.0, c1 = 1.0, c2 = 2.0;
  PhaseFn ka = [=](const Vec& z, const Vec& p) {
    const double t1 = std::exp(z[1] / c1), t2 = std::exp(z[2] / c2);
    return lam * (1.0 / t1 - 1.0 / t2) * (p[1] * t2 - p[2] * t1);
  };
  CotangentPoint pt{vec({700.0, std::log(400.0), 2.0 * std::log(300.0)}),
                    vec({-1.0, 400.0, 300.0})};
  auto rep = check_homogeneity(ka, pt, 1, {-1.0, 0.5, 3.0});
  CHECK(rep.pass(1e-12));
  CHECK(rep.euler_residual <= 1e-9 * rep.euler_scale);
}

TEST_CASE("scaled-point evaluation failures are reported per lambda", "[phase_space]") {
  PhaseFn partial = [](const Vec&, const Vec& p) {
    if (p[0] < 0.0) throw std::domain_error("negative p0 not allowed");
    return p[0];
  };
  CotangentPoint pt{vec({0.0}), vec({1.0})};
  auto rep = check_homogeneity(partial, pt, 1, {2.0, -1.0});
  REQUIRE(rep.failures.size() == 1);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("gauge fixing reads off intensive variables", "[phase_space]") {
  // z = (E, S, V), p = (-1, 400, -1e5): energy gauge gives (T, -P).
  CotangentPoint pt{vec({0, 0, 0}), vec({-1.0, 400.0, -1e5})};
  ContactPoint en = gauge_fix(pt, 0);
  CHECK(en.gamma[0] == 400.0);
  CHECK(en.gamma[1] == -1e5);

  // Ray invariance: scaling p changes nothing.
  CotangentPoint pt2{pt.z, vec({-2.0, 800.0, -2e5})};
  ContactPoint en2 = gauge_fix(pt2, 0);
  CHECK(std::abs(en2.gamma[0] - en.gamma[0]) <= 1e-14 * 400.0);
  CHECK(std::abs(en2.gamma[1] - en.gamma[1]) <= 1e-14 * 1e5);

  // Entropy gauge: gamma = (1/T, P/T).
  ContactPoint ent = gauge_fix(pt, 1);
  CHECK(ent.gamma[0] == Catch::Approx(0.0025).margin(1e-18));
  CHECK(ent.gamma[1] == Catch::Approx(250.0).margin(1e-12));

  CotangentPoint degenerate{vec({0, 0, 0}), vec({0.0, 1.0, 0.0})};
  CHECK_THROWS_AS(gauge_fix(degenerate, 0), std::domain_error);
}

TEST_CASE("lift is the inverse chart up to ray scaling", "[phase_space]") {
  ContactPoint cp;
  cp.z = vec({0, 0, 0});
  cp.gauge_index = 0;
  cp.gamma = vec({400.0, -1e5});

  CotangentPoint a = lift_contact(cp, 1.0);
  CHECK(a.p[0] == -1.0);
  CHECK(a.p[1] == 400.0);
  CHECK(a.p[2] == -1e5);

  CotangentPoint b = lift_contact(cp, 3.0);
  CHECK(b.p[0] == -3.0);
  CHECK(b.p[1] == 1200.0);
  CHECK(b.p[2] == -3e5);

  CHECK_THROWS_AS(lift_contact(cp, 0.0), std::invalid_argument);

  // Round trip at random points and scales, any gauge index.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    ContactPoint r;
    r.z = vec({d(rng), d(rng), d(rng), d(rng)});
    r.gauge_index = static_cast<std::size_t>(trial % 4);
    r.gamma = vec({d(rng), d(rng), d(rng)});
    double s = d(rng);
    if (std::abs(s) < 0.1) s = 0.5;
    ContactPoint back = gauge_fix(lift_contact(r, s), r.gauge_index);
    for (Eigen::Index i = 0; i < 3; ++i)
      CHECK(std::abs(back.gamma[i] - r.gamma[i]) <=
            1e-14 * (1.0 + std::abs(r.gamma[i])));
  }
}
