#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ptnu/error.hpp"
#include "ptnu/oracle.hpp"
#include "ptnu/trig_pt.hpp"
#include "support/pt_cases.hpp"

using namespace ptnu;
using pt::PtPotential;

namespace {

int sign_changes(const std::vector<double>& values) {
  int changes = 0;
  double last = 0.0;
  for (double v : values) {
    if (v == 0.0) continue;
    if (last != 0.0 && (v < 0.0) != (last < 0.0)) ++changes;
    last = v;
  }
  return changes;
}

std::vector<double> scan(const pt::RadialWavefunction& wf, int points) {
  const double width = wf.potential().well_width();
  std::vector<double> out;
  for (int i = 1; i <= points; ++i) out.push_back(wf(width * i / (points + 1)));
  return out;
}

}  // namespace

TEST_CASE("potential_value") {
  const PtPotential p{10.0, 5.0, 3.0, 1.2};
  CHECK(pt::potential_value(p, std::numbers::pi / (4.0 * 1.2)) == doctest::Approx(2.0 * 5.0 + 2.0 * 3.0).epsilon(1e-14));
  const double s = std::sin(0.6), c = std::cos(0.6);
  CHECK(pt::potential_value(p, 0.5) == doctest::Approx(5.0 / (s * s) + 3.0 / (c * c)).epsilon(1e-15));
  // minimum V1 + V2 + 2 sqrt(V1 V2) where tan^2(alpha r) = sqrt(V1/V2)
  const double r_min = std::atan(std::sqrt(std::sqrt(5.0 / 3.0))) / 1.2;
  const double floor = 8.0 + 2.0 * std::sqrt(15.0);
  CHECK(pt::potential_value(p, r_min) == doctest::Approx(floor).epsilon(1e-14));
  for (int i = 1; i < 1000; ++i) CHECK(pt::potential_value(p, p.well_width() * i / 1000.0) >= floor * (1.0 - 1e-14));
  CHECK_THROWS_AS(pt::potential_value(p, 0.0), Error);
  CHECK_THROWS_AS(pt::potential_value(p, p.well_width()), Error);
}

TEST_CASE("to_nu_family") {
  const auto fam = pt::to_nu_family(PtPotential{10.0, 5.0, 3.0, 1.2});
  CHECK(fam.a1 == 0.5);
  CHECK(fam.a2 == 1.0);
  CHECK(fam.a3 == 1.0);
  const auto xi = fam.xi_map(0.0);
  CHECK(xi.x1 == 0.0);
  CHECK(xi.x3 == doctest::Approx(100.0 / 5.76).epsilon(1e-15));
  CHECK(xi.x3 == doctest::Approx(17.3611).epsilon(1e-5));
  const auto xe = fam.xi_map(57.6);
  CHECK(xe.x1 == doctest::Approx(10.0));
  CHECK(xe.x2 == doctest::Approx((57.6 + 100.0 - 60.0) / 5.76));
  CHECK_THROWS_AS(pt::to_nu_family(PtPotential{10.0, -5.0, 3.0, 1.2}), Error);
}

TEST_CASE("energy_closed_form reproduces tabulated cells") {
  CHECK(pt::energy_closed_form(testing::table_potential(1.2), 0) == doctest::Approx(18.02560022).epsilon(1e-9));
  CHECK(pt::energy_closed_form(testing::table_potential(0.8), 1) == doctest::Approx(20.32991862).epsilon(1e-9));
  CHECK(pt::energy_closed_form(testing::table_potential(0.02), 6) == doctest::Approx(16.21076245).epsilon(1e-9));
  CHECK_THROWS_AS(pt::energy_closed_form(testing::table_potential(1.2), -1), Error);
}

TEST_CASE("alpha_zero_limit") {
  CHECK(pt::alpha_zero_limit(PtPotential{10.0, 5.0, 3.0, 1.0}) == doctest::Approx(15.74596669).epsilon(1e-9));
  CHECK(pt::alpha_zero_limit(PtPotential{10.0, 2.5, 2.5, 1.0}) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(pt::alpha_zero_limit(PtPotential{10.0, 0.0, 3.0, 1.0}) == 3.0);
}

TEST_CASE("limit law: deviation shrinks toward alpha = 0") {
  const double limit = pt::alpha_zero_limit(testing::table_potential(1.0));
  for (int n = 0; n <= 6; ++n) {
    double prev = INFINITY;
    for (double alpha : {0.2, 0.02, 0.002}) {
      const double dev = std::abs(pt::energy_closed_form(testing::table_potential(alpha), n) - limit);
      CHECK(dev < prev);
      prev = dev;
    }
  }
  CHECK(std::abs(pt::energy_closed_form(testing::table_potential(0.002), 0) - limit) <= 5e-3);
}

TEST_CASE("energy_via_nu") {
  CHECK(pt::energy_via_nu(testing::table_potential(1.2), 0) == doctest::Approx(18.02560022).epsilon(1e-9));
  CHECK(std::abs(pt::energy_via_nu(testing::table_potential(0.2), 3) - 18.33059518) <= 1e-7);
  SUBCASE("random sweep against the closed form") {
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> um(1.0, 20.0), uv(1e-3, 10.0), ua(0.01, 2.0);
    std::uniform_int_distribution<int> un(0, 6);
    for (int i = 0; i < 50; ++i) {
      const PtPotential p{um(rng), uv(rng), uv(rng), ua(rng)};
      const int n = un(rng);
      const double closed = pt::energy_closed_form(p, n);
      CHECK(std::abs(pt::energy_via_nu(p, n) - closed) <= 1e-9 * std::abs(closed));
      // bound states sit above the well floor
      CHECK(closed > pt::alpha_zero_limit(p));
    }
  }
}

TEST_CASE("radial_wavefunction") {
  const PtPotential p = testing::table_potential(1.2);
  SUBCASE("exponents from the NU factors") {
    const auto wf = pt::radial_wavefunction(p, 0);
    CHECK(2.0 * wf.factors().p1 == doctest::Approx(0.5 * (1.0 + std::sqrt(1.0 + 400.0 / 1.44))).epsilon(1e-14));
    CHECK(2.0 * wf.factors().p1 == doctest::Approx(8.8483).epsilon(1e-4));
  }
  SUBCASE("ground state is nodeless and vanishes at both walls") {
    const auto wf = pt::radial_wavefunction(p, 0);
    const auto values = scan(wf, 2000);
    for (double v : values) CHECK(v >= 0.0);
    CHECK(std::abs(wf(1e-6)) < 1e-40);
    CHECK(std::abs(wf(p.well_width() - 1e-6)) < 1e-30);
  }
  SUBCASE("ODE residual at the closed-form energy, n = 2") {
    const auto wf = pt::radial_wavefunction(p, 2);
    const double width = p.well_width();
    std::vector<double> samples;
    for (int i = 1; i <= 50; ++i) samples.push_back(width * (0.01 + 0.98 * i / 51.0));
    CHECK(oracle::ode_residual(wf, p, pt::energy_closed_form(p, 2), samples) <= 1e-6);
  }
  SUBCASE("domain") {
    const auto wf = pt::radial_wavefunction(p, 1);
    CHECK_THROWS_AS(wf(0.0), Error);
    CHECK_THROWS_AS(wf(p.well_width()), Error);
  }
}

TEST_CASE("normalize") {
  const PtPotential p = testing::table_potential(1.2);
  SUBCASE("unit norm and bookkeeping") {
    for (int n = 0; n <= 4; ++n) {
      const auto raw = pt::radial_wavefunction(p, n);
      const auto state = pt::normalize(p, raw);
      CHECK(state.n == n);
      CHECK(state.eps == 2.0 * p.m * state.energy);
      const auto wf = raw.normalized(state);
      CHECK(pt::overlap(wf, wf) == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(state.norm == doctest::Approx(std::exp(state.log_norm)));
    }
  }
  SUBCASE("orthogonality for m != n <= 5") {
    std::vector<pt::RadialWavefunction> states;
    for (int n = 0; n <= 5; ++n) {
      const auto raw = pt::radial_wavefunction(p, n);
      states.push_back(raw.normalized(pt::normalize(p, raw)));
    }
    for (int a = 0; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) CHECK(std::abs(pt::overlap(states[a], states[b])) <= 1e-6);
    }
  }
  SUBCASE("amplitude of the raw function does not matter") {
    const auto raw = pt::radial_wavefunction(p, 3);
    const auto doubled = raw.scaled(std::log(2.0));
    const auto a = raw.normalized(pt::normalize(p, raw));
    const auto b = doubled.normalized(pt::normalize(p, doubled));
    for (int i = 1; i < 50; ++i) {
      const double r = p.well_width() * i / 50.0;
      CHECK(a(r) == doctest::Approx(b(r)).epsilon(1e-13).scale(1e-12));
    }
  }
  SUBCASE("sharply peaked states at small alpha stay finite") {
    const PtPotential tiny = testing::table_potential(0.002);
    const auto raw = pt::radial_wavefunction(tiny, 2);
    const auto state = pt::normalize(tiny, raw);
    CHECK(std::isfinite(state.log_norm));
    const auto wf = raw.normalized(state);
    CHECK(pt::overlap(wf, wf) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("node counting: R_{n,0} has n sign changes") {
  for (double alpha : {1.2, 0.8, 0.4}) {
    const PtPotential p = testing::table_potential(alpha);
    for (int n = 0; n <= 6; ++n) {
      const auto raw = pt::radial_wavefunction(p, n);
      CHECK(sign_changes(scan(raw.normalized(pt::normalize(p, raw)), 10000)) == n);
    }
  }
}

TEST_CASE("spectrum_table") {
  const std::vector<double> alphas(testing::kTableAlphas.begin(), testing::kTableAlphas.end());
  const auto table = pt::spectrum_table(10.0, 5.0, 3.0, alphas, 6);
  REQUIRE(table.values.size() == 42);
  for (int n = 0; n <= 6; ++n) {
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      CHECK(std::abs(table.at(n, j) - std::stod(testing::kTableEnergies[n][j])) <= 1e-6);
      if (n > 0) CHECK(table.at(n, j) > table.at(n - 1, j));
    }
  }
  const auto serial = pt::spectrum_table_serial(10.0, 5.0, 3.0, alphas, 6);
  CHECK(serial.values == table.values);
  const auto single = pt::spectrum_table(10.0, 5.0, 3.0, {1.2}, 0);
  CHECK(single.values.size() == 1);
  CHECK_THROWS_AS(pt::spectrum_table(10.0, 5.0, 3.0, {}, 2), Error);
  CHECK_THROWS_AS(pt::spectrum_table(10.0, 5.0, 3.0, {1.0}, -1), Error);
}
