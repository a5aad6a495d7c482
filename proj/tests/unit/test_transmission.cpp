#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "condgraph/conduction.hpp"
#include "condgraph/enumerate.hpp"
#include "condgraph/errors.hpp"
#include "condgraph/transmission.hpp"

#include <sstream>

using namespace condgraph;

TEST_CASE("device polynomials of K2") {
  const DevicePolynomials dp = device_polynomials(complete_graph(2), 0, 1);
  CHECK(dp.s == IntPolynomial{-1, 0, 1});
  CHECK(dp.t == IntPolynomial{0, 1});
  CHECK(dp.u == IntPolynomial{0, 1});
  CHECK(dp.v == IntPolynomial{1});
  CHECK(dp.jsq == IntPolynomial{1});
  CHECK_THROWS_AS(device_polynomials(complete_graph(2), 1, 1), DomainError);
  CHECK_THROWS_AS(device_polynomials(complete_graph(2), 0, 2), DomainError);
}

TEST_CASE("transmission values") {
  const DevicePolynomials k2 = device_polynomials(complete_graph(2), 0, 1);
  CHECK(*evaluate_T(k2, 1.0, 0.0) == doctest::Approx(1.0));
  // Exact values from the sympy oracle.
  const DevicePolynomials p4 = device_polynomials(path_graph(4), 0, 3);
  CHECK(std::abs(*evaluate_T(p4, 1.0, 0.5) - 1024.0 / 1073.0) < 1e-12);
  const DevicePolynomials p4n = device_polynomials(path_graph(4), 0, 1);
  CHECK(std::abs(*evaluate_T(p4n, 1.0, 1.0)) < 1e-12);
  const DevicePolynomials c6 = device_polynomials(cycle_graph(6), 0, 3);
  CHECK(std::abs(*evaluate_T(c6, 2.0, 0.5) - 8192.0 / 8633.0) < 1e-12);
}

TEST_CASE("Fermi-level limit at singular devices") {
  // P3 end to end: nullity one, both ends core, conducts.
  const DevicePolynomials p3 = device_polynomials(path_graph(3), 0, 2);
  const auto t0 = transmission_at_fermi(p3, 1.0);
  REQUIRE(t0.has_value());
  CHECK(*t0 > 0.0);
  CHECK(*t0 <= 1.0);
  // Middle to end of P3 insulates.
  CHECK(*transmission_at_fermi(device_polynomials(path_graph(3), 0, 1), 1.0) == 0.0);
  // Continuity: T(E) approaches the exact limit.
  CHECK(std::abs(*evaluate_T(p3, 1.0, 1e-6) - *t0) < 1e-6);
}

TEST_CASE("T stays in [0, 1] and matches the verdicts") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const ConductionGraph gc = conduction_graph(g);
      for (int l = 0; l < n; ++l) {
        for (int r = l + 1; r < n; ++r) {
          const DevicePolynomials dp = device_polynomials(g, l, r);
          const TransmissionCurve c = sweep(dp, 1.0, -3.0, 3.0, 61);
          for (auto [e, t] : c.samples) {
            REQUIRE(t >= -1e-12);
            REQUIRE(t <= 1.0 + 1e-9);
          }
          const auto t0 = transmission_at_fermi(dp, 1.0);
          REQUIRE(t0.has_value());
          REQUIRE((*t0 != 0.0) == gc.verdict(l, r).conducts);
        }
      }
    }
  }
}

TEST_CASE("sweeps") {
  const DevicePolynomials k2 = device_polynomials(complete_graph(2), 0, 1);
  const TransmissionCurve c = sweep(k2, 1.0, -2.0, 2.0, 5);
  REQUIRE(c.samples.size() == 5);
  CHECK(c.samples[2].first == 0.0);
  CHECK(c.samples[2].second == doctest::Approx(1.0));
  const TransmissionCurve ends = sweep(k2, 1.0, -1.0, 1.0, 2);
  REQUIRE(ends.samples.size() == 2);
  CHECK(ends.samples[0].first == -1.0);
  CHECK(ends.samples[1].first == 1.0);
  CHECK_THROWS_AS(sweep(k2, 1.0, 1.0, -1.0, 5), DomainError);
  CHECK_THROWS_AS(sweep(k2, 1.0, -1.0, 1.0, 1), DomainError);

  const TransmissionCurve p4 = sweep(device_polynomials(path_graph(4), 0, 3), 1.0, -2.0, 2.0, 41);
  for (std::size_t i = 0; i < p4.samples.size(); ++i)
    CHECK(std::abs(p4.samples[i].second - p4.samples[p4.samples.size() - 1 - i].second) < 1e-12);

  std::ostringstream out;
  write_csv(out, c);
  CHECK(out.str().rfind("E,T\n", 0) == 0);
  CHECK(out.str().find("0,1\n") != std::string::npos);
}
