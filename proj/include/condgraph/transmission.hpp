// transmission.hpp - SSP transmission T(E) for a distinct device (G, l, r):
//
//   T = 4 (ut - sv) b / ((s - v b)^2 + (t + u)^2 b),   b = beta~^2
//
// with s, t, u, v the characteristic polynomials of G, G-l, G-r, G-l-r.
#pragma once

#include "condgraph/graph.hpp"
#include "condgraph/polynomial.hpp"

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace condgraph {

struct DevicePolynomials {
  IntPolynomial s, t, u, v;
  IntPolynomial jsq;  // u*t - s*v
};

/// Throws DomainError when l == r or either vertex is out of range.
DevicePolynomials device_polynomials(const Graph& g, int l, int r);

inline constexpr double kDenominatorFloor = 1e-300;

/// T at energy e, or nullopt when the denominator vanishes. At e == 0 the
/// value is the exact E -> 0 limit: the lowest surviving powers of E in
/// numerator and denominator are compared with beta~^2 taken as an exact
/// rational.
std::optional<double> evaluate_T(const DevicePolynomials& dp, double beta_sq, double e);

/// Limit of T as E -> 0; nullopt if it diverges.
std::optional<double> transmission_at_fermi(const DevicePolynomials& dp, double beta_sq);

struct TransmissionCurve {
  double beta_sq = 1.0;
  std::vector<std::pair<double, double>> samples;  // (E, T), ascending E
  std::vector<double> excluded;
};

/// `steps` equally spaced energies from e_min to e_max inclusive.
TransmissionCurve sweep(const DevicePolynomials& dp, double beta_sq, double e_min, double e_max,
                        int steps);

/// `E,T` header, one sample per line, then `# excluded: ...` when any
/// energies were dropped.
void write_csv(std::ostream& out, const TransmissionCurve& curve);

}  // namespace condgraph
