#include "condgraph/transmission.hpp"

#include "condgraph/errors.hpp"
#include "condgraph/exact_linalg.hpp"

#include <cstdio>
#include <string>

namespace condgraph {

namespace {

using RationalPolynomial = Polynomial<Rational>;

IntPolynomial phi(const Graph& g) {
  if (g.order() == 0) return IntPolynomial{BigInt(1)};
  return char_poly(adjacency_matrix(g));
}

RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const BigInt& x : p.coefficients()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

}  // namespace

DevicePolynomials device_polynomials(const Graph& g, int l, int r) {
  if (l == r) throw DomainError("transmission needs two distinct lead vertices");
  if (l < 0 || r < 0 || l >= g.order() || r >= g.order()) throw DomainError("lead vertex out of range");
  DevicePolynomials dp;
  dp.s = phi(g);
  dp.t = phi(g.without(bit(l)));
  dp.u = phi(g.without(bit(r)));
  dp.v = phi(g.without(bit(l) | bit(r)));
  dp.jsq = dp.u * dp.t - dp.s * dp.v;
  return dp;
}

std::optional<double> transmission_at_fermi(const DevicePolynomials& dp, double beta_sq) {
  const RationalPolynomial b{Rational(beta_sq)};
  const RationalPolynomial num = RationalPolynomial{Rational(4)} * b * to_rational(dp.jsq);
  const RationalPolynomial lead_sum = to_rational(dp.t) + to_rational(dp.u);
  const RationalPolynomial diff = to_rational(dp.s) - to_rational(dp.v) * b;
  const RationalPolynomial den = diff * diff + lead_sum * lead_sum * b;
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return 0.0;
  const int mn = zero_root_multiplicity(num);
  const int md = zero_root_multiplicity(den);
  if (mn > md) return 0.0;
  if (mn < md) return std::nullopt;
  return static_cast<double>(Rational(num[mn] / den[md]));
}

std::optional<double> evaluate_T(const DevicePolynomials& dp, double beta_sq, double e) {
  if (e == 0.0) return transmission_at_fermi(dp, beta_sq);
  const double s = dp.s.evaluate(e);
  const double t = dp.t.evaluate(e);
  const double u = dp.u.evaluate(e);
  const double v = dp.v.evaluate(e);
  const double diff = s - v * beta_sq;
  const double den = diff * diff + (t + u) * (t + u) * beta_sq;
  if (den < kDenominatorFloor) return std::nullopt;
  return 4.0 * dp.jsq.evaluate(e) * beta_sq / den;
}

TransmissionCurve sweep(const DevicePolynomials& dp, double beta_sq, double e_min, double e_max,
                        int steps) {
  if (!(beta_sq > 0.0)) throw DomainError("beta~^2 must be positive");
  if (!(e_min < e_max) || steps < 2) throw DomainError("sweep needs e_min < e_max and at least two steps");
  TransmissionCurve curve;
  curve.beta_sq = beta_sq;
  for (int i = 0; i < steps; ++i) {
    double e = e_min + (e_max - e_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    if (i == steps - 1) e = e_max;
    if (auto t = evaluate_T(dp, beta_sq, e)) {
      curve.samples.emplace_back(e, *t);
    } else {
      curve.excluded.push_back(e);
    }
  }
  return curve;
}

void write_csv(std::ostream& out, const TransmissionCurve& curve) {
  out << "E,T\n";
  for (auto [e, t] : curve.samples) out << number(e) << ',' << number(t) << '\n';
  if (!curve.excluded.empty()) {
    out << "# excluded:";
    for (std::size_t i = 0; i < curve.excluded.size(); ++i) {
      out << (i == 0 ? " " : ",") << number(curve.excluded[i]);
    }
    out << '\n';
  }
}

}  // namespace condgraph
