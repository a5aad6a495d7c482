#include "condgraph/exact_linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace condgraph {

KernelBasis kernel_basis(const RationalMatrix& a) {
  RationalMatrix m = a;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Rational inv = 1 / Rational(m(r, c));
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  KernelBasis basis;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x = RationalVector::Zero(cols);
    x(free) = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x(pivot_cols[k]) = -m(k, free);

    // Scale to coprime integers with a positive leading entry.
    BigInt den_lcm = 1;
    for (Eigen::Index i = 0; i < cols; ++i) {
      den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(x(i)));
    }
    BigInt num_gcd = 0;
    for (Eigen::Index i = 0; i < cols; ++i) {
      const Rational scaled = x(i) * den_lcm;
      num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(scaled));
    }
    Rational factor(den_lcm, num_gcd);
    Eigen::Index lead = 0;
    while (x(lead) == 0) ++lead;
    if (x(lead) < 0) factor = -factor;
    for (Eigen::Index i = 0; i < cols; ++i) x(i) *= factor;
    basis.vectors.push_back(std::move(x));
  }
  return basis;
}

std::vector<double> float_spectrum(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace condgraph
