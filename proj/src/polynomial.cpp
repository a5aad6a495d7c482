#include "condgraph/polynomial.hpp"

#include <sstream>

namespace condgraph {

std::optional<IntPolynomial> exact_sqrt(const IntPolynomial& p) {
  if (p.is_zero()) return IntPolynomial{};
  if (p.degree() % 2 != 0 || p.leading() < 0) return std::nullopt;
  const int d = p.degree() / 2;
  BigInt top = boost::multiprecision::sqrt(p.leading());
  if (top * top != p.leading()) return std::nullopt;

  // Peel coefficients from the top: p[d+i] = 2 q[d] q[i] + sum of products
  // of already known coefficients.
  std::vector<BigInt> q(static_cast<std::size_t>(d) + 1, BigInt(0));
  q[d] = top;
  const BigInt twice_top = 2 * top;
  for (int i = d - 1; i >= 0; --i) {
    BigInt r = p[d + i];
    for (int j = i + 1; j <= d - 1; ++j) r -= q[j] * q[d + i - j];
    if (r % twice_top != 0) return std::nullopt;
    q[i] = r / twice_top;
  }
  IntPolynomial root(std::move(q));
  if (root * root != p) return std::nullopt;
  return root;
}

std::string to_string(const IntPolynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || i == 0) out << c;
    if (i >= 1) out << variable;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

}  // namespace condgraph
