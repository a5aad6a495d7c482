// polynomial.hpp - dense univariate polynomials with integer coefficients.
#pragma once

#include "condgraph/errors.hpp"
#include "condgraph/scalar.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace condgraph {

/// Coefficients in ascending degree order; never carries a zero leading
/// coefficient, so the zero polynomial has no coefficients at all.
template <class Int>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Int> coefficients) : c_(coefficients) { trim(); }

  static Polynomial monomial(Int coefficient, int degree) {
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1, Int(0));
    c.back() = std::move(coefficient);
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coefficients() const { return c_; }

  Int operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Int(0);
  }
  const Int& leading() const { return c_.back(); }

  double evaluate(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

using IntPolynomial = Polynomial<BigInt>;

/// Multiplicity of the root 0, i.e. the index of the lowest nonzero
/// coefficient. Throws DomainError for the zero polynomial.
template <class Int>
int zero_root_multiplicity(const Polynomial<Int>& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no finite zero-root multiplicity");
  const auto& c = p.coefficients();
  return static_cast<int>(std::find_if(c.begin(), c.end(), [](const Int& x) { return x != 0; }) -
                          c.begin());
}

/// The integer polynomial q with q*q = p and positive leading coefficient,
/// if one exists.
std::optional<IntPolynomial> exact_sqrt(const IntPolynomial& p);

/// Human-readable form in the variable E, e.g. "E^3 - 3E - 2".
std::string to_string(const IntPolynomial& p, char variable = 'E');

}  // namespace condgraph
