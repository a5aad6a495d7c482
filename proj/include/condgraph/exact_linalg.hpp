// exact_linalg.hpp - exact linear algebra on integer matrices.
//
// Everything here is fraction-free Gaussian elimination (Bareiss) over the
// integers. Each routine is templated on the working integer type; the
// dispatching wrappers pick std::int64_t whenever Hadamard's bound proves that
// every minor the elimination can produce fits in 61 bits (cross products are
// then formed in __int128), and fall back to GMP integers otherwise.
#pragma once

#include "condgraph/errors.hpp"
#include "condgraph/polynomial.hpp"
#include "condgraph/scalar.hpp"

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace condgraph {

/// Exact basis of the null space, one integer-valued rational vector per
/// dimension, each scaled to coprime entries with a positive first nonzero.
struct KernelBasis {
  std::vector<RationalVector> vectors;
  int dimension() const { return static_cast<int>(vectors.size()); }
};

/// inverse = numerator / denominator, with denominator = +-det.
template <ExactInteger Int>
struct ScaledInverse {
  Matrix<Int> numerator;
  Int denominator;
};

namespace detail {

inline std::int64_t cross(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                          std::int64_t divisor) {
  const __int128 r = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
  return static_cast<std::int64_t>(r / divisor);
}

inline BigInt cross(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                    const BigInt& divisor) {
  BigInt r = a * b - c * d;
  return r / divisor;
}

template <class Int>
struct Wide {
  using type = BigInt;
};
template <>
struct Wide<std::int64_t> {
  using type = __int128;
};

template <class W>
bool narrow_ok(const W& x) {
  if constexpr (std::is_same_v<W, __int128>) {
    constexpr __int128 kLimit = static_cast<__int128>(1) << 55;
    return x < kLimit && x > -kLimit;
  } else {
    return true;
  }
}

template <class Scalar>
double to_double(const Scalar& x) {
  return static_cast<double>(x);
}

}  // namespace detail

/// log2 of Hadamard's bound on every minor of [A | extra*I] (rows of norm
/// below one count as one).
template <class Derived>
double log2_hadamard_bound(const Eigen::MatrixBase<Derived>& a, bool with_identity = false) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double sq = with_identity ? 1.0 : 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double x = detail::to_double(a(i, j));
      sq += x * x;
    }
    total += 0.5 * std::log2(std::max(sq, 1.0));
  }
  return total;
}

/// True when machine-word elimination is exact for this matrix.
template <class Derived>
bool fits_machine_word(const Eigen::MatrixBase<Derived>& a, bool with_identity = false) {
  return log2_hadamard_bound(a, with_identity) < 61.0;
}

template <ExactInteger Int>
int bareiss_rank(Matrix<Int> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Int prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = detail::cross(m(r, c), m(i, j), m(i, c), m(r, j), prev);
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

template <ExactInteger Int>
Int bareiss_determinant(Matrix<Int> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return Int(1);
  Int prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Int(0);
    if (p != k) {
      m.row(p).swap(m.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = detail::cross(m(k, k), m(i, j), m(i, k), m(k, j), prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return negate ? Int(-m(n - 1, n - 1)) : Int(m(n - 1, n - 1));
}

/// Fraction-free Gauss-Jordan on [A | I]. nullopt when A is singular.
template <ExactInteger Int>
std::optional<ScaledInverse<Int>> fraction_free_inverse(const Matrix<Int>& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DomainError("inverse of a non-square matrix");
  Matrix<Int> m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) m(i, n + i) = Int(1);
  Int prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) m.row(p).swap(m.row(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m(i, j) = detail::cross(m(k, k), m(i, j), m(i, k), m(k, j), prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return ScaledInverse<Int>{m.rightCols(n), prev};
}

/// Coefficients c[0..n] of det(E*I - A) by the Faddeev-LeVerrier recurrence
/// M_k = A M_{k-1} + c[n-k+1] I, c[n-k] = -tr(A M_k)/k. For std::int64_t it
/// gives up (nullopt) once an intermediate leaves the 55-bit range.
template <ExactInteger Int>
std::optional<std::vector<Int>> faddeev_leverrier(const Matrix<Int>& a) {
  using W = typename detail::Wide<Int>::type;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
  std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
  c[n] = Int(1);
  Matrix<Int> m = Matrix<Int>::Zero(n, n);
  Matrix<Int> next(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        W acc = (i == j) ? W(c[n - k + 1]) : W(0);
        for (Eigen::Index l = 0; l < n; ++l) {
          if (a(i, l) != 0) acc += W(a(i, l)) * W(m(l, j));
        }
        if (!detail::narrow_ok(acc)) return std::nullopt;
        next(i, j) = static_cast<Int>(acc);
      }
    }
    m.swap(next);
    W trace = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index l = 0; l < n; ++l) {
        if (a(i, l) != 0) trace += W(a(i, l)) * W(m(l, i));
      }
    }
    const W coeff = -trace / W(k);
    if (!detail::narrow_ok(coeff)) return std::nullopt;
    c[n - k] = static_cast<Int>(coeff);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Dispatching entry points. Derived is any Eigen expression with integer
// entries (int, std::int64_t or BigInt).

template <class Derived>
int rank(const Eigen::MatrixBase<Derived>& a) {
  static_assert(IntegerEntry<typename Derived::Scalar>, "exact routines need integer entries");
  if (fits_machine_word(a)) return bareiss_rank<std::int64_t>(a.template cast<std::int64_t>());
  return bareiss_rank<BigInt>(a.template cast<BigInt>());
}

/// Dimension of the kernel of a square matrix; 0 for the empty matrix.
template <class Derived>
int nullity(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) throw DomainError("nullity of a non-square matrix");
  return static_cast<int>(a.cols()) - rank(a);
}

template <class Derived>
BigInt determinant(const Eigen::MatrixBase<Derived>& a) {
  static_assert(IntegerEntry<typename Derived::Scalar>, "exact routines need integer entries");
  if (fits_machine_word(a)) {
    return BigInt(bareiss_determinant<std::int64_t>(a.template cast<std::int64_t>()));
  }
  return bareiss_determinant<BigInt>(a.template cast<BigInt>());
}

/// Exact inverse. Throws SingularMatrixError carrying the nullity.
template <class Derived>
RationalMatrix inverse(const Eigen::MatrixBase<Derived>& a) {
  static_assert(IntegerEntry<typename Derived::Scalar>, "exact routines need integer entries");
  auto to_rational = [](const auto& scaled) {
    const Eigen::Index n = scaled.numerator.rows();
    RationalMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        out(i, j) = Rational(BigInt(scaled.numerator(i, j)), BigInt(scaled.denominator));
      }
    }
    return out;
  };
  if (fits_machine_word(a, true)) {
    if (auto s = fraction_free_inverse<std::int64_t>(a.template cast<std::int64_t>())) {
      return to_rational(*s);
    }
  } else if (auto s = fraction_free_inverse<BigInt>(a.template cast<BigInt>())) {
    return to_rational(*s);
  }
  throw SingularMatrixError(nullity(a));
}

/// Transpose of the cofactor matrix, as integers. Nonsingular input goes
/// through the scaled inverse (adj = det * A^-1); singular input is expanded
/// cofactor by cofactor.
template <class Derived>
Matrix<BigInt> integer_adjugate(const Eigen::MatrixBase<Derived>& a) {
  static_assert(IntegerEntry<typename Derived::Scalar>, "exact routines need integer entries");
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DomainError("adjugate of a non-square matrix");
  Matrix<BigInt> adj(n, n);
  if (n == 0) return adj;
  const Matrix<BigInt> big = a.template cast<BigInt>();
  const BigInt det = determinant(big);
  if (det != 0) {
    auto s = fraction_free_inverse<BigInt>(big);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) adj(i, j) = s->numerator(i, j) * det / s->denominator;
    }
    return adj;
  }
  Matrix<BigInt> minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // Cofactor (i, j) lands at adj(j, i).
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = big(r, c);
        }
        ++mr;
      }
      BigInt cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : BigInt(-cof);
    }
  }
  return adj;
}

template <class Derived>
RationalMatrix adjugate(const Eigen::MatrixBase<Derived>& a) {
  return integer_adjugate(a).template cast<Rational>();
}

/// det(E*I - A), monic of degree n.
template <class Derived>
IntPolynomial char_poly(const Eigen::MatrixBase<Derived>& a) {
  static_assert(IntegerEntry<typename Derived::Scalar>, "exact routines need integer entries");
  bool small = true;
  for (Eigen::Index i = 0; i < a.rows() && small; ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double x = detail::to_double(a(i, j));
      if (std::abs(x) > 1048576.0) {
        small = false;
        break;
      }
    }
  }
  if (small) {
    if (auto c = faddeev_leverrier<std::int64_t>(a.template cast<std::int64_t>())) {
      std::vector<BigInt> big(c->begin(), c->end());
      return IntPolynomial(std::move(big));
    }
  }
  return IntPolynomial(*faddeev_leverrier<BigInt>(a.template cast<BigInt>()));
}

KernelBasis kernel_basis(const RationalMatrix& a);

template <class Derived>
KernelBasis kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  return kernel_basis(RationalMatrix(a.template cast<Rational>()));
}

/// Eigenvalues of a symmetric matrix in descending order (double precision,
/// accurate to about 1e-9 for the orders used here). Only for cross-checks;
/// no conduction decision reads these.
std::vector<double> float_spectrum(const Eigen::MatrixXd& a);

template <class Derived>
std::vector<double> float_spectrum(const Eigen::MatrixBase<Derived>& a) {
  Eigen::MatrixXd d(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) d(i, j) = detail::to_double(a(i, j));
  }
  return float_spectrum(d);
}

}  // namespace condgraph
