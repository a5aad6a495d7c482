// scalar.hpp - exact scalar types and the dense matrix aliases built on them.
#pragma once

#include <boost/multiprecision/gmp.hpp>
// Must follow the number types: provides Eigen::NumTraits for them.
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <type_traits>

namespace condgraph {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Integer scalars the exact routines run on: machine words (with 128-bit
/// intermediates) or arbitrary precision.
template <class T>
concept ExactInteger = std::same_as<T, std::int64_t> || std::same_as<T, BigInt>;

template <class T>
concept IntegerEntry = std::integral<T> || std::same_as<T, BigInt>;

}  // namespace condgraph
