#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace autoseq {

/// Arbitrary-precision natural numbers and exact rationals used throughout.
using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Digit = std::uint32_t;
using Residue = std::uint32_t;

/// k^e as a Natural.
Natural power(unsigned base, std::size_t exponent);

}  // namespace autoseq
