// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nashcone {

// All arithmetic in this library is exact. The certificates decided here are
// strict inequalities on integers; a single rounding error flips a verdict,
// so floating point is banned from every computational path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline int sign(const Int& v) { return v.sign(); }

}  // namespace nashcone
