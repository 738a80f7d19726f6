#pragma once

// Exact-rational variable-count bounds for minimally unsatisfiable sets.
// Everything here is arbitrary-precision; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace kdnf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, unsigned exp);
Rational rat_pow(const Rational& base, unsigned exp);

/// A minimally unsatisfiable set of `nformulas` clauses (width 1) spans at
/// most nformulas - 1 variables.
BigInt clause_set_var_bound(std::size_t nformulas);

/// A minimally unsatisfiable k-DNF set of `nformulas` formulas spans at most
/// (k * nformulas)^(k+1) variables.
BigInt set_var_upper_bound(int k, std::size_t nformulas);

/// The min-unsat family at parameters (m, k) is built to exceed
/// (m/4 * (1 - 1/k))^k variables.
Rational family_var_lower_bound(int m, int k);

/// Any CD-XOR formula precisely implied by a k-DNF set of m formulas spans at
/// least (k+1) * (m/(k+2) * (1 - 1/k))^k variables.
Rational xor_var_lower_bound(int m, int k);

/// "p" when integral, "p/q" otherwise.
std::string rational_str(const Rational& r);

} // namespace kdnf
