#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace dofic {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

/// "p/q" in lowest terms; plain "p" when the denominator is 1.
std::string frac_str(const Rat& r);

/// Exact decimal expansion with at most `digits` fractional digits,
/// trailing zeros (and a bare trailing point) trimmed.
std::string decimal_str(const Rat& r, int digits = 12);

/// Accepts "p" or "p/q".
Rat parse_rat(const std::string& s);

}  // namespace dofic
