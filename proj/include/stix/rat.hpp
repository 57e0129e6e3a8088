#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "stix/errors.hpp"

namespace stix {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational. cpp_rational keeps values in lowest terms with a
// positive denominator, so equality is plain value equality everywhere.
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);

/// Largest integer <= r.
Int floor_int(const Rat& r);

/// Nearest integer to r; exact halves round up.
Int round_nearest(const Rat& r);

/// A rational upper bound on sqrt(r). Requires r >= 0.
Rat sqrt_upper(const Rat& r);

/// Parses "p/q" or "p". Throws DomainError on malformed input or zero denominator.
Rat rat_parse(const std::string& s);

/// Canonical form with positive denominator, "/1" omitted: "-1/3", "0", "5".
std::string rat_str(const Rat& r);

/// Decimal approximation, correctly rounded to the given number of significant
/// digits, trailing zeros trimmed. Display only; never feed this back into math.
std::string rat_decimal(const Rat& r, int significant_digits = 20);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_neg(const RatVec& a);
RatVec vec_scale(const Rat& s, const RatVec& a);
Rat vec_dot(const RatVec& a, const RatVec& b);
Rat vec_sum(const RatVec& a);
Rat norm_sq(const RatVec& a);
bool is_sum_zero(const RatVec& a);

/// "(a, b, c)" with canonical rational entries. For logs and error messages.
std::string vec_str(const RatVec& a);

}  // namespace stix
