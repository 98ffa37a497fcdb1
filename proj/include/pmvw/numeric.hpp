#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pmvw {

// Exact arithmetic everywhere; no floating point enters any result.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

/// Renders a rational as "p" or "p/q" (q > 1), never as a decimal.
std::string format_rat(const Rat& r);

std::string format_int(const Int& n);

/// Parses "p" or "p/q" with optional sign; throws ParseError on junk.
Rat parse_rat(std::string_view text);

Int parse_int(std::string_view text);

}  // namespace pmvw
