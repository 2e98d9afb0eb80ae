#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kassembly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& n) { return n.str(); }

// Canonical "p" or "p/q" with q > 1 and gcd(p, q) = 1.
inline std::string to_string(const Rat& r) { return r.str(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

} // namespace kassembly
