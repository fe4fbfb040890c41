#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace transient {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace transient
