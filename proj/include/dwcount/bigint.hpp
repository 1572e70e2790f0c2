#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dwcount {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt big_pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Nonnegative remainder of x modulo n (n > 0).
inline std::int64_t mod_floor(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace dwcount
