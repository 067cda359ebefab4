#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Integer comparisons. Boost 1.74's own templates recurse under C++20 operator rewriting.
namespace boost {

#define SOFICLAB_RATIONAL_INT_EQ(T)                                                                          \
  inline constexpr bool operator==(const rational<std::int64_t>& a, T b) {                                   \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);                           \
  }                                                                                                          \
  inline constexpr bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }                 \
  inline constexpr bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == b); }              \
  inline constexpr bool operator!=(T b, const rational<std::int64_t>& a) { return !(a == b); }

SOFICLAB_RATIONAL_INT_EQ(int)
SOFICLAB_RATIONAL_INT_EQ(long)
SOFICLAB_RATIONAL_INT_EQ(long long)
SOFICLAB_RATIONAL_INT_EQ(unsigned)
SOFICLAB_RATIONAL_INT_EQ(unsigned long)
SOFICLAB_RATIONAL_INT_EQ(unsigned long long)

#undef SOFICLAB_RATIONAL_INT_EQ

}  // namespace boost

namespace soficlab {

// Exact distances and defects. Hamming distances have denominator = degree,
// so 64-bit numerators and denominators never overflow in practice.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

}  // namespace soficlab
