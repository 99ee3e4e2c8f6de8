#ifndef UCLIDMINI_BIGINT_H
#define UCLIDMINI_BIGINT_H

#include <boost/multiprecision/cpp_int.hpp>

namespace uclidmini {

// Unbounded integers and exact rationals. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt bvMask(int width)
{
  return (BigInt(1) << width) - 1;
}

/** Truncate to the given bitvector width (two's-complement wraparound). */
inline BigInt bvTrunc(const BigInt& v, int width)
{
  BigInt m = bvMask(width);
  BigInt r = v & m;
  if (r < 0) r += (BigInt(1) << width);
  return r & m;
}

}  // namespace uclidmini

#endif
