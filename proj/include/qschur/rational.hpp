#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace qschur {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// 2^e as an exact rational; e may be negative.
inline Rational pow2(int e) {
  Integer num = 1;
  num <<= (e >= 0 ? e : -e);
  return e >= 0 ? Rational(num) : Rational(1, num);
}

}  // namespace qschur
