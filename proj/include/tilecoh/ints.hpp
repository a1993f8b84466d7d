#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace tilecoh {

// All arithmetic in the correctness path is exact. cpp_int has no width limit;
// cpp_rational keeps offsets in lowest terms automatically.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_int division truncates toward zero; lattice reduction needs floor semantics.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd_int(a, b);
  Int l = (a / g) * b;
  return l < 0 ? -l : l;
}

// g = a*s + b*t
inline Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int old_r = a, r = b;
  Int old_s = 1, ss = 0;
  Int old_t = 0, tt = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * ss; old_s = ss; ss = tmp;
    tmp = old_t - q * tt; old_t = tt; tt = tmp;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace tilecoh
