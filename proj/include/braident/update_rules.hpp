#ifndef BRAIDENT_UPDATE_RULES_HPP
#define BRAIDENT_UPDATE_RULES_HPP

#include <cstddef>

namespace braident::detail {

// Piecewise-linear action of sigma_i^{+-1} on a coordinate vector laid out
// as (a_1, b_1, ..., a_n, b_n). Only the block (a_i, b_i, a_{i+1}, b_{i+1})
// changes. The update is max/min-plus arithmetic; there is no division, so
// integer inputs stay integral, and it is positively homogeneous of degree
// one, which is what lets the float engine renormalize freely.
//
// Works for any signed value type with +, -, comparison and T(0):
// exact big integers and doubles share this one definition.

template <class T>
inline T pos_part(const T& x) {
  return x > T(0) ? x : T(0);
}

template <class T>
inline T neg_part(const T& x) {
  return x < T(0) ? x : T(0);
}

// coords has 2n entries; requires 1 <= i <= n-1 (checked by callers).
template <class T>
inline void apply_sigma(T* coords, int i, int sign) {
  T& a1 = coords[2 * (i - 1)];
  T& b1 = coords[2 * (i - 1) + 1];
  T& a2 = coords[2 * i];
  T& b2 = coords[2 * i + 1];

  if (sign > 0) {
    const T c = a1 - neg_part(b1) - a2 + pos_part(b2);
    const T na1 = a1 + pos_part(b1) + pos_part(pos_part(b2) - c);
    const T nb1 = b2 - pos_part(c);
    const T na2 = a2 + neg_part(b2) + neg_part(neg_part(b1) + c);
    const T nb2 = b1 + pos_part(c);
    a1 = na1;
    b1 = nb1;
    a2 = na2;
    b2 = nb2;
  } else {
    const T d = a1 + neg_part(b1) - a2 - pos_part(b2);
    const T na1 = a1 - pos_part(b1) - pos_part(pos_part(b2) + d);
    const T nb1 = b2 + neg_part(d);
    const T na2 = a2 - neg_part(b2) - neg_part(neg_part(b1) - d);
    const T nb2 = b1 - neg_part(d);
    a1 = na1;
    b1 = nb1;
    a2 = na2;
    b2 = nb2;
  }
}

}  // namespace braident::detail

#endif
