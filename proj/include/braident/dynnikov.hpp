#ifndef BRAIDENT_DYNNIKOV_HPP
#define BRAIDENT_DYNNIKOV_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "braident/braid_word.hpp"

namespace braident {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Dynnikov coordinates (a_1, b_1, ..., a_n, b_n) of an integral
/// lamination on the disc with n movable punctures. Entries are exact
/// integers of unbounded magnitude; the all-zero vector is the empty
/// lamination and is fixed by every generator.
struct LaminationCoords {
  int punctures = 2;
  std::vector<BigInt> coords;  // always exactly 2 * punctures entries

  friend bool operator==(const LaminationCoords&, const LaminationCoords&) = default;
};

/// The reference lamination with coordinates (0,1,0,1,...,0,1).
/// Its reduced intersection count with the real axis is exactly n.
/// Throws InvalidPunctureCount when n < 2.
LaminationCoords l0(int n);

/// Applies sigma_i (sign=+1) or sigma_i^{-1} (sign=-1) in place.
/// Only (a_i, b_i, a_{i+1}, b_{i+1}) change. Requires 1 <= i <= n-1.
void apply_generator_inplace(LaminationCoords& lam, int i, int sign);

LaminationCoords apply_generator(LaminationCoords lam, int i, int sign);

/// Left-to-right composition: the first letter of the word acts first.
/// Requires word.strands <= lam.punctures.
void apply_word_inplace(LaminationCoords& lam, const BraidWord& word);

LaminationCoords apply_word(LaminationCoords lam, const BraidWord& word);

/// Minimum crossings of the lamination with the real axis, up to the
/// constant boundary offset that a braid action never changes:
///   sum |b_i| + sum |a_{i+1} - a_i| + |a_1| + |a_n|.
/// Exact, nonnegative, and absolutely homogeneous of degree one.
BigInt reduced_intersection_count(const LaminationCoords& lam);

/// lambda parallel copies of every curve: entrywise multiplication.
/// Throws InvalidScale when lambda < 1.
LaminationCoords scale(LaminationCoords lam, const BigInt& lambda);

/// Natural log of a positive big integer, accurate to double rounding
/// regardless of magnitude.
double log_of_bigint(const BigInt& value);

/// Decimal digit count of the largest |entry|, the quantity guarded by
/// the exact orbit's resource cap.
std::size_t max_decimal_digits(const LaminationCoords& lam);

}  // namespace braident

#endif
