#include "braident/dynnikov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "braident/errors.hpp"
#include "braident/update_rules.hpp"

namespace braident {

LaminationCoords l0(int n) {
  if (n < 2)
    throw InvalidPunctureCount("a lamination needs at least 2 punctures, got " +
                               std::to_string(n));
  LaminationCoords lam;
  lam.punctures = n;
  lam.coords.resize(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) lam.coords[2 * i + 1] = 1;
  return lam;
}

void apply_generator_inplace(LaminationCoords& lam, int i, int sign) {
  if (i < 1 || i >= lam.punctures)
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " out of range for " + std::to_string(lam.punctures) +
                          " punctures");
  detail::apply_sigma(lam.coords.data(), i, sign);
}

LaminationCoords apply_generator(LaminationCoords lam, int i, int sign) {
  apply_generator_inplace(lam, i, sign);
  return lam;
}

void apply_word_inplace(LaminationCoords& lam, const BraidWord& word) {
  if (word.strands > lam.punctures)
    throw IndexOutOfRange("word on " + std::to_string(word.strands) +
                          " strands cannot act on " +
                          std::to_string(lam.punctures) + " punctures");
  for (const Letter& l : word.letters)
    detail::apply_sigma(lam.coords.data(), l.index, l.sign);
}

LaminationCoords apply_word(LaminationCoords lam, const BraidWord& word) {
  apply_word_inplace(lam, word);
  return lam;
}

BigInt reduced_intersection_count(const LaminationCoords& lam) {
  const int n = lam.punctures;
  BigInt total = 0;
  for (int i = 0; i < n; ++i) total += abs(lam.coords[2 * i + 1]);
  for (int i = 0; i + 1 < n; ++i)
    total += abs(lam.coords[2 * (i + 1)] - lam.coords[2 * i]);
  total += abs(lam.coords[0]);
  total += abs(lam.coords[2 * (n - 1)]);
  return total;
}

LaminationCoords scale(LaminationCoords lam, const BigInt& lambda) {
  if (lambda < 1) throw InvalidScale("scale factor must be >= 1");
  for (BigInt& entry : lam.coords) entry *= lambda;
  return lam;
}

double log_of_bigint(const BigInt& value) {
  // Beyond double range, peel off a power of two and add it back in log space.
  const unsigned bits = msb(value);  // value > 0
  if (bits <= 900) return std::log(value.convert_to<double>());
  const unsigned shift = bits - 64;
  const BigInt mantissa = value >> shift;
  return std::log(mantissa.convert_to<double>()) +
         static_cast<double>(shift) * std::numbers::ln2;
}

std::size_t max_decimal_digits(const LaminationCoords& lam) {
  unsigned max_bits = 0;
  for (const BigInt& entry : lam.coords)
    if (!entry.is_zero()) max_bits = std::max(max_bits, msb(abs(entry)) + 1);
  return static_cast<std::size_t>(max_bits * 0.30103) + 1;
}

}  // namespace braident
