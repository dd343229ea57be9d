#include "braident/float_orbit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "braident/errors.hpp"
#include "braident/update_rules.hpp"

namespace braident {

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

ScaledCoords from_exact(const LaminationCoords& lam) {
  ScaledCoords s;
  s.punctures = lam.punctures;
  s.coords.resize(lam.coords.size());

  unsigned max_bits = 0;
  for (const BigInt& entry : lam.coords)
    if (!entry.is_zero()) max_bits = std::max(max_bits, msb(abs(entry)) + 1);

  // Entries wider than the double range are shifted down first; the shift
  // reappears in log_scale. 500 bits leaves full 53-bit mantissas intact.
  const unsigned shift = max_bits > 500 ? max_bits - 500 : 0;
  for (std::size_t i = 0; i < lam.coords.size(); ++i) {
    const BigInt& entry = lam.coords[i];
    if (entry.is_zero()) {
      s.coords[i] = 0.0;
    } else {
      const BigInt magnitude = abs(entry) >> shift;
      const double value = magnitude.convert_to<double>();
      s.coords[i] = entry < 0 ? -value : value;
    }
  }
  s.log_scale = static_cast<double>(shift) * std::numbers::ln2;
  renormalize(s);
  return s;
}

void renormalize(ScaledCoords& s) {
  const double m = max_abs(s.coords);
  if (m == 0.0) return;
  for (double& x : s.coords) x /= m;
  s.log_scale += std::log(m);
}

void apply_word_scaled_inplace(ScaledCoords& s, const BraidWord& word,
                               double renorm_threshold) {
  if (word.strands > s.punctures)
    throw IndexOutOfRange("word on " + std::to_string(word.strands) +
                          " strands cannot act on " +
                          std::to_string(s.punctures) + " punctures");
  double* coords = s.coords.data();
  for (const Letter& l : word.letters) {
    detail::apply_sigma(coords, l.index, l.sign);
    // Untouched entries are below the threshold by induction, so checking
    // the updated block keeps the whole vector in range.
    double block_max = 0.0;
    for (int k = 2 * (l.index - 1); k < 2 * (l.index + 1); ++k)
      block_max = std::max(block_max, std::fabs(coords[k]));
    if (!std::isfinite(block_max))
      throw FloatOverflow("non-finite coordinate; lower the renormalization threshold");
    if (block_max >= renorm_threshold) renormalize(s);
  }
}

ScaledCoords apply_word_scaled(ScaledCoords s, const BraidWord& word,
                               double renorm_threshold) {
  apply_word_scaled_inplace(s, word, renorm_threshold);
  return s;
}

double log_reduced_count(const ScaledCoords& s) {
  const int n = s.punctures;
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += std::fabs(s.coords[2 * i + 1]);
  for (int i = 0; i + 1 < n; ++i)
    total += std::fabs(s.coords[2 * (i + 1)] - s.coords[2 * i]);
  total += std::fabs(s.coords[0]);
  total += std::fabs(s.coords[2 * (n - 1)]);
  if (total == 0.0)
    throw EmptyLamination("the empty lamination has no log intersection count");
  return s.log_scale + std::log(total);
}

}  // namespace braident
