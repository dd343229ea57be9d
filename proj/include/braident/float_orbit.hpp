#ifndef BRAIDENT_FLOAT_ORBIT_HPP
#define BRAIDENT_FLOAT_ORBIT_HPP

#include <vector>

#include "braident/braid_word.hpp"
#include "braident/dynnikov.hpp"

namespace braident {

/// Unit-normalized floating-point coordinates plus an accumulated natural-log
/// scale. The represented object is e^{log_scale} * coords; positive
/// homogeneity of the generator action makes the rescaling transparent.
struct ScaledCoords {
  int punctures = 2;
  std::vector<double> coords;
  double log_scale = 0.0;
};

/// Renormalization threshold: entries are divided by max|entry| whenever the
/// max reaches this. 2^512 keeps renormalizations rare while staying far from
/// the top of the double range.
inline constexpr double kDefaultRenormThreshold = 0x1p512;

/// Exact coordinates converted to floating point and normalized so that
/// max|entry| is 1 (zero vector exempt); magnitude moves into log_scale.
/// Handles exact entries far beyond the double range.
ScaledCoords from_exact(const LaminationCoords& lam);

/// Divides by max|entry| and accumulates its log. No-op on the zero vector.
void renormalize(ScaledCoords& s);

/// Same update formulas as the exact engine, evaluated in doubles;
/// renormalizes whenever an updated entry reaches the threshold.
/// Throws FloatOverflow if an intermediate becomes non-finite.
void apply_word_scaled_inplace(ScaledCoords& s, const BraidWord& word,
                               double renorm_threshold = kDefaultRenormThreshold);

ScaledCoords apply_word_scaled(ScaledCoords s, const BraidWord& word,
                               double renorm_threshold = kDefaultRenormThreshold);

/// log_scale + ln(reduced intersection count of coords): the natural log of
/// the represented count. Throws EmptyLamination on the zero vector.
double log_reduced_count(const ScaledCoords& s);

}  // namespace braident

#endif
