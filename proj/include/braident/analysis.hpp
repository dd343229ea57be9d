#ifndef BRAIDENT_ANALYSIS_HPP
#define BRAIDENT_ANALYSIS_HPP

#include <vector>

#include "braident/entropy.hpp"

namespace braident {

/// Descriptive fit of the Cesaro error against a C * ln(m)/m envelope:
/// c_sup is the supremum of |c_m - h_ref| * m / ln(m) over m >= 2.
struct ConvergenceFit {
  BraidWord braid;
  double h_ref = 0.0;
  double c_sup = 0.0;
  struct Point {
    int m = 0;
    double error = 0.0;       // |c_m - h_ref|
    double normalized = 0.0;  // error * m / ln m, zero at m = 1
  };
  std::vector<Point> per_m;
};

/// Requires a trace with at least 10 entries (InsufficientData otherwise)
/// and h_ref >= 0. Purely descriptive: no constant is claimed beyond the
/// supremum of the observed normalized errors.
ConvergenceFit fit_envelope(const OrbitTrace& trace, double h_ref);

/// Tight ratio-estimator value (eps 1e-9, exact engine) used as the
/// envelope reference when no closed form is available.
/// Throws NoConvergence if the estimator does not settle.
double reference_entropy(const BraidWord& word);

inline constexpr double kReferenceEps = 1e-9;
inline constexpr int kReferenceMaxIterations = 5'000;

}  // namespace braident

#endif
