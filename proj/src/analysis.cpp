#include "braident/analysis.hpp"

#include <cmath>

#include "braident/errors.hpp"

namespace braident {

ConvergenceFit fit_envelope(const OrbitTrace& trace, double h_ref) {
  if (trace.entries.size() < 10)
    throw InsufficientData("envelope fit needs at least 10 orbit entries, got " +
                           std::to_string(trace.entries.size()));
  if (h_ref < 0) throw Error("reference entropy must be nonnegative");

  ConvergenceFit fit;
  fit.braid = trace.braid;
  fit.h_ref = h_ref;
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    const int m = static_cast<int>(i) + 1;
    const double error = std::fabs(trace.entries[i].cesaro - h_ref);
    // ln(1) = 0 would divide out the first point; normalization starts at m=2.
    const double normalized = m >= 2 ? error * m / std::log(m) : 0.0;
    fit.per_m.push_back({m, error, normalized});
    if (m >= 2) fit.c_sup = std::max(fit.c_sup, normalized);
  }
  return fit;
}

double reference_entropy(const BraidWord& word) {
  const EntropyEstimate est =
      estimate_ratio(word, kReferenceEps, kDefaultWindow,
                     kReferenceMaxIterations, Mode::exact);
  if (!est.converged)
    throw NoConvergence("ratio estimator did not settle within " +
                        std::to_string(kReferenceMaxIterations) +
                        " iterations; supply a reference entropy explicitly");
  return est.value;
}

}  // namespace braident
