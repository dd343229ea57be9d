#ifndef BRAIDENT_ENTROPY_HPP
#define BRAIDENT_ENTROPY_HPP

#include <string>
#include <vector>

#include "braident/braid_word.hpp"
#include "braident/dynnikov.hpp"
#include "braident/float_orbit.hpp"

namespace braident {

enum class Mode { exact, floating };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);

struct OrbitLimits {
  // Exact engine aborts with ResourceLimit past this many decimal digits.
  std::size_t digit_cap = 1'000'000;
  double renorm_threshold = kDefaultRenormThreshold;
};

struct TraceEntry {
  double log_count = 0.0;  // natural log of the reduced count after m steps
  double cesaro = 0.0;     // log_count / m
  double ratio = 0.0;      // log_count(m) - log_count(m-1)
};

/// Per-iteration record of one braid orbit started from the reference
/// lamination. entries[i] holds m = i + 1; log_count0 is the m = 0 value,
/// ln(strands), which seeds the first ratio.
struct OrbitTrace {
  BraidWord braid;
  Mode mode = Mode::exact;
  double log_count0 = 0.0;
  std::vector<TraceEntry> entries;
};

/// Advances one orbit a word application at a time, so estimators can stop
/// as soon as their criterion holds. The word is freely reduced on entry.
class OrbitRunner {
 public:
  OrbitRunner(BraidWord word, Mode mode, const OrbitLimits& limits = {});

  /// Applies the word once more and returns the new log reduced count.
  double step();

  int iteration() const { return iteration_; }
  double log_count0() const { return log_count0_; }
  const BraidWord& word() const { return word_; }
  Mode mode() const { return mode_; }

  /// Exact-mode coordinate state (for orbit dumps). Valid in exact mode only.
  const LaminationCoords& exact_state() const { return exact_; }

 private:
  BraidWord word_;
  Mode mode_;
  OrbitLimits limits_;
  LaminationCoords exact_;
  ScaledCoords scaled_;
  double log_count0_ = 0.0;
  int iteration_ = 0;
};

/// Iterates the braid m_max times from the reference lamination, recording
/// log counts, Cesaro quotients and successive ratios.
OrbitTrace orbit(const BraidWord& word, int m_max, Mode mode,
                 const OrbitLimits& limits = {});

enum class Estimator { cesaro, ratio };

std::string to_string(Estimator estimator);
Estimator estimator_from_string(const std::string& text);

struct EntropyEstimate {
  double value = 0.0;  // natural-log units
  int iterations_used = 1;
  bool converged = false;
  Estimator estimator = Estimator::cesaro;
  double epsilon = 0.0;
  // Converged value below 10*eps: the stopping criterion cannot tell zero
  // entropy from small entropy, so small results carry this caveat.
  bool low_entropy_caveat = false;
};

/// Stops at the first |c_{m+1} - c_m| < eps and reports that c_{m+1};
/// reports the last Cesaro quotient unconverged if m_max arrives first.
/// A word that reduces to the identity reports 0 immediately.
EntropyEstimate estimate_cesaro(const BraidWord& word, double eps, int m_max,
                                Mode mode, const OrbitLimits& limits = {});

/// Faster estimator: successive log-count differences converge geometrically
/// for pseudo-Anosov braids. Stops when the trailing window's max-min spread
/// drops below eps and reports the window mean.
EntropyEstimate estimate_ratio(const BraidWord& word, double eps, int window,
                               int m_max, Mode mode,
                               const OrbitLimits& limits = {});

/// Estimates the braid together with its entropy-preserving images
/// (inverse, mirror, flip, one rotation, one extra strand) and reports the
/// largest pairwise deviation. Supports the search's symmetry pruning.
struct SymmetryReport {
  struct Entry {
    std::string label;
    BraidWord word;
    EntropyEstimate estimate;
  };
  std::vector<Entry> entries;
  double max_deviation = 0.0;
};

SymmetryReport symmetry_check(const BraidWord& word, double eps);

inline constexpr double kDefaultEps = 1e-4;
inline constexpr int kDefaultMaxIterations = 10'000;
inline constexpr int kDefaultWindow = 5;
// Polynomial-growth braids need ~sqrt(4*degree/eps) iterations before the
// ratio window settles; 8000 covers the searched degrees at eps = 1e-6.
inline constexpr int kSymmetryCheckIterations = 8'000;

}  // namespace braident

#endif
