#include "braident/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "braident/errors.hpp"

namespace braident {

std::string to_string(Mode mode) {
  return mode == Mode::exact ? "exact" : "float";
}

Mode mode_from_string(const std::string& text) {
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  throw Error("unknown mode '" + text + "' (expected exact or float)");
}

std::string to_string(Estimator estimator) {
  return estimator == Estimator::cesaro ? "cesaro" : "ratio";
}

Estimator estimator_from_string(const std::string& text) {
  if (text == "cesaro") return Estimator::cesaro;
  if (text == "ratio") return Estimator::ratio;
  throw Error("unknown estimator '" + text + "' (expected cesaro or ratio)");
}

OrbitRunner::OrbitRunner(BraidWord word, Mode mode, const OrbitLimits& limits)
    : word_(free_reduce(std::move(word))), mode_(mode), limits_(limits) {
  if (mode_ == Mode::exact)
    exact_ = l0(word_.strands);
  else
    scaled_ = from_exact(l0(word_.strands));
  log_count0_ = std::log(static_cast<double>(word_.strands));
}

double OrbitRunner::step() {
  ++iteration_;
  if (mode_ == Mode::exact) {
    apply_word_inplace(exact_, word_);
    if (max_decimal_digits(exact_) > limits_.digit_cap)
      throw ResourceLimit("coordinate entries exceeded " +
                          std::to_string(limits_.digit_cap) +
                          " decimal digits at iteration " +
                          std::to_string(iteration_));
    return log_of_bigint(reduced_intersection_count(exact_));
  }
  apply_word_scaled_inplace(scaled_, word_, limits_.renorm_threshold);
  return log_reduced_count(scaled_);
}

OrbitTrace orbit(const BraidWord& word, int m_max, Mode mode,
                 const OrbitLimits& limits) {
  if (m_max < 1) throw Error("orbit length must be at least 1");
  OrbitRunner runner(word, mode, limits);
  OrbitTrace trace;
  trace.braid = runner.word();
  trace.mode = mode;
  trace.log_count0 = runner.log_count0();
  trace.entries.reserve(static_cast<std::size_t>(m_max));
  double prev = trace.log_count0;
  for (int m = 1; m <= m_max; ++m) {
    const double lc = runner.step();
    trace.entries.push_back({lc, lc / m, lc - prev});
    prev = lc;
  }
  return trace;
}

namespace {

EntropyEstimate identity_estimate(Estimator estimator, double eps) {
  EntropyEstimate est;
  est.value = 0.0;
  est.iterations_used = 1;
  est.converged = true;
  est.estimator = estimator;
  est.epsilon = eps;
  est.low_entropy_caveat = true;
  return est;
}

}  // namespace

EntropyEstimate estimate_cesaro(const BraidWord& word, double eps, int m_max,
                                Mode mode, const OrbitLimits& limits) {
  if (eps <= 0) throw Error("eps must be positive");
  if (m_max < 1) throw Error("iteration budget must be at least 1");
  if (free_reduce(word).empty()) return identity_estimate(Estimator::cesaro, eps);

  OrbitRunner runner(word, mode, limits);
  EntropyEstimate est;
  est.estimator = Estimator::cesaro;
  est.epsilon = eps;
  double prev_cesaro = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    const double cesaro = runner.step() / m;
    if (m >= 2 && std::fabs(cesaro - prev_cesaro) < eps) {
      est.value = cesaro;
      est.iterations_used = m;
      est.converged = true;
      est.low_entropy_caveat = cesaro < 10 * eps;
      return est;
    }
    prev_cesaro = cesaro;
  }
  est.value = prev_cesaro;
  est.iterations_used = m_max;
  est.converged = false;
  return est;
}

EntropyEstimate estimate_ratio(const BraidWord& word, double eps, int window,
                               int m_max, Mode mode, const OrbitLimits& limits) {
  if (eps <= 0) throw Error("eps must be positive");
  if (window < 1) throw Error("window must be at least 1");
  if (m_max < 1) throw Error("iteration budget must be at least 1");
  if (free_reduce(word).empty()) return identity_estimate(Estimator::ratio, eps);

  OrbitRunner runner(word, mode, limits);
  EntropyEstimate est;
  est.estimator = Estimator::ratio;
  est.epsilon = eps;

  std::vector<double> ring(static_cast<std::size_t>(window), 0.0);
  double prev_log = runner.log_count0();
  for (int m = 1; m <= m_max; ++m) {
    const double lc = runner.step();
    ring[static_cast<std::size_t>((m - 1) % window)] = lc - prev_log;
    prev_log = lc;
    if (m >= window) {
      const auto [lo, hi] = std::minmax_element(ring.begin(), ring.end());
      if (*hi - *lo < eps) {
        est.value = std::accumulate(ring.begin(), ring.end(), 0.0) / window;
        est.iterations_used = m;
        est.converged = true;
        est.low_entropy_caveat = est.value < 10 * eps;
        return est;
      }
    }
  }
  const int filled = std::min(m_max, window);
  est.value = std::accumulate(ring.begin(), ring.begin() + filled, 0.0) / filled;
  est.iterations_used = m_max;
  est.converged = false;
  return est;
}

SymmetryReport symmetry_check(const BraidWord& word, double eps) {
  const BraidWord reduced = free_reduce(word);
  BraidWord embedded = reduced;
  embedded.strands += 1;

  const std::pair<std::string, BraidWord> variants[] = {
      {"word", reduced},
      {"inverse", inverse(reduced)},
      {"mirror", mirror(reduced)},
      {"flip", flip(reduced)},
      {"rotate", rotate(reduced, std::min<std::size_t>(1, reduced.length()))},
      {"embedded", embedded},
  };

  SymmetryReport report;
  for (const auto& [label, variant] : variants) {
    EntropyEstimate est = estimate_ratio(variant, eps, kDefaultWindow,
                                         kSymmetryCheckIterations, Mode::exact);
    report.entries.push_back({label, variant, est});
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    for (std::size_t j = i + 1; j < report.entries.size(); ++j)
      report.max_deviation =
          std::max(report.max_deviation,
                   std::fabs(report.entries[i].estimate.value -
                             report.entries[j].estimate.value));
  return report;
}

}  // namespace braident
