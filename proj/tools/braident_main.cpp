// braident: estimate topological entropy of braids from the growth rate of
// Dynnikov coordinate orbits, dump orbits, survey short words, and fit
// convergence envelopes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "braident/analysis.hpp"
#include "braident/errors.hpp"
#include "braident/search.hpp"
#include "braident/serialize.hpp"

namespace {

using namespace braident;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitResourceLimit = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open output file '" + path + "'");
  file << text;
}

int default_workers() {
  if (const char* env = std::getenv("BRAIDENT_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      return 1;
    }
  }
  return 1;
}

struct StrandRange {
  bool all = false;
  int min = 3;
  int max = 3;
};

StrandRange parse_strand_range(const std::string& text) {
  StrandRange range;
  if (text == "all") {
    range.all = true;
    return range;
  }
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      range.min = range.max = std::stoi(text);
    } else {
      range.min = std::stoi(text.substr(0, dots));
      range.max = std::stoi(text.substr(dots + 2));
    }
  } catch (...) {
    throw Error("strand range must be N, N..M or all, got '" + text + "'");
  }
  return range;
}

struct EstimateOptions {
  std::string braid;
  int strands = 3;
  double eps = kDefaultEps;
  int m_max = kDefaultMaxIterations;
  int window = kDefaultWindow;
  std::string mode = "exact";
  std::string estimator = "cesaro";
  double log_base = 0.0;
  std::size_t digit_cap = OrbitLimits{}.digit_cap;
  std::string output;
};

int run_estimate(const EstimateOptions& opt) {
  const BraidWord word = parse_braid(opt.braid, opt.strands);
  OrbitLimits limits;
  limits.digit_cap = opt.digit_cap;
  const Mode mode = mode_from_string(opt.mode);
  const Estimator estimator = estimator_from_string(opt.estimator);

  const EntropyEstimate estimate =
      estimator == Estimator::cesaro
          ? estimate_cesaro(word, opt.eps, opt.m_max, mode, limits)
          : estimate_ratio(word, opt.eps, opt.window, opt.m_max, mode, limits);

  Json config;
  config["subcommand"] = "estimate";
  config["braid"] = to_text(word);
  config["strands"] = opt.strands;
  config["eps"] = opt.eps;
  config["m_max"] = opt.m_max;
  config["mode"] = opt.mode;
  config["estimator"] = opt.estimator;
  config["window"] = opt.window;
  config["log_base"] = opt.log_base;
  write_output(estimate_to_json(estimate, config, opt.log_base), opt.output);
  return estimate.converged ? kExitOk : kExitNoConvergence;
}

struct OrbitOptions {
  std::string braid;
  int strands = 3;
  int iters = 0;
  std::string mode = "exact";
  std::string format = "csv";
  bool coords = false;
  std::size_t digit_cap = OrbitLimits{}.digit_cap;
  std::string output;
};

int run_orbit(const OrbitOptions& opt) {
  if (opt.iters < 1) throw Error("--iters must be at least 1");
  const BraidWord word = parse_braid(opt.braid, opt.strands);
  const Mode mode = mode_from_string(opt.mode);
  if (opt.coords && mode != Mode::exact)
    throw Error("--coords requires --mode exact");
  OrbitLimits limits;
  limits.digit_cap = opt.digit_cap;

  OrbitRunner runner(word, mode, limits);
  OrbitTrace trace;
  trace.braid = runner.word();
  trace.mode = mode;
  trace.log_count0 = runner.log_count0();
  CoordRows coord_rows;
  double prev = trace.log_count0;
  for (int m = 1; m <= opt.iters; ++m) {
    const double lc = runner.step();
    trace.entries.push_back({lc, lc / m, lc - prev});
    prev = lc;
    if (opt.coords)
      coord_rows.push_back(
          coords_to_json(runner.exact_state()).get<std::vector<std::string>>());
  }

  Json config;
  config["subcommand"] = "orbit";
  config["braid"] = to_text(trace.braid);
  config["strands"] = opt.strands;
  config["iters"] = opt.iters;
  config["mode"] = opt.mode;
  config["format"] = opt.format;
  config["coords"] = opt.coords;
  const CoordRows* rows = opt.coords ? &coord_rows : nullptr;
  write_output(opt.format == "json" ? trace_to_json(trace, config, rows)
                                    : trace_to_csv(trace, config, rows),
               opt.output);
  return kExitOk;
}

struct SearchOptions {
  int max_length = 1;
  std::string strands = "all";
  double eps = 1e-3;
  double refine_eps = 1e-6;
  int refine_top = 20;
  int coarse_m_max = 2'000;
  int refine_m_max = 5'000;
  std::string mode = "float";
  int workers = default_workers();
  double log_base = 0.0;
  std::string format = "csv";
  std::string checkpoint;
  std::string output;
};

int run_search(const SearchOptions& opt) {
  const StrandRange range = parse_strand_range(opt.strands);
  SurveyParams params;
  params.max_length = opt.max_length;
  params.all_strands = range.all;
  params.strands_min = range.min;
  params.strands_max = range.max;
  params.coarse_eps = opt.eps;
  params.refine_eps = opt.refine_eps;
  params.refine_top = opt.refine_top;
  params.coarse_m_max = opt.coarse_m_max;
  params.refine_m_max = opt.refine_m_max;
  params.mode = mode_from_string(opt.mode);
  params.workers = opt.workers;
  params.checkpoint_path = opt.checkpoint;

  const SurveyTable table = max_entropy_survey(params);

  Json config;
  config["subcommand"] = "search";
  config["max_length"] = opt.max_length;
  config["strands"] = opt.strands;
  config["eps"] = opt.eps;
  config["refine_eps"] = opt.refine_eps;
  config["refine_top"] = opt.refine_top;
  config["coarse_m_max"] = opt.coarse_m_max;
  config["refine_m_max"] = opt.refine_m_max;
  config["mode"] = opt.mode;
  config["format"] = opt.format;
  config["log_base"] = opt.log_base;
  write_output(opt.format == "json"
                   ? survey_to_json(table, config, opt.log_base)
                   : survey_to_csv(table, config, opt.log_base),
               opt.output);
  return kExitOk;
}

struct ConvergeOptions {
  std::string braid;
  int strands = 3;
  int iters = 1'000;
  std::optional<double> h_ref;
  std::string mode = "exact";
  std::string format = "csv";
  std::string output;
};

int run_converge(const ConvergeOptions& opt) {
  if (opt.iters < 10) throw Error("--iters must be at least 10 for a fit");
  const BraidWord word = parse_braid(opt.braid, opt.strands);
  const Mode mode = mode_from_string(opt.mode);

  const double h_ref = opt.h_ref ? *opt.h_ref : reference_entropy(word);
  const OrbitTrace trace = orbit(word, opt.iters, mode);
  const ConvergenceFit fit = fit_envelope(trace, h_ref);

  Json config;
  config["subcommand"] = "converge";
  config["braid"] = to_text(fit.braid);
  config["strands"] = opt.strands;
  config["iters"] = opt.iters;
  config["h_ref"] = opt.h_ref ? Json(*opt.h_ref) : Json("auto");
  config["mode"] = opt.mode;
  config["format"] = opt.format;
  write_output(opt.format == "json" ? fit_to_json(fit, config)
                                    : fit_to_csv(fit, config),
               opt.output);
  return kExitOk;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topological entropy of braids from Dynnikov coordinate orbits"};
  app.require_subcommand(1);

  EstimateOptions est;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "estimate the entropy of one braid (JSON to stdout)");
  estimate->add_option("--braid", est.braid, "braid word, e.g. \"1 -2\"")->required();
  estimate->add_option("--strands", est.strands, "strand count (>= 2)")->required();
  estimate->add_option("--eps", est.eps, "stopping tolerance");
  estimate->add_option("--m-max", est.m_max, "iteration budget");
  estimate->add_option("--window", est.window, "ratio estimator window");
  estimate->add_option("--mode", est.mode)->check(CLI::IsMember({"exact", "float"}));
  estimate->add_option("--estimator", est.estimator)
      ->check(CLI::IsMember({"cesaro", "ratio"}));
  estimate->add_option("--log-base", est.log_base,
                       "display base for entropy (default natural log)");
  estimate->add_option("--digit-cap", est.digit_cap,
                       "exact-mode decimal digit limit");
  estimate->add_option("--output,-o", est.output, "write to file instead of stdout");

  OrbitOptions orb;
  CLI::App* orbit_cmd = app.add_subcommand(
      "orbit", "dump the per-iteration orbit trace (CSV or JSON)");
  orbit_cmd->add_option("--braid", orb.braid)->required();
  orbit_cmd->add_option("--strands", orb.strands)->required();
  orbit_cmd->add_option("--iters", orb.iters, "number of iterations (>= 1)")
      ->required();
  orbit_cmd->add_option("--mode", orb.mode)->check(CLI::IsMember({"exact", "float"}));
  orbit_cmd->add_option("--format", orb.format)->check(CLI::IsMember({"csv", "json"}));
  orbit_cmd->add_flag("--coords", orb.coords,
                      "include exact coordinate vectors as decimal strings");
  orbit_cmd->add_option("--digit-cap", orb.digit_cap);
  orbit_cmd->add_option("--output,-o", orb.output);

  SearchOptions sea;
  CLI::App* search_cmd = app.add_subcommand(
      "search", "survey maximal-entropy braids per written length");
  search_cmd->add_option("--max-length", sea.max_length)->required();
  search_cmd->add_option("--strands", sea.strands,
                         "strand range N..M, or 'all' for the per-length cap");
  search_cmd->add_option("--eps", sea.eps, "coarse stopping tolerance");
  search_cmd->add_option("--refine-eps", sea.refine_eps);
  search_cmd->add_option("--refine-top", sea.refine_top,
                         "leaders per (length,strands) to re-estimate");
  search_cmd->add_option("--coarse-m-max", sea.coarse_m_max);
  search_cmd->add_option("--refine-m-max", sea.refine_m_max);
  search_cmd->add_option("--mode", sea.mode)->check(CLI::IsMember({"exact", "float"}));
  search_cmd->add_option("--workers", sea.workers,
                         "estimation threads (default $BRAIDENT_WORKERS or 1)");
  search_cmd->add_option("--log-base", sea.log_base);
  search_cmd->add_option("--format", sea.format)->check(CLI::IsMember({"csv", "json"}));
  search_cmd->add_option("--checkpoint", sea.checkpoint,
                         "resumable checkpoint file (JSON)");
  search_cmd->add_option("--output,-o", sea.output);

  ConvergeOptions con;
  CLI::App* converge_cmd = app.add_subcommand(
      "converge", "fit the Cesaro error against a C*ln(m)/m envelope");
  converge_cmd->add_option("--braid", con.braid)->required();
  converge_cmd->add_option("--strands", con.strands)->required();
  converge_cmd->add_option("--iters", con.iters, "trace length (>= 10)");
  converge_cmd->add_option("--h-ref", con.h_ref,
                           "reference entropy (default: tight ratio estimate)");
  converge_cmd->add_option("--mode", con.mode)->check(CLI::IsMember({"exact", "float"}));
  converge_cmd->add_option("--format", con.format)->check(CLI::IsMember({"csv", "json"}));
  converge_cmd->add_option("--output,-o", con.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (estimate->parsed()) return guarded([&] { return run_estimate(est); });
  if (orbit_cmd->parsed()) return guarded([&] { return run_orbit(orb); });
  if (search_cmd->parsed()) return guarded([&] { return run_search(sea); });
  if (converge_cmd->parsed()) return guarded([&] { return run_converge(con); });
  return kExitUsage;
}
