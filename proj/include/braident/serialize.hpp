#ifndef BRAIDENT_SERIALIZE_HPP
#define BRAIDENT_SERIALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braident/analysis.hpp"
#include "braident/dynnikov.hpp"
#include "braident/entropy.hpp"
#include "braident/search.hpp"

namespace braident {

using Json = nlohmann::ordered_json;

/// Round-trip-exact, locale-independent rendering used by every CSV writer,
/// so identical runs produce byte-identical files.
std::string format_double(double value);

/// Coordinate entries as decimal strings; native JSON numbers would silently
/// truncate arbitrary-precision values.
Json coords_to_json(const LaminationCoords& lam);

/// Optional per-iteration coordinate dumps attached to a trace export;
/// row[i] belongs to entries[i].
using CoordRows = std::vector<std::vector<std::string>>;

std::string trace_to_csv(const OrbitTrace& trace, const Json& config,
                         const CoordRows* coords = nullptr);
std::string trace_to_json(const OrbitTrace& trace, const Json& config,
                          const CoordRows* coords = nullptr);

/// log_base <= 0 means natural units; otherwise displayed entropies are
/// divided by ln(log_base). Stored traces stay in natural units.
std::string estimate_to_json(const EntropyEstimate& estimate, const Json& config,
                             double log_base = 0.0);

std::string survey_to_csv(const SurveyTable& table, const Json& config,
                          double log_base = 0.0);
std::string survey_to_json(const SurveyTable& table, const Json& config,
                           double log_base = 0.0);

std::string fit_to_csv(const ConvergenceFit& fit, const Json& config);
std::string fit_to_json(const ConvergenceFit& fit, const Json& config);

}  // namespace braident

#endif
