#include "braident/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace braident {

namespace {

double display_scale(double log_base) {
  return log_base > 0 ? std::log(log_base) : 1.0;
}

std::string csv_quote(const std::string& text) {
  return '"' + text + '"';
}

std::string config_header(const Json& config) {
  return "# config " + config.dump() + "\n";
}

Json record_to_json(const SearchRecord& r, double scale) {
  Json j;
  j["word"] = to_text(r.word);
  j["length"] = r.length;
  j["strands"] = r.strands;
  j["entropy"] = r.entropy / scale;
  j["alternating"] = r.alternating;
  j["converged"] = r.converged;
  return j;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Json coords_to_json(const LaminationCoords& lam) {
  Json arr = Json::array();
  for (const BigInt& entry : lam.coords) arr.push_back(entry.str());
  return arr;
}

std::string trace_to_csv(const OrbitTrace& trace, const Json& config,
                         const CoordRows* coords) {
  std::string out = config_header(config);
  out += "m,log_count,cesaro,ratio";
  if (coords) out += ",coords";
  out += '\n';
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    const TraceEntry& e = trace.entries[i];
    out += std::to_string(i + 1) + ',' + format_double(e.log_count) + ',' +
           format_double(e.cesaro) + ',' + format_double(e.ratio);
    if (coords) {
      std::string joined;
      for (const std::string& digit_string : (*coords)[i]) {
        if (!joined.empty()) joined += ' ';
        joined += digit_string;
      }
      out += ',' + csv_quote(joined);
    }
    out += '\n';
  }
  return out;
}

std::string trace_to_json(const OrbitTrace& trace, const Json& config,
                          const CoordRows* coords) {
  Json root;
  root["config"] = config;
  root["braid"] = to_text(trace.braid);
  root["strands"] = trace.braid.strands;
  root["mode"] = to_string(trace.mode);
  root["log_count0"] = trace.log_count0;
  Json entries = Json::array();
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    const TraceEntry& e = trace.entries[i];
    Json row;
    row["m"] = i + 1;
    row["log_count"] = e.log_count;
    row["cesaro"] = e.cesaro;
    row["ratio"] = e.ratio;
    if (coords) row["coords"] = (*coords)[i];
    entries.push_back(std::move(row));
  }
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

std::string estimate_to_json(const EntropyEstimate& estimate, const Json& config,
                             double log_base) {
  const double scale = display_scale(log_base);
  Json root;
  root["config"] = config;
  Json body;
  body["value"] = estimate.value / scale;
  body["iterations_used"] = estimate.iterations_used;
  body["converged"] = estimate.converged;
  body["estimator"] = to_string(estimate.estimator);
  body["epsilon"] = estimate.epsilon;
  body["low_entropy_caveat"] = estimate.low_entropy_caveat;
  root["estimate"] = std::move(body);
  return root.dump(2) + "\n";
}

std::string survey_to_csv(const SurveyTable& table, const Json& config,
                          double log_base) {
  const double scale = display_scale(log_base);
  std::string out = config_header(config);
  for (const std::string& warning : table.warnings)
    out += "# warning " + warning + "\n";
  out += "length,rank,word,strands,entropy,alternating,converged,examined,pruned\n";
  for (const SurveyRow& row : table.rows) {
    int rank = 1;
    for (const SearchRecord& r : row.best) {
      out += std::to_string(row.length) + ',' + std::to_string(rank++) + ',' +
             csv_quote(to_text(r.word)) + ',' + std::to_string(r.strands) +
             ',' + format_double(r.entropy / scale) + ',' +
             (r.alternating ? "true" : "false") + ',' +
             (r.converged ? "true" : "false") + ',' +
             std::to_string(row.examined) + ',' + std::to_string(row.pruned) +
             '\n';
    }
  }
  return out;
}

std::string survey_to_json(const SurveyTable& table, const Json& config,
                           double log_base) {
  const double scale = display_scale(log_base);
  Json root;
  root["config"] = config;
  Json rows = Json::array();
  for (const SurveyRow& row : table.rows) {
    Json jrow;
    jrow["length"] = row.length;
    jrow["examined"] = row.examined;
    jrow["pruned"] = row.pruned;
    Json best = Json::array();
    for (const SearchRecord& r : row.best) best.push_back(record_to_json(r, scale));
    jrow["best"] = std::move(best);
    rows.push_back(std::move(jrow));
  }
  root["rows"] = std::move(rows);
  root["warnings"] = table.warnings;
  return root.dump(2) + "\n";
}

std::string fit_to_csv(const ConvergenceFit& fit, const Json& config) {
  std::string out = config_header(config);
  out += "# h_ref " + format_double(fit.h_ref) + "\n";
  out += "# c_sup " + format_double(fit.c_sup) + "\n";
  out += "m,error,normalized\n";
  for (const ConvergenceFit::Point& p : fit.per_m)
    out += std::to_string(p.m) + ',' + format_double(p.error) + ',' +
           format_double(p.normalized) + '\n';
  return out;
}

std::string fit_to_json(const ConvergenceFit& fit, const Json& config) {
  Json root;
  root["config"] = config;
  root["braid"] = to_text(fit.braid);
  root["strands"] = fit.braid.strands;
  root["h_ref"] = fit.h_ref;
  root["c_sup"] = fit.c_sup;
  Json points = Json::array();
  for (const ConvergenceFit::Point& p : fit.per_m) {
    Json row;
    row["m"] = p.m;
    row["error"] = p.error;
    row["normalized"] = p.normalized;
    points.push_back(std::move(row));
  }
  root["per_m"] = std::move(points);
  return root.dump(2) + "\n";
}

}  // namespace braident
