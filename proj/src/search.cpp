#include "braident/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "braident/errors.hpp"

namespace braident {

namespace {

using nlohmann::json;

// Letters ordered as (index asc, + before -), matching letter_less, so the
// odometer below emits words in lexicographic order.
Letter letter_from_rank(int rank) {
  return {rank / 2 + 1, rank % 2 == 0 ? 1 : -1};
}

bool cancels(const Letter& a, const Letter& b) {
  return a.index == b.index && a.sign == -b.sign;
}

void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = std::min<int>(workers, static_cast<int>(count));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(run);
  for (std::thread& th : pool) th.join();
}

EntropyEstimate safe_ratio(const BraidWord& word, double eps, int m_max,
                           Mode mode) {
  try {
    return estimate_ratio(word, eps, kDefaultWindow, m_max, mode);
  } catch (const Error&) {
    EntropyEstimate est;
    est.estimator = Estimator::ratio;
    est.epsilon = eps;
    est.value = 0.0;
    est.converged = false;
    return est;
  }
}

struct UnitResult {
  long long total_reduced = 0;  // freely reduced words of this (length, strands)
  long long reps = 0;           // orbit representatives among them
  std::vector<SearchRecord> records;
};

bool record_order(const SearchRecord& a, const SearchRecord& b) {
  if (a.entropy != b.entropy) return a.entropy > b.entropy;
  if (a.word.letters != b.word.letters) return lex_less(a.word, b.word);
  return a.strands < b.strands;
}

UnitResult run_unit(int length, int strands, const SurveyParams& params) {
  UnitResult unit;
  std::vector<BraidWord> reps;
  for_each_reduced_word(strands, length, [&](const BraidWord& word) {
    ++unit.total_reduced;
    if (canonical_form(word) == word) reps.push_back(word);
  });
  unit.reps = static_cast<long long>(reps.size());

  std::vector<EntropyEstimate> coarse(reps.size());
  parallel_for(reps.size(), params.workers, [&](std::size_t i) {
    coarse[i] = safe_ratio(reps[i], params.coarse_eps, params.coarse_m_max,
                           params.mode);
  });

  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (coarse[a].value != coarse[b].value)
      return coarse[a].value > coarse[b].value;
    return lex_less(reps[a], reps[b]);
  });

  const std::size_t keep =
      std::min<std::size_t>(order.size(),
                            static_cast<std::size_t>(std::max(params.refine_top, 1)));
  for (std::size_t k = 0; k < keep; ++k) {
    const BraidWord& word = reps[order[k]];
    const EntropyEstimate refined =
        safe_ratio(word, params.refine_eps, params.refine_m_max, params.mode);
    unit.records.push_back({word, length, strands, refined.value,
                            orbit_has_alternating(word), refined.converged});
  }
  std::sort(unit.records.begin(), unit.records.end(), record_order);
  return unit;
}

json params_fingerprint(const SurveyParams& p) {
  return json{{"coarse_eps", p.coarse_eps},   {"refine_eps", p.refine_eps},
              {"refine_top", p.refine_top},   {"coarse_m_max", p.coarse_m_max},
              {"refine_m_max", p.refine_m_max}, {"mode", to_string(p.mode)}};
}

json record_to_json(const SearchRecord& r) {
  return json{{"word", to_text(r.word)},       {"length", r.length},
              {"strands", r.strands},          {"entropy", r.entropy},
              {"alternating", r.alternating},  {"converged", r.converged}};
}

SearchRecord record_from_json(const json& j) {
  SearchRecord r;
  r.strands = j.at("strands").get<int>();
  r.word = parse_braid(j.at("word").get<std::string>(), r.strands);
  r.length = j.at("length").get<int>();
  r.entropy = j.at("entropy").get<double>();
  r.alternating = j.at("alternating").get<bool>();
  r.converged = j.at("converged").get<bool>();
  return r;
}

class Checkpoint {
 public:
  Checkpoint(std::string path, const SurveyParams& params) : path_(std::move(path)) {
    if (path_.empty()) return;
    fingerprint_ = params_fingerprint(params);
    std::ifstream in(path_);
    if (!in) return;
    json stored = json::parse(in, nullptr, false);
    if (stored.is_discarded() || !stored.is_object()) return;
    if (stored.value("params", json{}) != fingerprint_) return;  // stale
    if (stored.contains("units") && stored["units"].is_object())
      units_ = stored["units"];
  }

  bool lookup(const std::string& key, UnitResult& out) const {
    if (path_.empty() || !units_.contains(key)) return false;
    const json& u = units_.at(key);
    out.total_reduced = u.at("reduced_words").get<long long>();
    out.reps = u.at("representatives").get<long long>();
    out.records.clear();
    for (const json& r : u.at("records")) out.records.push_back(record_from_json(r));
    return true;
  }

  void store(const std::string& key, const UnitResult& unit) {
    if (path_.empty()) return;
    json u;
    u["reduced_words"] = unit.total_reduced;
    u["representatives"] = unit.reps;
    u["records"] = json::array();
    for (const SearchRecord& r : unit.records) u["records"].push_back(record_to_json(r));
    units_[key] = std::move(u);
    flush();
  }

 private:
  void flush() const {
    json out;
    out["params"] = fingerprint_;
    out["units"] = units_;
    const std::string tmp = path_ + ".tmp";
    {
      std::ofstream file(tmp);
      file << out.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path_);
  }

  std::string path_;
  json fingerprint_;
  json units_ = json::object();
};

}  // namespace

void for_each_reduced_word(int strands, int length,
                           const std::function<void(const BraidWord&)>& visit) {
  if (strands < 2) throw InvalidPunctureCount("need at least 2 strands");
  if (length < 1) throw Error("word length must be at least 1");
  const int alphabet = 2 * (strands - 1);

  BraidWord word;
  word.strands = strands;
  word.letters.resize(static_cast<std::size_t>(length));
  std::vector<int> ranks(static_cast<std::size_t>(length), 0);

  // Depth-first odometer over letter ranks, skipping any branch whose next
  // letter would cancel the previous one.
  int depth = 0;
  ranks[0] = -1;
  while (depth >= 0) {
    ++ranks[static_cast<std::size_t>(depth)];
    if (ranks[static_cast<std::size_t>(depth)] >= alphabet) {
      --depth;
      continue;
    }
    const Letter letter = letter_from_rank(ranks[static_cast<std::size_t>(depth)]);
    if (depth > 0 && cancels(word.letters[static_cast<std::size_t>(depth - 1)], letter))
      continue;
    word.letters[static_cast<std::size_t>(depth)] = letter;
    if (depth == length - 1) {
      visit(word);
    } else {
      ++depth;
      ranks[static_cast<std::size_t>(depth)] = -1;
    }
  }
}

std::vector<BraidWord> enumerate_orbit_reps(int strands, int length) {
  std::vector<BraidWord> reps;
  for_each_reduced_word(strands, length, [&](const BraidWord& word) {
    if (canonical_form(word) == word) reps.push_back(word);
  });
  return reps;
}

int strand_bound(int length) {
  if (length < 1) throw Error("word length must be at least 1");
  return length + 1;
}

bool orbit_has_alternating(const BraidWord& word) {
  for (const BraidWord& member : symmetry_orbit(word))
    if (is_alternating(member)) return true;
  return false;
}

SurveyTable max_entropy_survey(const SurveyParams& params) {
  if (params.max_length < 1) throw Error("max length must be at least 1");
  if (!params.all_strands &&
      (params.strands_min < 3 || params.strands_min > params.strands_max))
    throw Error("strand range must satisfy 3 <= min <= max");
  if (params.coarse_eps <= 0 || params.refine_eps <= 0)
    throw Error("eps must be positive");

  Checkpoint checkpoint(params.checkpoint_path, params);
  SurveyTable table;

  for (int length = 1; length <= params.max_length; ++length) {
    SurveyRow row;
    row.length = length;
    const int smin = params.all_strands ? 3 : params.strands_min;
    const int smax = params.all_strands ? std::max(3, strand_bound(length))
                                        : params.strands_max;

    std::vector<SearchRecord> refined;
    for (int strands = smin; strands <= smax; ++strands) {
      const std::string key =
          "L" + std::to_string(length) + "S" + std::to_string(strands);
      UnitResult unit;
      if (!checkpoint.lookup(key, unit)) {
        unit = run_unit(length, strands, params);
        checkpoint.store(key, unit);
      }
      row.examined += unit.reps;
      row.pruned += unit.total_reduced - unit.reps;
      refined.insert(refined.end(), unit.records.begin(), unit.records.end());
    }

    std::sort(refined.begin(), refined.end(), record_order);
    if (!refined.empty()) {
      const double cutoff = refined.front().entropy - 2 * params.coarse_eps;
      for (const SearchRecord& r : refined)
        if (r.entropy >= cutoff) row.best.push_back(r);
    }
    table.rows.push_back(std::move(row));
  }

  // A maximizer two letters shorter can be padded with a cancelling-free
  // commuting pair, so best entropy should not drop across that gap.
  for (std::size_t i = 2; i < table.rows.size(); ++i) {
    const SurveyRow& lo = table.rows[i - 2];
    const SurveyRow& hi = table.rows[i];
    if (!lo.best.empty() && !hi.best.empty() &&
        hi.best.front().entropy <
            lo.best.front().entropy - 2 * params.coarse_eps)
      table.warnings.push_back(
          "best entropy at length " + std::to_string(hi.length) +
          " fell below length " + std::to_string(lo.length) +
          " by more than 2*eps");
  }
  return table;
}

}  // namespace braident
