#ifndef BRAIDENT_SEARCH_HPP
#define BRAIDENT_SEARCH_HPP

#include <functional>
#include <string>
#include <vector>

#include "braident/entropy.hpp"

namespace braident {

/// One surveyed braid: the orbit's canonical word plus its estimate.
/// `alternating` is orbit-level: true when any freely reduced member of the
/// symmetry orbit alternates (rotation can break the pattern at the seam, so
/// testing only the canonical spelling would under-report).
struct SearchRecord {
  BraidWord word;
  int length = 0;
  int strands = 2;
  double entropy = 0.0;
  bool alternating = false;
  bool converged = false;
};

struct SurveyRow {
  int length = 0;
  std::vector<SearchRecord> best;  // entropy desc, then word asc, then strands asc
  long long examined = 0;          // orbit representatives estimated
  long long pruned = 0;            // reduced words skipped as orbit duplicates
};

struct SurveyTable {
  std::vector<SurveyRow> rows;
  std::vector<std::string> warnings;
};

struct SurveyParams {
  int max_length = 1;
  int strands_min = 3;
  int strands_max = 3;
  bool all_strands = false;  // cap per length by strand_bound instead
  double coarse_eps = 1e-3;
  double refine_eps = 1e-6;
  int refine_top = 20;
  int coarse_m_max = 2'000;
  int refine_m_max = 5'000;
  Mode mode = Mode::floating;
  int workers = 1;
  std::string checkpoint_path;  // empty disables checkpointing
};

/// Visits every freely reduced word of exactly this length whose letters use
/// indices 1..strands-1, in lexicographic order.
void for_each_reduced_word(int strands, int length,
                           const std::function<void(const BraidWord&)>& visit);

/// Exactly one representative (the canonical form) per symmetry orbit of
/// freely reduced words of the given length, in lexicographic order.
std::vector<BraidWord> enumerate_orbit_reps(int strands, int length);

/// Strand cap for unbounded searches: a reduced word of length L touches at
/// most L distinct indices, and flipping moves the support down to start at
/// index 1, so B_{L+1} already contains a representative of every candidate.
int strand_bound(int length);

bool orbit_has_alternating(const BraidWord& word);

/// Two-stage survey: coarse ratio estimates for every orbit representative,
/// tight re-estimates for the per-(length,strands) leaders, then one row per
/// length with the best records across the strand range. Individual
/// non-convergences are recorded in their rows and never abort the survey.
SurveyTable max_entropy_survey(const SurveyParams& params);

}  // namespace braident

#endif
