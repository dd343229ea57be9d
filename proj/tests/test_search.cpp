#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "braident/braid_word.hpp"
#include "braident/errors.hpp"
#include "braident/search.hpp"
#include "braident/serialize.hpp"

using namespace braident;

namespace {

std::vector<Letter> key(const BraidWord& w) { return w.letters; }

// Independent orbit partition: close each word under the four symmetry
// generators by breadth-first search, with no reference to canonical_form.
std::vector<std::set<std::vector<Letter>>> brute_force_orbits(int strands,
                                                              int length) {
  std::vector<BraidWord> reduced;
  for_each_reduced_word(strands, length,
                        [&](const BraidWord& w) { reduced.push_back(w); });

  std::set<std::vector<Letter>> seen;
  std::vector<std::set<std::vector<Letter>>> orbits;
  for (const BraidWord& start : reduced) {
    if (seen.count(key(start))) continue;
    std::set<std::vector<Letter>> component;
    std::vector<BraidWord> queue{start};
    component.insert(key(start));
    while (!queue.empty()) {
      const BraidWord w = queue.back();
      queue.pop_back();
      const BraidWord images[] = {inverse(w), mirror(w), flip(w),
                                  rotate(w, w.empty() ? 0 : 1)};
      for (const BraidWord& img : images) {
        if (component.insert(key(img)).second) queue.push_back(img);
      }
    }
    for (const auto& k : component) seen.insert(k);
    orbits.push_back(std::move(component));
  }
  return orbits;
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("strand bound is length plus one") {
  CHECK(strand_bound(1) == 2);
  CHECK(strand_bound(2) == 3);
  CHECK(strand_bound(4) == 5);
  CHECK_THROWS_AS(strand_bound(0), Error);
}

TEST_CASE("reduced word counts match the closed form") {
  // 2g choices for the first letter, 2g-1 for each subsequent one
  for (int strands = 2; strands <= 4; ++strands) {
    for (int length = 1; length <= 4; ++length) {
      long long count = 0;
      for_each_reduced_word(strands, length, [&](const BraidWord&) { ++count; });
      long long expected = 2 * (strands - 1);
      for (int i = 1; i < length; ++i) expected *= 2 * (strands - 1) - 1;
      CHECK(count == expected);
    }
  }
}

TEST_CASE("enumeration collapses single letters to one representative") {
  const std::vector<BraidWord> reps = enumerate_orbit_reps(3, 1);
  REQUIRE(reps.size() == 1);
  CHECK(to_text(reps[0]) == "1");
}

TEST_CASE("enumeration of length-2 words in B_3") {
  const std::vector<BraidWord> reps = enumerate_orbit_reps(3, 2);
  REQUIRE(reps.size() == 3);
  CHECK(to_text(reps[0]) == "1 1");
  CHECK(to_text(reps[1]) == "1 2");
  CHECK(to_text(reps[2]) == "1 -2");
}

TEST_CASE("two strands admit only the power words") {
  for (const int length : {1, 2, 5}) {
    const std::vector<BraidWord> reps = enumerate_orbit_reps(2, length);
    REQUIRE(reps.size() == 1);
    CHECK(static_cast<int>(reps[0].length()) == length);
    for (const Letter& l : reps[0].letters) CHECK(l == Letter{1, 1});
  }
}

TEST_CASE("enumeration is complete and duplicate-free against brute force") {
  for (int length = 1; length <= 3; ++length) {
    const auto orbits = brute_force_orbits(3, length);
    const std::vector<BraidWord> reps = enumerate_orbit_reps(3, length);

    CHECK(reps.size() == orbits.size());

    std::set<std::vector<Letter>> rep_keys;
    for (const BraidWord& r : reps) CHECK(rep_keys.insert(key(r)).second);

    // every orbit contains exactly one emitted representative
    for (const auto& orbit : orbits) {
      int hits = 0;
      for (const auto& k : orbit) hits += rep_keys.count(k);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("orbit-level alternation sees rotated spellings") {
  CHECK(orbit_has_alternating(parse_braid("1 -2", 3)));
  // not alternating as spelled, but its rotation "1 -2 1" is
  CHECK(orbit_has_alternating(parse_braid("1 1 -2", 3)));
  CHECK_FALSE(orbit_has_alternating(parse_braid("1 1", 3)));
  CHECK_FALSE(orbit_has_alternating(parse_braid("1 1 2 2", 3)));
}

TEST_CASE("survey finds the known length-2 maximizer") {
  SurveyParams params;
  params.max_length = 2;
  params.strands_min = 3;
  params.strands_max = 4;
  const SurveyTable table = max_entropy_survey(params);

  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[0].length == 1);
  CHECK(table.rows[1].length == 2);

  // single letters all have vanishing entropy
  REQUIRE(!table.rows[0].best.empty());
  CHECK(table.rows[0].best.front().entropy <= params.coarse_eps);

  REQUIRE(!table.rows[1].best.empty());
  const SearchRecord& top = table.rows[1].best.front();
  CHECK(to_text(top.word) == "1 -2");
  CHECK(top.converged);
  CHECK(top.alternating);
  CHECK(top.entropy == doctest::Approx(0.9624236501).epsilon(1e-4));
  CHECK(table.warnings.empty());
}

TEST_CASE("survey accounting separates examined and pruned words") {
  SurveyParams params;
  params.max_length = 2;
  params.strands_min = 3;
  params.strands_max = 3;
  const SurveyTable table = max_entropy_survey(params);
  // length 1: 4 reduced words, 1 representative; length 2: 12 and 3
  CHECK(table.rows[0].examined == 1);
  CHECK(table.rows[0].pruned == 3);
  CHECK(table.rows[1].examined == 3);
  CHECK(table.rows[1].pruned == 9);
}

TEST_CASE("survey validates its parameters") {
  SurveyParams params;
  params.max_length = 0;
  CHECK_THROWS_AS(max_entropy_survey(params), Error);
  params.max_length = 1;
  params.strands_min = 2;
  CHECK_THROWS_AS(max_entropy_survey(params), Error);
  params.strands_min = 5;
  params.strands_max = 4;
  CHECK_THROWS_AS(max_entropy_survey(params), Error);
}

TEST_CASE("survey results are deterministic across worker counts") {
  SurveyParams params;
  params.max_length = 3;
  params.strands_min = 3;
  params.strands_max = 4;

  params.workers = 1;
  const SurveyTable serial = max_entropy_survey(params);
  params.workers = 4;
  const SurveyTable parallel = max_entropy_survey(params);

  const Json config = Json::object();
  CHECK(survey_to_json(serial, config) == survey_to_json(parallel, config));
  CHECK(survey_to_csv(serial, config) == survey_to_csv(parallel, config));
}

TEST_CASE("the all-strands cap follows the strand bound") {
  SurveyParams params;
  params.max_length = 2;
  params.all_strands = true;
  const SurveyTable table = max_entropy_survey(params);
  // at length 2 the cap is max(3, strand_bound(2)) = 3: same numbers as the
  // explicit 3..3 range
  CHECK(table.rows[1].examined == 3);
}

TEST_CASE("checkpointed surveys resume to identical tables") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "braident_test_checkpoint.json";
  std::filesystem::remove(path);

  SurveyParams params;
  params.max_length = 2;
  params.strands_min = 3;
  params.strands_max = 3;
  params.checkpoint_path = path.string();

  const SurveyTable fresh = max_entropy_survey(params);
  CHECK(std::filesystem::exists(path));
  const SurveyTable resumed = max_entropy_survey(params);

  const Json config = Json::object();
  CHECK(survey_to_json(fresh, config) == survey_to_json(resumed, config));

  // a changed tolerance invalidates the cache instead of replaying it
  params.coarse_eps = 5e-4;
  const SurveyTable recomputed = max_entropy_survey(params);
  REQUIRE(!recomputed.rows[1].best.empty());
  CHECK(to_text(recomputed.rows[1].best.front().word) == "1 -2");

  std::filesystem::remove(path);
}

TEST_SUITE_END();
