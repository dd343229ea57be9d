#include <doctest.h>

#include <random>

#include "braident/braid_word.hpp"
#include "braident/errors.hpp"

using namespace braident;

namespace {

BraidWord word_of(int strands, std::initializer_list<int> letters) {
  BraidWord w;
  w.strands = strands;
  for (int k : letters) w.letters.push_back({k < 0 ? -k : k, k < 0 ? -1 : 1});
  return w;
}

BraidWord random_word(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  BraidWord w;
  w.strands = strands;
  const int n = len(rng);
  for (int i = 0; i < n; ++i)
    w.letters.push_back({index(rng), coin(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_SUITE_BEGIN("braid_words");

TEST_CASE("parse maps signed tokens to letters in order") {
  const BraidWord w = parse_braid("1 -2", 3);
  CHECK(w == word_of(3, {1, -2}));
  CHECK(parse_braid("", 3).empty());
  CHECK(parse_braid("1,-2,,1", 3) == word_of(3, {1, -2, 1}));
  CHECK(parse_braid("  1 ,\t-2 ", 3) == word_of(3, {1, -2}));
}

TEST_CASE("parse rejects bad tokens") {
  CHECK_THROWS_AS(parse_braid("3", 3), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid("-5", 4), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid("0", 3), MalformedWord);
  CHECK_THROWS_AS(parse_braid("1 x", 3), MalformedWord);
  CHECK_THROWS_AS(parse_braid("1.5", 3), MalformedWord);
  CHECK_THROWS_AS(parse_braid("1", 1), InvalidPunctureCount);
}

TEST_CASE("parse is a left inverse of the serializer") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = random_word(rng, 2 + trial % 5, 12);
    CHECK(parse_braid(to_text(w), w.strands) == w);
  }
}

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(free_reduce(parse_braid("1 -1 2", 3)) == word_of(3, {2}));
  CHECK(free_reduce(parse_braid("1 2 -2 -1", 3)).empty());
  CHECK(free_reduce(parse_braid("1 2 1", 3)) == word_of(3, {1, 2, 1}));
}

TEST_CASE("free reduction is idempotent and detected by is_freely_reduced") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord w = random_word(rng, 2 + trial % 4, 16);
    const BraidWord r = free_reduce(w);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("symmetry operations match their definitions") {
  CHECK(inverse(parse_braid("1 -2", 3)) == word_of(3, {2, -1}));
  CHECK(mirror(parse_braid("1 -2", 3)) == word_of(3, {-1, 2}));
  CHECK(flip(parse_braid("1 -2", 3)) == word_of(3, {2, -1}));
  CHECK(rotate(parse_braid("1 -2", 3), 1) == word_of(3, {-2, 1}));
  CHECK(rotate(parse_braid("1 -2", 3), 0) == word_of(3, {1, -2}));
  CHECK(rotate(parse_braid("1 -2", 3), 2) == word_of(3, {1, -2}));
  CHECK_THROWS_AS(rotate(parse_braid("1 -2", 3), 3), MalformedWord);
}

TEST_CASE("inverse, mirror and flip are involutions") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord w = random_word(rng, 2 + trial % 5, 10);
    CHECK(inverse(inverse(w)) == w);
    CHECK(mirror(mirror(w)) == w);
    CHECK(flip(flip(w)) == w);
  }
}

TEST_CASE("canonical form picks the smallest reduced orbit member") {
  CHECK(canonical_form(parse_braid("-2 1", 3)) == word_of(3, {1, -2}));
  CHECK(canonical_form(parse_braid("", 3)).empty());
  // brute force over the orbit of a single letter: {1, -1, 2, -2}
  CHECK(canonical_form(parse_braid("1", 3)) == word_of(3, {1}));
  CHECK(canonical_form(parse_braid("-2", 3)) == word_of(3, {1}));
}

TEST_CASE("canonical form stays freely reduced") {
  // the orbit of "1 2 -1" contains the reducible rotation "-1 1 2"
  const BraidWord c = canonical_form(parse_braid("1 2 -1", 3));
  CHECK(is_freely_reduced(c));
  CHECK(c.length() == 3);
}

TEST_CASE("canonical form is constant on symmetry orbits and idempotent") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> op(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord w = free_reduce(random_word(rng, 2 + trial % 4, 8));
    const BraidWord c = canonical_form(w);
    CHECK(canonical_form(c) == c);
    BraidWord image = w;
    for (int step = 0; step < 6; ++step) {
      switch (op(rng)) {
        case 0: image = inverse(image); break;
        case 1: image = mirror(image); break;
        case 2: image = flip(image); break;
        default:
          image = rotate(image, image.empty() ? 0 : rng() % image.length());
      }
    }
    CHECK(canonical_form(image) == c);
  }
}

TEST_CASE("alternation requires adjacent indices and opposite signs") {
  CHECK(is_alternating(parse_braid("1 -2 1 -2", 3)));
  CHECK_FALSE(is_alternating(parse_braid("1 2", 3)));
  CHECK_FALSE(is_alternating(parse_braid("1 -3", 4)));
  CHECK(is_alternating(parse_braid("", 3)));
  CHECK(is_alternating(parse_braid("2", 3)));
  CHECK(is_alternating(parse_braid("2 -3 2 -1", 4)));
  CHECK_FALSE(is_alternating(parse_braid("1 -2 -1", 3)));
}

TEST_SUITE_END();
