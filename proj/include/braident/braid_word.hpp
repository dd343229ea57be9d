#ifndef BRAIDENT_BRAID_WORD_HPP
#define BRAIDENT_BRAID_WORD_HPP

#include <string>
#include <string_view>
#include <vector>

namespace braident {

/// One signed generator letter: index i of sigma_i and an exponent of +1 or -1.
struct Letter {
  int index = 1;
  int sign = 1;

  // structural order for use as a container key; the canonical word order
  // is letter_less below
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word over the standard generators sigma_1 .. sigma_{strands-1}.
/// The empty letter sequence is the identity braid.
struct BraidWord {
  int strands = 2;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Letter order used everywhere a word ordering is needed:
/// index ascending, then +1 before -1.
bool letter_less(const Letter& a, const Letter& b);

/// Lexicographic order on the letter sequences (strand counts are not compared).
bool lex_less(const BraidWord& a, const BraidWord& b);

/// Parses a whitespace- or comma-separated list of nonzero signed integers.
/// Token k becomes the letter (index=|k|, sign=sign(k)).
/// Throws MalformedWord for zero or non-integer tokens, IndexOutOfRange when
/// |k| >= strands, InvalidPunctureCount when strands < 2.
BraidWord parse_braid(std::string_view text, int strands);

/// Serializes back to the text format accepted by parse_braid.
std::string to_text(const BraidWord& word);

bool is_freely_reduced(const BraidWord& word);

/// Deletes adjacent sigma_i^e sigma_i^-e pairs until none remain.
BraidWord free_reduce(BraidWord word);

/// Group inverse: reversed letter order, all signs negated.
BraidWord inverse(BraidWord word);

/// All signs negated.
BraidWord mirror(BraidWord word);

/// Generator index i becomes strands - i.
BraidWord flip(BraidWord word);

/// Moves the first k letters to the end (conjugation by the prefix).
/// Requires 0 <= k <= length.
BraidWord rotate(BraidWord word, std::size_t k);

/// Every word reachable from `word` by compositions of inverse, mirror,
/// flip and rotation. Deduplicated; at most 8 * max(length, 1) entries.
/// Rotations of a freely reduced word need not be freely reduced, so the
/// result can contain reducible words.
std::vector<BraidWord> symmetry_orbit(const BraidWord& word);

/// Deterministic orbit representative: the lexicographically smallest
/// freely reduced member of the symmetry orbit (smallest member outright
/// if the orbit has no freely reduced word).
BraidWord canonical_form(const BraidWord& word);

/// True iff consecutive letters always have adjacent indices and opposite
/// signs. Vacuously true for empty and single-letter words.
bool is_alternating(const BraidWord& word);

}  // namespace braident

#endif
