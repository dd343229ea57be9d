#include "braident/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "braident/errors.hpp"

namespace braident {

bool letter_less(const Letter& a, const Letter& b) {
  if (a.index != b.index) return a.index < b.index;
  return a.sign > b.sign;  // +1 sorts before -1
}

bool lex_less(const BraidWord& a, const BraidWord& b) {
  return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                      b.letters.begin(), b.letters.end(),
                                      letter_less);
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 2)
    throw InvalidPunctureCount("strand count must be at least 2, got " +
                               std::to_string(strands));
  BraidWord word;
  word.strands = strands;

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
        text[pos] == '\r' || text[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' &&
           text[end] != '\n' && text[end] != '\r' && text[end] != ',')
      ++end;
    const std::string_view token = text.substr(pos, end - pos);

    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw MalformedWord("not a signed integer: '" + std::string(token) + "'");
    if (value == 0)
      throw MalformedWord("generator index 0 does not exist");
    const int index = value < 0 ? -value : value;
    if (index >= strands)
      throw IndexOutOfRange("sigma_" + std::to_string(index) +
                            " does not exist with " + std::to_string(strands) +
                            " strands");
    word.letters.push_back({index, value < 0 ? -1 : 1});
    pos = end;
  }
  return word;
}

std::string to_text(const BraidWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word.letters[i].sign * word.letters[i].index);
  }
  return out;
}

bool is_freely_reduced(const BraidWord& word) {
  for (std::size_t i = 1; i < word.letters.size(); ++i)
    if (word.letters[i].index == word.letters[i - 1].index &&
        word.letters[i].sign == -word.letters[i - 1].sign)
      return false;
  return true;
}

BraidWord free_reduce(BraidWord word) {
  std::vector<Letter> out;
  out.reserve(word.letters.size());
  for (const Letter& l : word.letters) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  word.letters = std::move(out);
  return word;
}

BraidWord inverse(BraidWord word) {
  std::reverse(word.letters.begin(), word.letters.end());
  for (Letter& l : word.letters) l.sign = -l.sign;
  return word;
}

BraidWord mirror(BraidWord word) {
  for (Letter& l : word.letters) l.sign = -l.sign;
  return word;
}

BraidWord flip(BraidWord word) {
  for (Letter& l : word.letters) l.index = word.strands - l.index;
  return word;
}

BraidWord rotate(BraidWord word, std::size_t k) {
  if (k > word.letters.size())
    throw MalformedWord("rotation offset exceeds word length");
  std::rotate(word.letters.begin(), word.letters.begin() + k, word.letters.end());
  return word;
}

std::vector<BraidWord> symmetry_orbit(const BraidWord& word) {
  // Mirror and flip act letterwise and commute with everything; inverse
  // conjugates rotation to its inverse. Every composition therefore reduces
  // to rotate^k . inverse^a . mirror^b . flip^c.
  std::vector<BraidWord> orbit;
  for (int use_inverse = 0; use_inverse < 2; ++use_inverse) {
    for (int use_mirror = 0; use_mirror < 2; ++use_mirror) {
      for (int use_flip = 0; use_flip < 2; ++use_flip) {
        BraidWord base = word;
        if (use_inverse) base = inverse(std::move(base));
        if (use_mirror) base = mirror(std::move(base));
        if (use_flip) base = flip(std::move(base));
        const std::size_t turns = std::max<std::size_t>(base.length(), 1);
        for (std::size_t k = 0; k < turns; ++k)
          orbit.push_back(rotate(base, k));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end(), lex_less);
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

BraidWord canonical_form(const BraidWord& word) {
  const std::vector<BraidWord> orbit = symmetry_orbit(word);
  for (const BraidWord& candidate : orbit)  // sorted, first reduced one wins
    if (is_freely_reduced(candidate)) return candidate;
  return orbit.front();
}

bool is_alternating(const BraidWord& word) {
  for (std::size_t i = 1; i < word.letters.size(); ++i) {
    const Letter& prev = word.letters[i - 1];
    const Letter& cur = word.letters[i];
    if (cur.index != prev.index + 1 && cur.index != prev.index - 1) return false;
    if (cur.sign != -prev.sign) return false;
  }
  return true;
}

}  // namespace braident
