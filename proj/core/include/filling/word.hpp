#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace filling {

/// A generator of a presentation.  The display name is a single lowercase
/// letter; the corresponding uppercase letter denotes its inverse in text.
struct Generator {
  char name;
  auto operator<=>(const Generator&) const = default;
};

/// One signed letter of a word: generator index plus sign (+1 or -1).
struct Letter {
  std::int16_t gen;
  std::int8_t sign;
  auto operator<=>(const Letter&) const = default;
};

inline Letter inverse(Letter l) { return {l.gen, static_cast<std::int8_t>(-l.sign)}; }

/// A word over a generating alphabet.  Words may be unreduced; reducedness
/// is a predicate, not an invariant.
using Word = std::vector<Letter>;

Word inverse(const Word& w);
bool is_reduced(const Word& w);

/// Parse a word in the lowercase/uppercase convention against an alphabet.
/// No implicit reduction is performed.  Throws ParseError naming the
/// position of any character that is not a generator or an inverse.
Word parse_word(const std::string& text, const std::vector<Generator>& alphabet);

std::string render_word(const Word& w, const std::vector<Generator>& alphabet);

/// Remove adjacent inverse pairs until none remain.  Equals the input in the
/// free group.  No cyclic reduction is performed: the base point of any
/// loop spelling the word is preserved.
Word free_reduce(const Word& w);

}  // namespace filling
