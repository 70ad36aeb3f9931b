#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filling/word.hpp"

namespace filling {

/// A finite group presentation: generating alphabet plus relator words.
/// Relators are stored as given (not symmetrized); cyclic permutations and
/// inverses are computed on demand where needed.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<Generator> alphabet, std::vector<Word> relators);

  const std::vector<Generator>& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::optional<int> generator_index(char name) const;

  /// K: the maximum relator length (0 for a free presentation).
  int max_relator_length() const;

  /// All relators have length at most three.
  bool is_triangular() const;

  Word word(const std::string& text) const { return parse_word(text, alphabet_); }
  std::string text(const Word& w) const { return render_word(w, alphabet_); }

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<Generator> alphabet_;
  std::vector<Word> relators_;
};

/// Split every relator of length >= 4 until all relators have length <= 3.
/// Splitting always takes the leftmost two letters: r = w1 w2 with |w1| = 2
/// becomes x^-1 w1 and x w2 for a fresh generator x, and the second part is
/// split further as needed, so a length-L relator contributes exactly L-3
/// new generators.  Original generators stay as a prefix of the alphabet;
/// fresh generators take unused letters starting at 't'.
Presentation triangularize(const Presentation& p);

/// Text format: first line "gens: a b t", then one "rel: <word>" line per
/// relator; '#' starts a comment.  render/parse round-trip bit-exactly.
Presentation parse_presentation(const std::string& text);
std::string render_presentation(const Presentation& p);

Presentation load_presentation_file(const std::string& path);
void save_presentation_file(const Presentation& p, const std::string& path,
                            const std::string& header = "");

}  // namespace filling
