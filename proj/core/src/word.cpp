#include "filling/word.hpp"

#include <cctype>

#include "filling/errors.hpp"

namespace filling {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == inverse(w[i + 1])) return false;
  return true;
}

Word parse_word(const std::string& text, const std::vector<Generator>& alphabet) {
  Word out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::int8_t sign = std::islower(static_cast<unsigned char>(c)) ? 1 : -1;
    std::int16_t gen = -1;
    for (std::size_t g = 0; g < alphabet.size(); ++g)
      if (alphabet[g].name == low) {
        gen = static_cast<std::int16_t>(g);
        break;
      }
    if (gen < 0 || !std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("unknown character '" + std::string(1, c) + "' at position " +
                           std::to_string(i),
                       i);
    out.push_back({gen, sign});
  }
  return out;
}

std::string render_word(const Word& w, const std::vector<Generator>& alphabet) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) {
    char c = alphabet.at(static_cast<std::size_t>(l.gen)).name;
    out += l.sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace filling
