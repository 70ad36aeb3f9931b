#include "filling/presentation.hpp"

#include <fstream>
#include <sstream>

#include "filling/errors.hpp"

namespace filling {

Presentation::Presentation(std::vector<Generator> alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet_.size(); ++j)
      if (alphabet_[i].name == alphabet_[j].name)
        throw ValidationError(ValidationError::Kind::Malformed,
                              "duplicate generator name '" + std::string(1, alphabet_[i].name) + "'");
  for (const Word& r : relators_) {
    if (r.empty())
      throw ValidationError(ValidationError::Kind::Malformed, "empty relator");
    for (Letter l : r)
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= alphabet_.size())
        throw ValidationError(ValidationError::Kind::Malformed,
                              "relator letter outside alphabet");
  }
}

std::optional<int> Presentation::generator_index(char name) const {
  for (std::size_t g = 0; g < alphabet_.size(); ++g)
    if (alphabet_[g].name == name) return static_cast<int>(g);
  return std::nullopt;
}

int Presentation::max_relator_length() const {
  std::size_t k = 0;
  for (const Word& r : relators_) k = std::max(k, r.size());
  return static_cast<int>(k);
}

bool Presentation::is_triangular() const { return max_relator_length() <= 3; }

namespace {

char fresh_letter(std::vector<Generator>& alphabet) {
  // Scan t..z then a..s for an unused name.
  const std::string order = "tuvwxyzabcdefghijklmnopqrs";
  for (char c : order) {
    bool used = false;
    for (const Generator& g : alphabet)
      if (g.name == c) used = true;
    if (!used) return c;
  }
  throw ValidationError(ValidationError::Kind::Malformed,
                        "alphabet exhausted while triangularizing");
}

}  // namespace

Presentation triangularize(const Presentation& p) {
  std::vector<Generator> alphabet = p.alphabet();
  std::vector<Word> relators;
  for (Word r : p.relators()) {
    while (r.size() >= 4) {
      char name = fresh_letter(alphabet);
      alphabet.push_back({name});
      std::int16_t fresh = static_cast<std::int16_t>(alphabet.size() - 1);
      // r = w1 w2 with |w1| = 2 becomes x^-1 w1 and x w2.
      Word head{Letter{fresh, -1}, r[0], r[1]};
      relators.push_back(head);
      Word tail{Letter{fresh, 1}};
      tail.insert(tail.end(), r.begin() + 2, r.end());
      r = std::move(tail);
    }
    relators.push_back(r);
  }
  return Presentation(std::move(alphabet), std::move(relators));
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Generator> alphabet;
  std::vector<Word> relators;
  bool have_gens = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "gens:") {
      if (have_gens)
        throw ParseError("duplicate gens: line", 0);
      std::string name;
      while (ls >> name) {
        if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0])))
          throw ParseError("generator name must be a single lowercase letter: '" + name + "'", 0);
        alphabet.push_back({name[0]});
      }
      have_gens = true;
    } else if (tag == "rel:") {
      if (!have_gens) throw ParseError("rel: before gens:", 0);
      std::string w;
      if (!(ls >> w)) throw ParseError("rel: with no word", 0);
      relators.push_back(parse_word(w, alphabet));
    } else {
      throw ParseError("unknown line tag '" + tag + "'", 0);
    }
  }
  if (!have_gens) throw ParseError("missing gens: line", 0);
  return Presentation(std::move(alphabet), std::move(relators));
}

std::string render_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const Generator& g : p.alphabet()) {
    out += ' ';
    out += g.name;
  }
  out += '\n';
  for (const Word& r : p.relators()) {
    out += "rel: ";
    out += render_word(r, p.alphabet());
    out += '\n';
  }
  return out;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file: " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

void save_presentation_file(const Presentation& p, const std::string& path,
                            const std::string& header) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write presentation file: " + path, 0);
  if (!header.empty()) out << header;
  out << render_presentation(p);
}

}  // namespace filling
