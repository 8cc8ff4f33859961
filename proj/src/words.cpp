#include "ggt/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ggt {

char letter_to_char(Letter x) {
  int idx = letter_index(x);
  return static_cast<char>(x > 0 ? 'a' + idx : 'A' + idx);
}

Letter letter_from_char(char c, int n_generators) {
  if (c >= 'a' && c <= 'z') {
    int idx = c - 'a';
    if (idx >= n_generators)
      fail("UnknownLetter", std::string("unknown letter '") + c + "'");
    return static_cast<Letter>(idx + 1);
  }
  if (c >= 'A' && c <= 'Z') {
    int idx = c - 'A';
    if (idx >= n_generators)
      fail("UnknownLetter", std::string("unknown letter '") + c + "'");
    return static_cast<Letter>(-(idx + 1));
  }
  fail("UnknownLetter", std::string("unknown letter '") + c + "'");
}

Word Word::reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter x : letters) {
    if (!out.empty() && out.back() == letter_inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

Word Word::parse(const std::string& text, int n_generators) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c, n_generators));
  return reduce(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& x : out) x = letter_inverse(x);
  return Word(std::move(out));
}

Word Word::pow(std::int64_t k) const {
  const Word base = k >= 0 ? *this : inverse();
  std::int64_t n = k >= 0 ? k : -k;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return reduce(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  std::vector<Letter> out(letters_.begin() + pos, letters_.begin() + pos + len);
  return Word(std::move(out));  // a factor of a reduced word is reduced
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word::reduce(std::move(out));
}

CyclicForm Word::cyclic_reduce() const {
  std::size_t i = 0, j = letters_.size();
  while (j - i >= 2 && letters_[i] == letter_inverse(letters_[j - 1])) {
    ++i;
    --j;
  }
  CyclicForm f;
  f.conjugator = Word(std::vector<Letter>(letters_.begin(), letters_.begin() + i));
  f.core = Word(std::vector<Letter>(letters_.begin() + i, letters_.begin() + j));
  return f;
}

Word Word::primitive_root() const {
  const Word core = cyclic_reduce().core;
  const std::size_t n = core.size();
  for (std::size_t period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (std::size_t i = period; i < n && ok; ++i)
      ok = core.letters_[i] == core.letters_[i - period];
    if (ok) return core.subword(0, period);
  }
  return core;
}

std::vector<std::int32_t> Word::abelianization(int n_generators) const {
  std::vector<std::int32_t> v(static_cast<std::size_t>(n_generators), 0);
  for (Letter x : letters_) v[static_cast<std::size_t>(letter_index(x))] += x > 0 ? 1 : -1;
  return v;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(letter_to_char(x));
  return s;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto key = [](Letter x) { return 2 * letter_index(x) + (x > 0 ? 0 : 1); };
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ka = key(a.letters_[i]), kb = key(b.letters_[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

Presentation::Presentation(std::vector<char> generator_names,
                           std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  if (names_.empty()) fail("EmptyGeneratorList", "no generators");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    char c = names_[i];
    if (c < 'a' || c > 'z')
      fail("BadGenerator", std::string("generator must be a lowercase letter, got '") + c + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == c)
        fail("DuplicateGenerator", std::string("duplicate generator '") + c + "'");
  }
  relators_.reserve(relators.size());
  for (const Word& r : relators) {
    Word core = r.cyclic_reduce().core;
    if (core.empty())
      fail("EmptyRelator", "relator reduces to the empty word");
    relators_.push_back(core);
  }
}

Presentation Presentation::parse(const std::string& text) {
  std::optional<std::string> gens_line, rels_line;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    if (line.compare(first, 11, "generators:") == 0) {
      if (gens_line) fail("ParseError", "duplicate 'generators:' line");
      gens_line = line.substr(first + 11);
    } else if (line.compare(first, 9, "relators:") == 0) {
      if (rels_line) fail("ParseError", "duplicate 'relators:' line");
      rels_line = line.substr(first + 9);
    } else {
      fail("ParseError", "unrecognised line: '" + line + "'");
    }
  }
  if (!gens_line) fail("ParseError", "missing 'generators:' line");
  if (!rels_line) fail("ParseError", "missing 'relators:' line");

  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::istringstream ss(s);
    std::string tok;
    while (ss >> tok) parts.push_back(tok);
    return parts;
  };

  std::vector<char> names;
  for (const std::string& tok : split(*gens_line)) {
    if (tok.size() != 1)
      fail("BadGenerator", "multi-letter generator name '" + tok + "'");
    names.push_back(tok[0]);
  }
  if (names.empty()) fail("EmptyGeneratorList", "no generators");

  // Letters map through position in the declared list: generator i is
  // names[i], its uppercase partner the inverse.
  auto parse_against = [&names](const std::string& tok) {
    std::vector<Letter> letters;
    for (char c : tok) {
      char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      int idx = -1;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == low) idx = static_cast<int>(i);
      if (idx < 0)
        fail("UnknownLetter", std::string("unknown letter '") + c + "'");
      bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
      letters.push_back(static_cast<Letter>(upper ? -(idx + 1) : idx + 1));
    }
    return Word::reduce(std::move(letters));
  };

  std::vector<Word> relators;
  for (const std::string& tok : split(*rels_line)) relators.push_back(parse_against(tok));
  return Presentation(std::move(names), std::move(relators));
}

Word Presentation::parse_word(const std::string& text) const {
  std::vector<Letter> letters;
  for (char c : text) {
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int idx = -1;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == low) idx = static_cast<int>(i);
    if (idx < 0) fail("UnknownLetter", std::string("unknown letter '") + c + "'");
    bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    letters.push_back(static_cast<Letter>(upper ? -(idx + 1) : idx + 1));
  }
  return Word::reduce(std::move(letters));
}

std::string Presentation::word_str(const Word& w) const {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w.letters()) {
    char name = names_[static_cast<std::size_t>(letter_index(x))];
    s.push_back(x > 0 ? name
                      : static_cast<char>(std::toupper(static_cast<unsigned char>(name))));
  }
  return s;
}

std::vector<Word> Presentation::standard_generators() const {
  std::vector<Word> gens;
  gens.reserve(2 * names_.size());
  for (int i = 0; i < n_generators(); ++i) {
    gens.push_back(Word::reduce({static_cast<Letter>(i + 1)}));
    gens.push_back(Word::reduce({static_cast<Letter>(-(i + 1))}));
  }
  return gens;
}

}  // namespace ggt
