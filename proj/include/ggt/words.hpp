#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggt/error.hpp"

namespace ggt {

// A letter is a signed generator: +(i+1) for generator i, -(i+1) for its
// inverse. Serialisation uses lowercase a-z for generators and the matching
// uppercase letter for inverses.
using Letter = std::int8_t;

inline Letter letter_inverse(Letter x) { return static_cast<Letter>(-x); }
inline int letter_index(Letter x) { return (x > 0 ? x : -x) - 1; }

char letter_to_char(Letter x);
Letter letter_from_char(char c, int n_generators);

struct CyclicForm;

// Freely reduced word over a fixed alphabet. Words are immutable values;
// every constructor and operation reduces its result.
class Word {
 public:
  Word() = default;

  // Reduces the given letter sequence.
  static Word reduce(std::vector<Letter> letters);

  // Parses "abAB"; validates letters against the alphabet size.
  static Word parse(const std::string& text, int n_generators);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;
  Word pow(std::int64_t k) const;
  Word subword(std::size_t pos, std::size_t len) const;

  // Freely reduced product.
  friend Word operator*(const Word& a, const Word& b);

  // Decomposition w = conjugator * core * conjugator^{-1} with the core
  // cyclically reduced.
  CyclicForm cyclic_reduce() const;

  // Shortest word s with core = s^k; identity for cyclically reduced cores.
  Word primitive_root() const;

  // Exponent sum per generator; a cheap sound invariant for equality
  // prefiltering (it is a homomorphism to Z^n).
  std::vector<std::int32_t> abelianization(int n_generators) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  // Shortlex: length first, then letter order a < A < b < B < ...
  friend bool shortlex_less(const Word& a, const Word& b);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

struct CyclicForm {
  Word core;
  Word conjugator;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w.letters()) {
      h ^= static_cast<std::size_t>(static_cast<std::uint8_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Group presentation over single-letter generators a-z. Relators are stored
// cyclically reduced; the original ordering is preserved.
class Presentation {
 public:
  Presentation(std::vector<char> generator_names, std::vector<Word> relators);

  // File format: line `generators: a b`, line `relators: abAB ...` (possibly
  // empty), lines starting with '#' ignored, LF or CRLF.
  static Presentation parse(const std::string& text);

  int n_generators() const { return static_cast<int>(names_.size()); }
  const std::vector<char>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

  // The 2n single-letter words g_1, g_1^{-1}, g_2, ... in letter order.
  std::vector<Word> standard_generators() const;

  // Word I/O through the declared generator names (generator i prints as
  // names[i], its inverse as the uppercase partner).
  Word parse_word(const std::string& text) const;
  std::string word_str(const Word& w) const;

 private:
  std::vector<char> names_;
  std::vector<Word> relators_;
};

}  // namespace ggt
