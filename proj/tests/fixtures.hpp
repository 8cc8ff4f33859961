#pragma once

#include <string>

#include "ggt/words.hpp"

namespace ggt::tests {

inline Presentation f2() {
  return Presentation::parse("generators: a b\nrelators:\n");
}

// Genus-2 surface group.
inline Presentation surf() {
  return Presentation::parse("generators: a b c d\nrelators: abABcdCD\n");
}

inline Presentation zz() {
  return Presentation::parse("generators: a b\nrelators: abAB\n");
}

inline Word w(const Presentation& p, const std::string& text) {
  return p.parse_word(text);
}

inline std::string rep(int count, const std::string& s) {
  std::string out;
  for (int i = 0; i < count; ++i) out += s;
  return out;
}

}  // namespace ggt::tests
