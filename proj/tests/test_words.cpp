#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "ggt/words.hpp"

using namespace ggt;
using namespace ggt::tests;

TEST_CASE("parse_presentation basic forms") {
  Presentation p = Presentation::parse("generators: a b\nrelators: abAB\n");
  CHECK(p.n_generators() == 2);
  CHECK(p.relators().size() == 1);
  CHECK(p.relators()[0].size() == 4);

  Presentation free2 = Presentation::parse("generators: a b\nrelators:\n");
  CHECK(free2.relators().empty());

  CHECK_THROWS_WITH_AS(Presentation::parse("generators: a\nrelators: abA\n"),
                       doctest::Contains("unknown letter 'b'"), Error);
  CHECK_THROWS_AS(Presentation::parse("generators: a a\nrelators:\n"), Error);
  CHECK_THROWS_AS(Presentation::parse("generators:\nrelators:\n"), Error);
  CHECK_THROWS_AS(Presentation::parse("generators: ab\nrelators:\n"), Error);
}

TEST_CASE("parse_presentation comments, CRLF, relator normalisation") {
  Presentation p =
      Presentation::parse("# comment\r\ngenerators: a b\r\n# another\nrelators: Aba ab\r\n");
  // "Aba" loads cyclically reduced.
  CHECK(p.word_str(p.relators()[0]) == "b");
  CHECK(p.word_str(p.relators()[1]) == "ab");
}

TEST_CASE("free_reduce") {
  Presentation p = f2();
  CHECK(w(p, "abBA").empty());
  CHECK(w(p, "abAB").str() == "abAB");
  CHECK(w(p, "aBbA").empty());
}

TEST_CASE("cyclic_reduce") {
  Presentation p = f2();
  auto f = w(p, "Aba").cyclic_reduce();
  CHECK(f.core.str() == "b");
  CHECK(f.conjugator.str() == "A");

  f = w(p, "ab").cyclic_reduce();
  CHECK(f.core.str() == "ab");
  CHECK(f.conjugator.empty());

  f = w(p, "Baab").cyclic_reduce();
  CHECK(f.core.str() == "aa");
  CHECK(f.conjugator.str() == "B");
}

TEST_CASE("free reduction properties on random inputs") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> letters;
    int len = static_cast<int>(rng() % 30);
    for (int i = 0; i < len; ++i) {
      int idx = static_cast<int>(rng() % 3) + 1;
      letters.push_back(static_cast<Letter>(rng() % 2 ? idx : -idx));
    }
    Word once = Word::reduce(letters);
    CHECK(Word::reduce(once.letters()) == once);  // idempotent
    CHECK((once * once.inverse()).empty());

    auto f = once.cyclic_reduce();
    CHECK(f.core.size() <= once.size());
    CHECK(f.conjugator * f.core * f.conjugator.inverse() == once);
  }
}

TEST_CASE("primitive root extraction") {
  Presentation p = f2();
  CHECK(w(p, "aaaa").primitive_root().str() == "a");
  CHECK(w(p, "abab").primitive_root().str() == "ab");
  CHECK(w(p, "ab").primitive_root().str() == "ab");
  // Root of a conjugate comes from the core.
  CHECK(w(p, "Baab").primitive_root().str() == "a");
}

TEST_CASE("word i/o through declared generator names") {
  Presentation p = Presentation::parse("generators: c d\nrelators:\n");
  Word cw = p.parse_word("cdC");
  CHECK(p.word_str(cw) == "cdC");
  CHECK(cw.size() == 3);
}

TEST_CASE("shortlex order") {
  Presentation p = f2();
  CHECK(shortlex_less(w(p, "a"), w(p, "A")));
  CHECK(shortlex_less(w(p, "A"), w(p, "b")));
  CHECK(shortlex_less(w(p, "b"), w(p, "aa")));
  CHECK(!shortlex_less(w(p, "aa"), w(p, "aa")));
}
