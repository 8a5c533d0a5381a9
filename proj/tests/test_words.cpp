#include "doctest.h"

#include "qu2/errors.hpp"
#include "qu2/word.hpp"
#include "support.hpp"

using namespace qu2;

TEST_CASE("encode examples") {
  CHECK(encode(Word()).length == 0);
  CHECK(encode(Word()).offset == 0);
  CHECK(encode(Word("1")).offset == 1);
  CHECK(encode(Word("21")).length == 2);
  CHECK(encode(Word("21")).offset == 2);
  CHECK(encode(Word("12")).offset == 1);
  CHECK(encode(Word("111")).offset == 7);
}

TEST_CASE("decode examples and range") {
  CHECK(decode(0, 0) == Word());
  CHECK(decode(1, 1) == Word("1"));
  CHECK(decode(2, 2) == Word("21"));
  CHECK_THROWS_AS(decode(2, 4), DomainError);
  CHECK_THROWS_AS(decode(2, -1), DomainError);
  CHECK_THROWS_AS(decode(0, 1), DomainError);
}

TEST_CASE("word syntax") {
  CHECK(Word::parse("e").empty());
  CHECK(Word::parse("112").str() == "112");
  CHECK(Word().str() == "e");
  CHECK_THROWS_AS(Word::parse("13"), UsageError);
  CHECK_THROWS_AS(Word::parse(""), UsageError);
  try {
    Word::parse("1123");
  } catch (const UsageError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("lexicographic order puts prefixes first and 1 before 2") {
  CHECK(Word() < Word("1"));
  CHECK(Word("1") < Word("11"));
  CHECK(Word("12") < Word("2"));
  CHECK(Word("21") < Word("22"));
}

TEST_CASE("is_partition examples") {
  const std::vector<Word> root{Word()};
  CHECK(is_partition(root));
  const std::vector<Word> three{Word("1"), Word("21"), Word("22")};
  CHECK(is_partition(three));
  const std::vector<Word> incomplete{Word("1"), Word("21")};
  CHECK_FALSE(is_partition(incomplete));
  const std::vector<Word> prefix{Word("1"), Word("12"), Word("2")};
  CHECK_FALSE(is_partition(prefix));
  const std::vector<Word> repeated{Word("1"), Word("1")};
  CHECK_FALSE(is_partition(repeated));
  CHECK_FALSE(is_partition(std::vector<Word>{}));
}

TEST_CASE("lex rank and unrank") {
  CHECK(lex_rank(Word("11")) == 0);
  CHECK(lex_rank(Word("12")) == 1);
  CHECK(lex_rank(Word("21")) == 2);
  CHECK(lex_rank(Word("22")) == 3);
  const auto words = words_of_length(3);
  REQUIRE(words.size() == 8);
  for (std::uint64_t r = 0; r < 8; ++r) {
    CHECK(lex_rank(words[r]) == r);
    CHECK(lex_unrank(3, r) == words[r]);
  }
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("property: decode inverts encode") {
  testing::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const Word w = testing::random_word(rng, 40);
    const Encoded c = encode(w);
    CHECK(decode(c.length, c.offset) == w);
  }
}

TEST_CASE("property: encode is a bijection onto residues at each length") {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::vector<bool> hit(std::size_t{1} << n, false);
    for (const Word& w : words_of_length(n)) {
      const Int t = encode(w).offset;
      REQUIRE(t >= 0);
      REQUIRE(t < pow2(n));
      const auto idx = static_cast<std::size_t>(t);
      CHECK_FALSE(hit[idx]);
      hit[idx] = true;
    }
  }
}

TEST_CASE("property: caret split preserves partitions") {
  testing::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    std::vector<Word> p = testing::random_tree(rng, static_cast<std::size_t>(testing::uniform(rng, 1, 12)));
    REQUIRE(is_partition(p));
    const auto j = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(p.size()) - 1));
    const Word w = p[j];
    p.erase(p.begin() + static_cast<std::ptrdiff_t>(j));
    CHECK_FALSE(is_partition(p));
    p.push_back(w.child('1'));
    p.push_back(w.child('2'));
    CHECK(is_partition(p));
  }
}
