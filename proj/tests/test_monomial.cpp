#include "doctest.h"

#include "qu2/canrep.hpp"
#include "qu2/monomial.hpp"
#include "support.hpp"

using namespace qu2;

namespace {

Monomial mono(const char* a, long k, const char* b) {
  return {Word::parse(a), Int(k), Word::parse(b)};
}

// m1 * m2 evaluated pointwise, or nullopt where the product vanishes
std::optional<Int> apply_product(const Monomial& m1, const Monomial& m2, const Int& n) {
  auto j = apply_monomial(m2, n);
  if (!j) return std::nullopt;
  return apply_monomial(m1, *j);
}

}  // namespace

TEST_CASE("push_u_through examples") {
  auto r = push_u_through(1, Word("2"));
  CHECK(r.word == Word("1"));
  CHECK(r.power == 0);
  r = push_u_through(2, Word("2"));
  CHECK(r.word == Word("2"));
  CHECK(r.power == 1);
  r = push_u_through(4, Word("12"));
  CHECK(r.word == Word("12"));
  CHECK(r.power == 1);
  r = push_u_through(-1, Word("2"));
  CHECK(r.word == Word("1"));
  CHECK(r.power == -1);
  r = push_u_through(5, Word());
  CHECK(r.word.empty());
  CHECK(r.power == 5);
}

TEST_CASE("push_u_through beyond 64 bits") {
  const Int huge = pow2(100) * 3 + 1;
  auto r = push_u_through(huge, Word("2"));
  CHECK(r.word == Word("1"));
  CHECK(r.power == pow2(99) * 3);
  std::string long_word(70, '1');
  r = push_u_through(1, Word(long_word));
  CHECK(r.word == Word(std::string(70, '2')));
  CHECK(r.power == 1);
}

TEST_CASE("property: push_u_through identities") {
  testing::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Word a = testing::random_word(rng, 10);
    const Int q(testing::uniform(rng, -50, 50));
    auto r0 = push_u_through(0, a);
    CHECK(r0.word == a);
    CHECK(r0.power == 0);
    auto rq = push_u_through(pow2(a.size()) * q, a);
    CHECK(rq.word == a);
    CHECK(rq.power == q);
    // small path against the exact identity t(a) + k = 2^|a| q + t(a2)
    const Int k(testing::uniform(rng, -1000, 1000));
    auto r = push_u_through(k, a);
    CHECK(encode(a).offset + k == pow2(a.size()) * r.power + encode(r.word).offset);
  }
}

TEST_CASE("mono_mul examples") {
  auto p = mono_mul(mono("e", 1, "e"), mono("e", 1, "e"));
  REQUIRE(p);
  CHECK(*p == mono("e", 2, "e"));
  CHECK_FALSE(mono_mul(mono("e", 0, "1"), mono("2", 0, "e")));
  p = mono_mul(mono("2", 1, "1"), mono("1", 0, "2"));
  REQUIRE(p);
  CHECK(*p == mono("2", 1, "2"));
  // S_2^* U S_2 = S_2^* S_1 = 0 is not a monomial case; U^2 S_2 = S_2 U is
  p = mono_mul(mono("e", 2, "e"), mono("2", 0, "e"));
  REQUIRE(p);
  CHECK(*p == mono("2", 1, "e"));
}

TEST_CASE("adjoint examples") {
  CHECK(adjoint(mono("e", 1, "e")) == mono("e", -1, "e"));
  CHECK(adjoint(mono("2", 0, "e")) == mono("e", 0, "2"));
  CHECK(adjoint(mono("1", 3, "21")) == mono("21", -3, "1"));
}

TEST_CASE("expand_right examples") {
  auto [a, b] = expand_right(mono("e", 2, "e"));
  CHECK(a == mono("1", 1, "1"));
  CHECK(b == mono("2", 1, "2"));
  std::tie(a, b) = expand_right(mono("e", 1, "e"));
  CHECK(a == mono("1", 0, "2"));
  CHECK(b == mono("2", 1, "1"));
  std::tie(a, b) = expand_right(mono("2", 1, "2"));
  CHECK(a == mono("21", 0, "22"));
  CHECK(b == mono("22", 1, "21"));
  std::tie(a, b) = expand_right(mono("e", -1, "e"));
  CHECK(a == mono("1", -1, "2"));
  CHECK(b == mono("2", 0, "1"));
}

TEST_CASE("text form") {
  CHECK(to_string(mono("112", 3, "21")) == "S[112] U^3 S*[21]");
  CHECK(to_string(mono("e", -4, "e")) == "U^-4");
  CHECK(to_string(mono("2", 0, "e")) == "S[2]");
  CHECK(to_string(mono("e", 0, "e")) == "1");
  CHECK(to_string(mono("e", 1, "e")) == "U");
}

TEST_CASE("property: mono_mul agrees with the canonical representation") {
  testing::Rng rng(4);
  for (int i = 0; i < 400; ++i) {
    const Monomial m1 = testing::random_monomial(rng, 4, 9);
    const Monomial m2 = testing::random_monomial(rng, 4, 9);
    const auto p = mono_mul(m1, m2);
    for (long n = -70; n <= 70; ++n) {
      const auto expected = apply_product(m1, m2, n);
      const auto got = p ? apply_monomial(*p, n) : std::nullopt;
      REQUIRE(expected == got);
    }
  }
}

TEST_CASE("property: mono_mul is associative and reverses under adjoint") {
  testing::Rng rng(5);
  int both_defined = 0;
  for (int i = 0; i < 2000; ++i) {
    const Monomial a = testing::random_monomial(rng, 3, 6);
    const Monomial b = testing::random_monomial(rng, 3, 6);
    const Monomial c = testing::random_monomial(rng, 3, 6);
    const auto ab = mono_mul(a, b);
    const auto bc = mono_mul(b, c);
    if (ab && bc) {
      ++both_defined;
      const auto left = mono_mul(*ab, c);
      const auto right = mono_mul(a, *bc);
      CHECK(left == right);
    }
    if (ab) {
      const auto rev = mono_mul(adjoint(b), adjoint(a));
      REQUIRE(rev);
      CHECK(*rev == adjoint(*ab));
    }
  }
  CHECK(both_defined > 100);
}

TEST_CASE("property: expand_right preserves the operator") {
  testing::Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const Monomial m = testing::random_monomial(rng, 4, 20);
    const auto [a, b] = expand_right(m);
    for (long n = -80; n <= 80; ++n) {
      const auto lhs = apply_monomial(m, n);
      const auto ra = apply_monomial(a, n);
      const auto rb = apply_monomial(b, n);
      REQUIRE_FALSE((ra && rb));
      REQUIRE(lhs == (ra ? ra : rb));
    }
  }
}
