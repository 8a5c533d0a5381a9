#include "doctest.h"

#include "qu2/canrep.hpp"
#include "qu2/errors.hpp"
#include "qu2/kernels.hpp"
#include "qu2/parse.hpp"
#include "support.hpp"

using namespace qu2;

namespace {

using Image = std::vector<std::pair<Rational, Int>>;

DyadicAngle angle(long a, long b) { return DyadicAngle(Rational(a, b)); }

DecoratedPermutative decorate(const Element& e, const std::vector<DyadicAngle>& phases) {
  DecoratedPermutative v;
  std::size_t i = 0;
  for (const auto& [m, c] : e.terms()) v.terms.emplace_back(phases.at(i++), m);
  return v;
}

}  // namespace

TEST_CASE("apply_basis examples") {
  CHECK(apply_basis(parse_element("U"), 5) == Image{{1, 6}});
  CHECK(apply_basis(parse_element("S[2] U S*[1]"), 3) == Image{{1, 4}});
  CHECK(apply_basis(parse_element("S1*"), 2).empty());
  CHECK(apply_basis(parse_element("S1"), -3) == Image{{1, -5}});
  CHECK(apply_basis(parse_element("U + 2 U"), 0) == Image{{3, 1}});
  CHECK(apply_basis(parse_element("U - U"), 0).empty());
}

TEST_CASE("semantic_eq examples") {
  CHECK(semantic_eq(parse_element("U^2"), parse_element("S[1] U S*[1] + S[2] U S*[2]")));
  CHECK_FALSE(semantic_eq(parse_element("U"), parse_element("U*")));
  CHECK(semantic_eq(mul(big_F(), big_F()), Element::identity()));
  CHECK_FALSE(semantic_eq(parse_element("S[1] U^3 S*[1] + S[2] U^2 S*[2]"),
                          parse_element("S[1] U^3 S*[1] + S[22] U^-1 S*[2]")));
}

TEST_CASE("dyadic angles") {
  CHECK(to_string(angle(5, 4)) == "1/4");
  CHECK(to_string(angle(-1, 4)) == "3/4");
  CHECK(angle(1, 2) + angle(1, 2) == DyadicAngle());
  CHECK(Int(3) * angle(1, 4) == angle(3, 4));
  CHECK_THROWS_AS(angle(1, 3), DomainError);
  CHECK_THROWS_AS(DyadicAngle::parse("x"), UsageError);
}

TEST_CASE("phase_apply examples") {
  auto v = phase_apply(angle(1, 2), parse_generator_word("Uz"), 3);
  REQUIRE(v);
  CHECK(v->phase == angle(1, 2));
  CHECK(v->index == 3);
  for (long k = -20; k <= 20; ++k) {
    v = phase_apply(angle(1, 4), parse_generator_word("Uz U Uz*"), k);
    REQUIRE(v);
    CHECK(v->phase == angle(1, 4));
    CHECK(v->index == k + 1);
  }
  v = phase_apply(angle(3, 8), {}, 11);
  REQUIRE(v);
  CHECK(v->phase.is_zero());
  CHECK(v->index == 11);
  v = phase_apply(DyadicAngle(), parse_generator_word("Uz[1/4] U S2*"), 6);
  REQUIRE(v);
  CHECK(v->index == 4);
  CHECK(v->phase == DyadicAngle());  // 4 * 1/4 = 1
  CHECK_FALSE(phase_apply(DyadicAngle(), parse_generator_word("S2*"), 3));
  CHECK_THROWS_AS(parse_generator_word("U S3"), UsageError);
  CHECK_THROWS_AS(parse_generator_word("Uz[1/3]"), UsageError);
}

TEST_CASE("generator words agree with element evaluation") {
  const auto word = parse_generator_word("S1 U* S2* S2 U");
  const Element e = parse_element("S1 U* S2* S2 U");
  for (long k = -30; k <= 30; ++k) {
    const auto v = phase_apply(DyadicAngle(), word, k);
    const auto img = apply_basis(e, k);
    if (!v) {
      CHECK(img.empty());
    } else {
      CHECK(img == Image{{1, v->index}});
    }
  }
}

TEST_CASE("dp_split examples") {
  DecoratedPermutative v = decorate(big_F(), {DyadicAngle(), DyadicAngle(), DyadicAngle(), DyadicAngle()});
  DpSplit s = dp_split(v);
  REQUIRE(s.d.size() == 1);
  CHECK(s.d[0].first.empty());
  CHECK(s.d[0].second.is_zero());
  CHECK(eq(s.P, big_F()));

  const Element u1 = normalize(parse_element("U"), 1);
  v = decorate(u1, {angle(1, 2), angle(1, 2)});
  s = dp_split(v);
  REQUIRE(s.d.size() == 1);
  CHECK(s.d[0].second == angle(1, 2));
  CHECK(eq(s.P, parse_element("U")));
  CHECK(dp_recomposes(v, s, -50, 50));

  v = decorate(big_F(), {DyadicAngle(), angle(1, 4), angle(1, 4), angle(1, 2)});
  s = dp_split(v);
  REQUIRE(s.d.size() == 4);
  CHECK(s.d[1].first == Word("12"));
  CHECK(s.d[1].second == angle(1, 4));
  CHECK(dp_recomposes(v, s, -50, 50));

  v = decorate(big_F(), {angle(1, 4), angle(1, 4), DyadicAngle(), DyadicAngle()});
  s = dp_split(v);
  REQUIRE(s.d.size() == 2);
  CHECK(s.d[0].first == Word("1"));
  CHECK(s.d[1].first == Word("2"));
  CHECK(dp_recomposes(v, s, -50, 50));

  DecoratedPermutative bad;
  bad.terms.emplace_back(DyadicAngle(), Monomial::isometry(Word("1")));
  CHECK_THROWS_AS(dp_split(bad), DomainError);
}

TEST_CASE("property: W unitaries act as bijections on index windows") {
  testing::Rng rng(30);
  for (int i = 0; i < 50; ++i) {
    const Element u = testing::random_w_element(rng, 6, 5);
    std::set<Int> images;
    for (long k = -200; k <= 200; ++k) {
      const auto img = apply_basis(u, k);
      REQUIRE(img.size() == 1);
      CHECK(img[0].first == 1);
      images.insert(img[0].second);
    }
    CHECK(images.size() == 401);
    const Element inv = adjoint(u);
    for (long k = -50; k <= 50; ++k) {
      const auto pre = apply_basis(inv, k);
      REQUIRE(pre.size() == 1);
      CHECK(apply_basis(u, pre[0].second) == Image{{1, k}});
    }
  }
}

TEST_CASE("kernels: parallel sweeps match the serial reference") {
  CHECK(factorial(5) == 120);
  CHECK(unrank_permutation(3, 0) == Perm{0, 1, 2});
  CHECK(unrank_permutation(3, 5) == Perm{2, 1, 0});
  auto pred = [](std::span<const std::uint32_t> p) { return p[0] < p[p.size() - 1] && p[1] != 2; };
  CHECK(permutation_sweep(6, pred) == reference::permutation_sweep(6, pred));
  CHECK(permutation_sweep(6, pred, 2) == reference::permutation_sweep(6, pred));
  CHECK_THROWS_AS(permutation_sweep(11, pred), CapacityError);

  testing::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Element a = testing::random_element(rng, 4, 6, 10);
    const Element b = (i % 2) ? testing::rewrite(rng, a) : testing::random_element(rng, 4, 6, 10);
    const std::size_t depth = std::max(a.depth(), b.depth());
    CHECK(oracle_sweep(a, b, depth) == reference::oracle_sweep(a, b, depth));
  }
  CHECK_THROWS_AS(oracle_sweep(Element::identity(), Element::identity(), 30), CapacityError);
}
