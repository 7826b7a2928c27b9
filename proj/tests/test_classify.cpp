#include "pptkit/classify.hpp"

#include "pptkit/st_enum.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <string>

using namespace pptkit;

namespace {

const char* kFirst33 = "ABCDEBECFAABDDEBEFCACDDEBFCFAABCD";

}  // namespace

TEST_CASE("label and digit mappings") {
  CHECK(class_digit(ClassLabel::A) == 0);
  CHECK(class_digit(ClassLabel::F) == 5);
  CHECK(class_char(ClassLabel::C) == 'C');
  CHECK(class_from_char('A') == ClassLabel::A);
  CHECK(class_from_char('F') == ClassLabel::F);
  CHECK_THROWS_AS(class_from_char('G'), ValidationError);
  CHECK_THROWS_AS(class_from_char('a'), ValidationError);
  CHECK(class_from_digit(4) == ClassLabel::E);
  CHECK_THROWS_AS(class_from_digit(6), ValidationError);
  for (int d = 0; d < 6; ++d) {
    ClassLabel l = class_from_digit(d);
    CHECK(class_digit(l) == d);
    CHECK(class_from_char(class_char(l)) == l);
  }
}

TEST_CASE("profile examples") {
  DivisibilityProfile p345 = profile(Ppt(3, 4, 5));
  CHECK(p345.div3 == Component::A);
  CHECK(p345.div5 == Component::C);

  DivisibilityProfile p15 = profile(Ppt(15, 8, 17));
  CHECK(p15.div3 == Component::A);
  CHECK(p15.div5 == Component::A);

  DivisibilityProfile p11 = profile(Ppt(11, 60, 61));
  CHECK(p11.div3 == Component::B);
  CHECK(p11.div5 == Component::B);

  CHECK(component_char(Component::A) == 'a');
  CHECK(component_char(Component::B) == 'b');
  CHECK(component_char(Component::C) == 'c');
}

TEST_CASE("classify examples from the class tables") {
  CHECK(classify(Ppt(3, 4, 5)) == ClassLabel::A);
  CHECK(classify(Ppt(33, 56, 65)) == ClassLabel::A);
  CHECK(classify(Ppt(5, 12, 13)) == ClassLabel::B);
  CHECK(classify(Ppt(35, 12, 37)) == ClassLabel::B);
  CHECK(classify(Ppt(15, 8, 17)) == ClassLabel::C);
  CHECK(classify(Ppt(7, 24, 25)) == ClassLabel::D);
  CHECK(classify(Ppt(21, 20, 29)) == ClassLabel::E);
  CHECK(classify(Ppt(9, 40, 41)) == ClassLabel::E);
  CHECK(classify(Ppt(11, 60, 61)) == ClassLabel::F);
  CHECK(classify(Ppt(119, 120, 169)) == ClassLabel::F);
}

TEST_CASE("classify_from_st examples") {
  CHECK(classify_from_st(StPair(3, 1)) == ClassLabel::A);
  CHECK(classify_from_st(StPair(5, 3)) == ClassLabel::C);
  CHECK(classify_from_st(StPair(11, 1)) == ClassLabel::F);
}

TEST_CASE("the first 33 labels match the published column") {
  StEnumerator en(Ordering::ByHypotenuse, EnumLimits{.max_count = 33});
  std::string got;
  while (auto e = en.next()) got.push_back(class_char(classify(e->triple)));
  CHECK(got == kFirst33);
}

TEST_CASE("divisibility facts hold for every primitive triple up to 1e5") {
  for (const auto& t : oracle::primitive_triples(100000)) {
    CAPTURE(t.a, t.b, t.c);
    REQUIRE(t.b % 4 == 0);
    REQUIRE(t.c % 3 != 0);
    const int by3 = (t.a % 3 == 0) + (t.b % 3 == 0);
    const int by5 = (t.a % 5 == 0) + (t.b % 5 == 0) + (t.c % 5 == 0);
    REQUIRE(by3 == 1);
    REQUIRE(by5 == 1);
  }
}

TEST_CASE("exactly one class predicate holds per triple") {
  for (const auto& t : oracle::primitive_triples(20000)) {
    const bool a3 = t.a % 3 == 0, b3 = t.b % 3 == 0;
    const bool a5 = t.a % 5 == 0, b5 = t.b % 5 == 0, c5 = t.c % 5 == 0;
    const int matches =
        (a3 && c5) + (b3 && a5) + (a3 && a5) + (b3 && c5) + (a3 && b5) + (b3 && b5);
    REQUIRE(matches == 1);

    ClassLabel want;
    if (a3 && c5) want = ClassLabel::A;
    else if (b3 && a5) want = ClassLabel::B;
    else if (a3 && a5) want = ClassLabel::C;
    else if (b3 && c5) want = ClassLabel::D;
    else if (a3 && b5) want = ClassLabel::E;
    else want = ClassLabel::F;
    REQUIRE(classify(Ppt(t.a, t.b, t.c)) == want);
  }
}

TEST_CASE("classify_from_st agrees with the triple route") {
  for (std::uint64_t s = 3; s <= 499; s += 2) {
    for (std::uint64_t t = 1; t < s; t += 2) {
      if (std::gcd(s, t) != 1) continue;
      StPair p(s, t);
      REQUIRE(classify_from_st(p) == classify(ppt_from_st(p)));
    }
  }
}

TEST_CASE("class is invariant across representations") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::uint64_t> dist(0, 2999);
  int done = 0;
  while (done < 250) {
    std::uint64_t s = 2 * dist(rng) + 3;
    std::uint64_t t = 2 * (dist(rng) % (s / 2)) + 1;
    if (t >= s || std::gcd(s, t) != 1) continue;
    StPair p(s, t);
    CHECK(classify(ppt_from_gh(gh_from_st(p))) == classify_from_st(p));
    ++done;
  }
}
