#include <random>

#include "catch_amalgamated.hpp"

#include "defperm/rational.hpp"

using namespace defperm;

TEST_CASE("rational string round trip stays canonical") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-7")) == "-7");
  CHECK(to_string(Rat(0)) == "0");
  CHECK(parse_rat("1/3") + parse_rat("1/6") == parse_rat("1/2"));
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
}

TEST_CASE("primitive integer form") {
  CHECK(primitive_integer_form({Rat(1, 2), Rat(1, 3)}) == std::vector<Int>{3, 2});
  CHECK(primitive_integer_form({Rat(2), Rat(4), Rat(6)}) == std::vector<Int>{1, 2, 3});
  CHECK(primitive_integer_form({Rat(-1, 5), Rat(0)}) == std::vector<Int>{-1, 0});
  CHECK_THROWS_AS(primitive_integer_form({Rat(0), Rat(0)}), std::invalid_argument);
}

TEST_CASE("primitive form is idempotent and invariant under positive scaling") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> v(4);
    bool nonzero = false;
    for (auto& x : v) {
      x = Rat(num(rng), den(rng));
      if (x != 0) nonzero = true;
    }
    if (!nonzero) continue;
    const Rat scale(den(rng), den(rng));
    std::vector<Rat> w(v);
    for (auto& x : w) x *= scale;
    const auto pv = primitive_integer_form(v);
    CHECK(primitive_integer_form(w) == pv);
    std::vector<Rat> back;
    for (const Int& e : pv) back.emplace_back(e);
    CHECK(primitive_integer_form(back) == pv);
  }
}
