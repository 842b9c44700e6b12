#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polya/permutation.hpp"
#include "random_perms.hpp"

using namespace polya;
using polya::testing::random_permutation;

TEST_CASE("apply reads the image word") {
  CHECK(parse_permutation("1320").apply(0) == 1);
  CHECK(Permutation::identity(3).apply(2) == 2);
  CHECK(parse_permutation("2031").apply(1) == 0);
  CHECK_THROWS_AS(parse_permutation("2031").apply(4), std::domain_error);
  CHECK_THROWS_AS(parse_permutation("2031").apply(-1), std::domain_error);
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("12"), parse_error);
  CHECK_THROWS_AS(parse_permutation("1x0"), parse_error);
  CHECK(parse_permutation("").degree() == 0);
  CHECK(parse_permutation("10,3,2,1,4,5,6,7,8,9,0").degree() == 11);
  CHECK(parse_permutation("231", true) == parse_permutation("120"));
}

TEST_CASE("permutation text format") {
  CHECK(to_string(parse_permutation("1320")) == "1320");
  Permutation big = intransitive_product(Permutation::identity(10),
                                         parse_permutation("10"));
  CHECK(to_string(big) == "0,1,2,3,4,5,6,7,8,9,11,10");
}

TEST_CASE("cycle decomposition") {
  auto cycles = cycle_decomposition(parse_permutation("2031"));
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].elements() == std::vector<int>{0, 2, 3, 1});

  cycles = cycle_decomposition(parse_permutation("01723456"));
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0].elements() == std::vector<int>{0});
  CHECK(cycles[1].elements() == std::vector<int>{1});
  CHECK(cycles[2].elements() == std::vector<int>{2, 7, 6, 5, 4, 3});

  cycles = cycle_decomposition(Permutation::identity(2));
  REQUIRE(cycles.size() == 2);
  CHECK(to_string(cycles) == "(0)(1)");
}

TEST_CASE("cycle decomposition round-trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_permutation(rng, 9);
    CHECK(permutation_from_cycles(p.degree(), cycle_decomposition(p)) == p);
  }
}

TEST_CASE("intransitive product is shifted concatenation") {
  Permutation s1 = parse_permutation("1320");
  Permutation s2 = parse_permutation("534120");
  CHECK(to_string(intransitive_product(s1, s2)) == "1320978564");
  CHECK(to_string(intransitive_product(s2, s1)) == "5341207986");
  CHECK(intransitive_product(s1, s2) != intransitive_product(s2, s1));
  CHECK(intransitive_product(Permutation::identity(3),
                             Permutation::identity(4)) ==
        Permutation::identity(7));
  // empty permutation is the unit
  Permutation empty;
  CHECK(intransitive_product(empty, s1) == s1);
  CHECK(intransitive_product(s1, empty) == s1);
}

TEST_CASE("cartesian product reproduces the worked cycles") {
  Permutation s1 = parse_permutation("2031");
  Permutation s2 = parse_permutation("01723456");

  auto cycles = cycle_decomposition(cartesian_product(s1, s2));
  REQUIRE(cycles.size() == 4);
  CHECK(cycles[0] == Cycle({0, 2, 3, 1}));
  CHECK(cycles[1] == Cycle({4, 6, 7, 5}));
  CHECK(cycles[2] == Cycle({30, 27, 21, 16, 14, 11, 29, 24, 22, 19, 13, 8}));
  CHECK(cycles[3] == Cycle({28, 26, 23, 17, 12, 10, 31, 25, 20, 18, 15, 9}));

  auto swapped = cycle_decomposition(cartesian_product(s2, s1));
  REQUIRE(swapped.size() == 4);
  CHECK(swapped[0] == Cycle({0, 16, 24, 8}));
  CHECK(swapped[1] == Cycle({1, 17, 25, 9}));
  CHECK(swapped[2] == Cycle({6, 21, 28, 11, 2, 23, 30, 13, 4, 19, 26, 15}));
  CHECK(swapped[3] == Cycle({7, 22, 29, 12, 3, 18, 31, 14, 5, 20, 27, 10}));

  CHECK(cartesian_product(s1, s2) != cartesian_product(s2, s1));
  CHECK(cartesian_product(Permutation::identity(1), s2) == s2);
}

TEST_CASE("cycle-formula and pointwise cartesian products agree") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Permutation a = random_permutation(rng, 6);
    Permutation b = random_permutation(rng, 6);
    CHECK(cartesian_product_cycles(a, b) == cartesian_product(a, b));
  }
}

TEST_CASE("intransitive action case split (compint)") {
  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    Permutation a = random_permutation(rng, 6);
    Permutation b = random_permutation(rng, 6);
    Permutation p = intransitive_product(a, b);
    int n = a.degree();
    for (int k = 0; k < p.degree(); ++k) {
      int expected = k < n ? a.apply(k) : b.apply(k - n) + n;
      CHECK(p.apply(k) == expected);
    }
  }
}

TEST_CASE("cartesian action is componentwise (compcart)") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    Permutation a = random_permutation(rng, 6);
    Permutation b = random_permutation(rng, 6);
    Permutation p = cartesian_product(a, b);
    int n = a.degree();
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < b.degree(); ++k)
        CHECK(p.apply(j + n * k) == a.apply(j) + n * b.apply(k));
  }
}

TEST_CASE("both products are associative") {
  std::mt19937 rng(19);
  for (int i = 0; i < 300; ++i) {
    Permutation a = random_permutation(rng, 5);
    Permutation b = random_permutation(rng, 5);
    Permutation c = random_permutation(rng, 5);
    CHECK(intransitive_product(intransitive_product(a, b), c) ==
          intransitive_product(a, intransitive_product(b, c)));
    CHECK(cartesian_product(cartesian_product(a, b), c) ==
          cartesian_product(a, cartesian_product(b, c)));
  }
}

TEST_CASE("cartesian is left semi-distributive over intransitive") {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    Permutation a = random_permutation(rng, 5);
    Permutation b = random_permutation(rng, 5);
    Permutation c = random_permutation(rng, 5);
    CHECK(cartesian_product(a, intransitive_product(b, c)) ==
          intransitive_product(cartesian_product(a, b),
                               cartesian_product(a, c)));
  }
}

TEST_CASE("standardization") {
  CHECK(standardize(std::string("baca")) == parse_permutation("2031"));
  CHECK(standardize(std::string("aaa")) == Permutation::identity(3));
  CHECK(standardize(std::string("abcde")) == Permutation::identity(5));
  CHECK(standardize(std::string("")) == Permutation());
  // standardizing a permutation word gives back the permutation
  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    Permutation p = random_permutation(rng, 8);
    CHECK(standardize(p.word()) == p);
  }
}

TEST_CASE("inverse and compose") {
  CHECK(parse_permutation("1320").inverse() == parse_permutation("3021"));
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    Permutation p = random_permutation(rng, 8);
    CHECK(p.compose(p.inverse()) == Permutation::identity(p.degree()));
    CHECK(p.inverse().compose(p) == Permutation::identity(p.degree()));
  }
  CHECK_THROWS_AS(
      parse_permutation("10").compose(parse_permutation("102")),
      std::domain_error);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Permutation::identity(1)));
  CHECK(is_connected(parse_permutation("2031")));
  CHECK_FALSE(is_connected(parse_permutation("1320978564")));
  CHECK_FALSE(is_connected(Permutation::identity(3)));
  CHECK_FALSE(is_connected(Permutation()));
}

TEST_CASE("connected factorization") {
  auto factors = connected_factorization(parse_permutation("1320978564"));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == parse_permutation("1320"));
  CHECK(factors[1] == parse_permutation("534120"));

  factors = connected_factorization(Permutation::identity(4));
  REQUIRE(factors.size() == 4);
  for (const auto& f : factors) CHECK(f == Permutation::identity(1));

  factors = connected_factorization(parse_permutation("2031"));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0] == parse_permutation("2031"));

  CHECK(connected_factorization(Permutation()).empty());
}

TEST_CASE("factorization reassembles and factors are connected") {
  std::mt19937 rng(37);
  for (int i = 0; i < 300; ++i) {
    Permutation p = random_permutation(rng, 9);
    Permutation rebuilt;
    for (const Permutation& f : connected_factorization(p)) {
      CHECK(is_connected(f));
      rebuilt = intransitive_product(rebuilt, f);
    }
    CHECK(rebuilt == p);
  }
}
