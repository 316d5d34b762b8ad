#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "crossmat/braid.hpp"
#include "crossmat/campaign.hpp"

using namespace crossmat;

TEST_CASE("parse_word infers the strand count") {
  const BraidWord w = parse_word("1 -2 1");
  CHECK(w.strands() == 3);
  REQUIRE(w.length() == 3);
  CHECK(w.letters()[0] == Letter{1, Sign::Positive});
  CHECK(w.letters()[1] == Letter{2, Sign::Negative});
  CHECK(w.letters()[2] == Letter{1, Sign::Positive});
}

TEST_CASE("parse_word edge cases") {
  const BraidWord e = parse_word("", 4);
  CHECK(e.strands() == 4);
  CHECK(e.empty());
  CHECK(parse_word("").strands() == 1);
  CHECK(parse_word("  2\t-1\n").length() == 2);
  CHECK_THROWS_AS(parse_word("3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1.5"), std::invalid_argument);
  CHECK(format_word(parse_word("1 -2 1")) == "1 -2 1");
  CHECK(format_word(BraidWord(3)).empty());
}

TEST_CASE("BraidWord rejects out of range letters") {
  CHECK_THROWS_AS(BraidWord(2, {Letter{2, Sign::Positive}}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(2, {Letter{0, Sign::Positive}}), std::invalid_argument);
  BraidWord w(3);
  CHECK_THROWS_AS(w.push_back({3, Sign::Negative}), std::invalid_argument);
}

TEST_CASE("Permutation basics") {
  const Permutation p = parse_permutation("3,1,2");
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(p.inversions() == 2);
  CHECK(format_permutation(p) == "3,1,2");
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1,,2"), std::invalid_argument);
  // compose(outer, inner)(k) = outer(inner(k))
  const Permutation s = parse_permutation("2,1,3");
  CHECK(compose(s, p)(1) == 3);
  CHECK(compose(p, s)(1) == 1);
}

TEST_CASE("all_permutations") {
  CHECK(all_permutations(1).size() == 1);
  CHECK(all_permutations(4).size() == 24);
  const auto five = all_permutations(5);
  CHECK(five.size() == 120);
  CHECK(five.front().is_identity());
  CHECK(format_permutation(five.back()) == "5,4,3,2,1");
  std::set<std::vector<int>> distinct;
  for (const auto& p : five) distinct.insert(p.images());
  CHECK(distinct.size() == 120);
}

TEST_CASE("braid_permutation") {
  CHECK(braid_permutation(BraidWord(3)).is_identity());
  CHECK(format_permutation(braid_permutation(parse_word("1", 2))) == "2,1");
  CHECK(braid_permutation(parse_word("1 1", 2)).is_identity());
  // strand 1 goes 1 -> 2 -> 3, strand 2 drops to 1, strand 3 to 2
  CHECK(format_permutation(braid_permutation(parse_word("1 2", 3))) == "3,1,2");
  CHECK(final_positions(parse_word("1 2", 3)) == std::vector<int>{2, 3, 1});
}

TEST_CASE("purity and positivity") {
  CHECK(is_pure(parse_word("1 1", 2)));
  CHECK_FALSE(is_pure(parse_word("1", 2)));
  CHECK(is_pure(BraidWord(4)));
  CHECK(is_positive(parse_word("1 2 1")));
  CHECK_FALSE(is_positive(parse_word("1 -2")));
  CHECK(is_positive(BraidWord(2)));
}

TEST_CASE("concat and inverse") {
  CHECK(format_word(concat(parse_word("1", 2), parse_word("1", 2))) == "1 1");
  const BraidWord w = parse_word("1 2 -1");
  CHECK(concat(BraidWord(3), w) == w);
  CHECK(format_word(concat(parse_word("1", 3), parse_word("2", 3))) == "1 2");
  CHECK_THROWS_AS(concat(parse_word("1", 2), parse_word("2", 3)), std::invalid_argument);
  CHECK(format_word(inverse(parse_word("1 -2"))) == "2 -1");
  CHECK(inverse(BraidWord(3)).empty());
  CHECK(inverse(inverse(w)) == w);
  CHECK(is_pure(concat(w, inverse(w))));
}

TEST_CASE("permutation of a product") {
  auto rng = trial_rng(7, 0);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(rng, 2, 6);
    const BraidWord a = random_word(n, uniform(rng, 0, 10), rng);
    const BraidWord b = random_word(n, uniform(rng, 0, 10), rng);
    CHECK(braid_permutation(concat(a, b)) ==
          compose(braid_permutation(b), braid_permutation(a)));
    CHECK(braid_permutation(inverse(a)) == braid_permutation(a).inverse());
  }
}

TEST_CASE("reverse_diagram") {
  CHECK(format_word(reverse_diagram(parse_word("1", 3))) == "2");
  CHECK(format_word(reverse_diagram(parse_word("2 1 1 2", 3))) == "1 2 2 1");
  CHECK(format_word(reverse_diagram(parse_word("-1 2", 4))) == "-3 2");
  const BraidWord w = parse_word("1 -3 2", 5);
  CHECK(reverse_diagram(reverse_diagram(w)) == w);
}

TEST_CASE("make_positive keeps positions") {
  const BraidWord w = parse_word("1 -2 -1 2");
  const BraidWord p = make_positive(w);
  CHECK(format_word(p) == "1 2 1 2");
  CHECK(braid_permutation(p) == braid_permutation(w));
}

TEST_CASE("permutation_braid") {
  CHECK(permutation_braid(Permutation::identity(4)).empty());
  CHECK(format_word(permutation_braid(parse_permutation("2,1"))) == "1");
  const BraidWord r = permutation_braid(parse_permutation("3,2,1"));
  CHECK(r.length() == 3);
  CHECK(format_word(r) == "1 2 1");
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : all_permutations(n)) {
      const BraidWord w = permutation_braid(p);
      CHECK(w.strands() == n);
      CHECK(is_positive(w));
      CHECK(braid_permutation(w) == p);
      CHECK(static_cast<int>(w.length()) == p.inversions());
    }
  }
}

TEST_CASE("for_each_crossing reports strands and over/under") {
  std::vector<Crossing> seen;
  for_each_crossing(parse_word("1 -1", 2), [&](const Crossing& c) { seen.push_back(c); });
  REQUIRE(seen.size() == 2);
  CHECK(seen[0].left_strand == 1);
  CHECK(seen[0].over() == 1);
  CHECK(seen[1].left_strand == 2);
  CHECK(seen[1].right_strand == 1);
  CHECK(seen[1].over() == 1);
  CHECK(seen[1].under() == 2);
}

TEST_CASE("seeded random words are reproducible") {
  auto a = trial_rng(42, 3);
  auto b = trial_rng(42, 3);
  CHECK(random_word(5, 30, a) == random_word(5, 30, b));
  auto c = trial_rng(1, 0);
  const BraidWord p = random_pure_word(5, 12, c);
  CHECK(is_pure(p));
}
