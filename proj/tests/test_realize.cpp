#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossmat/campaign.hpp"
#include "crossmat/oracle.hpp"
#include "crossmat/realize.hpp"

using namespace crossmat;

namespace {

SquareMatrix M(const std::vector<std::vector<int>>& rows) { return SquareMatrix::from_rows(rows); }

const SquareMatrix kExampleD = M({{0, 2, 0, 2, 0},
                                  {0, 0, 2, 0, 2},
                                  {0, 0, 0, 2, 0},
                                  {0, 0, 0, 0, 2},
                                  {0, 0, 0, 0, 0}});

SquareMatrix only(int n, int i, int j, int v) {
  SquareMatrix m(n);
  m(i, j) = v;
  return m;
}

RealizeFailure reason(const RealizeResult& r) {
  REQUIRE_FALSE(r.ok());
  return r.error().reason;
}

}  // namespace

TEST_CASE("building blocks") {
  CHECK(format_word(column_word(3, 1)) == "2 1 1 2");
  CHECK(cn_matrix(column_word(3, 1)) == M({{0, 0, 2}, {0, 0, 2}, {2, 2, 0}}));
  CHECK(format_word(column_word(5, 2)) == "4 3 2 2 3 4");
  CHECK(format_word(column_word(2, 1)) == "1 1");

  const BraidWord padded = pad(parse_word("1 1", 2), 1, 0);
  CHECK(padded.strands() == 3);
  CHECK(format_word(padded) == "2 2");
  const BraidWord w = parse_word("1 -2", 3);
  CHECK(pad(w, 0, 0) == w);
  SquareMatrix expect(5);
  expect(1, 3) = expect(3, 1) = expect(2, 3) = expect(3, 2) = 2;
  CHECK(cn_matrix(pad(parse_word("2 1 1 2", 3), 0, 2)) == expect);
}

TEST_CASE("realize_cn02 on the 5x5 example") {
  const auto r = realize_cn02(kExampleD);
  REQUIRE(r.ok());
  const BraidWord& w = r.value().word;
  CHECK(w.strands() == 5);
  // one crossing per unit of the symmetrized matrix, halved
  CHECK(w.length() == 12);
  CHECK(cn_matrix(w) == kExampleD + kExampleD.transpose());
  CHECK(is_pure(w));
  CHECK(is_positive(w));
  CHECK(r.value().role == Role::CN);
  // frozen: ascending-index first solution
  CHECK(format_word(w) == "1 3 2 2 1 3 2 4 3 3 2 4");
}

TEST_CASE("realize_cn02 small cases") {
  const auto z = realize_cn02(SquareMatrix(5));
  REQUIRE(z.ok());
  CHECK(z.value().word.empty());
  CHECK(z.value().word.strands() == 5);

  const auto bad = realize_cn02(only(3, 1, 3, 2));
  CHECK(reason(bad) == RealizeFailure::NotT0);
  CHECK(bad.error().witness == Triple{1, 2, 3});

  const auto adj = realize_cn02(only(4, 2, 3, 2));
  REQUIRE(adj.ok());
  CHECK(format_word(adj.value().word) == "2 2");

  CHECK(reason(realize_cn02(only(3, 1, 2, 4))) == RealizeFailure::NotZeroTwo);
  CHECK(reason(realize_cn02(only(3, 2, 1, 2))) == RealizeFailure::NotUpperTriangular);
  CHECK(reason(realize_cn02(SquareMatrix(8))) == RealizeFailure::SizeUnsupported);
  CHECK(realize_cn02(SquareMatrix(1)).value().word.empty());
}

TEST_CASE("the search respects its budget") {
  SquareMatrix m(6);
  for (int i = 1; i <= 5; ++i) m(i, i + 1) = 2;
  m(1, 3) = m(2, 4) = m(3, 5) = m(4, 6) = m(1, 4) = m(3, 6) = 2;
  REQUIRE(is_t0(m));
  SearchStats stats;
  CHECK_FALSE(search_cn02(m, SearchOptions{5}, &stats));
  CHECK(stats.budget_hit);
  CHECK(reason(realize_cn02_by_search(m, SearchOptions{5})) == RealizeFailure::SearchExhausted);
  const auto full = realize_cn02(m);
  REQUIRE(full.ok());
  CHECK(cn_matrix(full.value().word) == m + m.transpose());
}

TEST_CASE("realize_cn02 against the T0 counts") {
  // counts from an independent filter over all candidates
  const int expected[] = {0, 0, 2, 7, 40, 357};
  for (int n = 2; n <= 5; ++n) {
    const Cn02Certificate c = certify_cn02(n, Execution::Serial);
    CHECK(c.candidates == (std::size_t{1} << (n * (n - 1) / 2)));
    CHECK(c.t0 == static_cast<std::size_t>(expected[n]));
    CHECK(c.realized == c.t0);
    CHECK(c.failures.empty());
  }
}

TEST_CASE("band ladder route agrees with the search") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& m : enumerate_02_t0(n)) {
      bool band = true;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 3; j <= n; ++j) band = band && m(i, j) == 0;
      if (!band) continue;
      const auto a = realize_cn02_by_band_ladder(m);
      const auto b = realize_cn02_by_search(m);
      REQUIRE(a.ok());
      REQUIRE(b.ok());
      CHECK(cn_matrix(a.value().word) == cn_matrix(b.value().word));
      CHECK(is_pure(a.value().word));
    }
  }
  CHECK_FALSE(realize_cn02_by_band_ladder(only(4, 1, 4, 2)).ok());
}

TEST_CASE("block sums and reversal") {
  auto rng = trial_rng(99, 0);
  const auto t0 = enumerate_02_t0(5);
  for (int t = 0; t < 200; ++t) {
    const SquareMatrix& a = t0[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(t0.size()) - 1))];
    const SquareMatrix& b = t0[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(t0.size()) - 1))];
    const BraidWord wa = realize_cn02(a).value().word;
    const BraidWord wb = realize_cn02(b).value().word;
    const BraidWord ab = concat(wa, wb);
    CHECK(is_pure(ab));
    CHECK(cn_matrix(ab) == a + a.transpose() + b + b.transpose());
    CHECK(cn_matrix(reverse_diagram(wa)) == reverse_matrix(a + a.transpose()));
  }
}

TEST_CASE("realize_cn_even") {
  const auto six = realize_cn_even(M({{0, 6}, {6, 0}}));
  REQUIRE(six.ok());
  CHECK(six.value().word.length() == 6);
  CHECK(cn_matrix(six.value().word) == M({{0, 6}, {6, 0}}));

  SquareMatrix four(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) four(i, j) = 2 * kExampleD(i, j);
  const auto r = realize_cn_even(four);
  REQUIRE(r.ok());
  CHECK(r.value().word.length() == 24);
  CHECK(cn_matrix(r.value().word) == four + four.transpose());
  CHECK(is_pure(r.value().word));

  CHECK(reason(realize_cn_even(only(3, 1, 3, 2))) == RealizeFailure::NotT0);
  CHECK(reason(realize_cn_even(M({{0, 3}, {3, 0}}))) == RealizeFailure::OddEntry);
  CHECK(reason(realize_cn_even(M({{0, -2}, {-2, 0}}))) == RealizeFailure::Negative);
  CHECK(reason(realize_cn_even(M({{0, 2}, {4, 0}}))) == RealizeFailure::Asymmetric);
  CHECK(reason(realize_cn_even(M({{2, 0}, {0, 0}}))) == RealizeFailure::NonZeroDiagonal);
}

TEST_CASE("realize_ou") {
  const auto twice = realize_ou(M({{0, 2}, {0, 0}}));
  REQUIRE(twice.ok());
  const BraidWord& w = twice.value().word;
  CHECK(w.strands() == 2);
  CHECK(is_pure(w));
  CHECK(ou_matrix(w) == M({{0, 2}, {0, 0}}));
  CHECK(format_word(w) == "1 -1");

  const auto sym = realize_ou(M({{0, 1}, {1, 0}}));
  REQUIRE(sym.ok());
  CHECK(format_word(sym.value().word) == "1 1");

  CHECK(reason(realize_ou(only(3, 1, 3, 1))) == RealizeFailure::OddEntry);
  CHECK(reason(realize_ou(only(3, 1, 3, 2))) == RealizeFailure::NotT0);
  CHECK(reason(realize_ou(M({{0, -1}, {3, 0}}))) == RealizeFailure::Negative);

  // OU matrices of non-pure diagrams: odd symmetric part
  const SquareMatrix a = M({{0, 2, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 2, 0}});
  CHECK(reason(realize_ou(a)) == RealizeFailure::OddEntry);
  const SquareMatrix b = M({{0, 0, 1, 1}, {0, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}});
  CHECK(t0_violation(b + b.transpose()) == Triple{1, 2, 4});

  const SquareMatrix c = M({{0, 3, 1}, {1, 0, 2}, {1, 0, 0}});
  const auto r = realize_ou(c);
  REQUIRE(r.ok());
  CHECK(ou_matrix(r.value().word) == c);
  CHECK(is_pure(r.value().word));
}

TEST_CASE("realize_crossing_positive_pure") {
  const auto one = realize_crossing_positive_pure(M({{0, 1}, {1, 0}}));
  REQUIRE(one.ok());
  CHECK(format_word(one.value().word) == "1 1");
  const auto z = realize_crossing_positive_pure(SquareMatrix(4));
  REQUIRE(z.ok());
  CHECK(z.value().word.empty());

  const SquareMatrix path = M({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  const auto p = realize_crossing_positive_pure(path);
  REQUIRE(p.ok());
  CHECK(p.value().word.length() == 4);
  CHECK(is_positive(p.value().word));
  CHECK(is_pure(p.value().word));
  CHECK(crossing_matrix(p.value().word) == path);
  CHECK(ou_matrix(p.value().word).symmetric());

  CHECK(reason(realize_crossing_positive_pure(M({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}))) ==
        RealizeFailure::NotT0);
  CHECK(reason(realize_crossing_positive_pure(M({{0, 1}, {0, 0}}))) == RealizeFailure::Asymmetric);
  CHECK(reason(realize_crossing_positive_pure(M({{0, -1}, {-1, 0}}))) == RealizeFailure::Negative);
}

TEST_CASE("RealizeResult accessors") {
  const auto bad = realize_cn02(only(3, 1, 3, 2));
  CHECK_THROWS_AS(bad.value(), std::logic_error);
  CHECK(bad.error().message().find("NotT0") != std::string::npos);
  const auto good = realize_cn02(SquareMatrix(2));
  CHECK_THROWS_AS(good.error(), std::logic_error);
}

TEST_CASE("standard_form") {
  const StandardForm f = standard_form(parse_word("1", 2));
  CHECK(format_word(f.pure) == "1 -1");
  CHECK(format_word(f.simple) == "1");
  CHECK(f.pure_ou == M({{0, 2}, {0, 0}}));
  CHECK(f.simple_ou == M({{0, 1}, {0, 0}}));

  const BraidWord pure = parse_word("1 -2 -2 1", 3);
  REQUIRE(is_pure(pure));
  const StandardForm g = standard_form(pure);
  CHECK(g.pure == pure);
  CHECK(g.simple.empty());
  CHECK(g.pure_ou == ou_matrix(pure));
  CHECK(g.simple_ou.is_zero());

  auto rng = trial_rng(17, 0);
  for (int t = 0; t < 300; ++t) {
    const BraidWord w = random_word(uniform(rng, 2, 5), uniform(rng, 0, 15), rng);
    const StandardForm s = standard_form(w);
    CHECK(is_pure(s.pure));
    CHECK(is_simple(s.simple_ou));
    const SquareMatrix sym = s.pure_ou + s.pure_ou.transpose();
    CHECK(sym.all_even());
    CHECK(is_t0(sym));
    CHECK(ou_matrix(concat(s.pure, s.simple)) == s.pure_ou + s.simple_ou);
  }
}
