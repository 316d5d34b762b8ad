#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossmat/ladder.hpp"
#include "support.hpp"

using namespace crossmat;

namespace {

SquareMatrix M(const std::vector<std::vector<int>>& rows) { return SquareMatrix::from_rows(rows); }

using E = LadderEdge;

const SquareMatrix kExampleD = M({{0, 2, 0, 2, 0},
                                  {0, 0, 2, 0, 2},
                                  {0, 0, 0, 2, 0},
                                  {0, 0, 0, 0, 2},
                                  {0, 0, 0, 0, 0}});

Move fwd(MoveKind k) { return {k, Direction::Forward}; }

}  // namespace

TEST_CASE("LadderDiagram validates rungs") {
  CHECK_THROWS_AS(LadderDiagram(3, {E::black(2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(LadderDiagram(3, {E::black(1, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(LadderDiagram(3, {E::white(3)}), std::invalid_argument);
  CHECK_THROWS_AS(LadderDiagram(3, {E{E::Kind::White, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(LadderDiagram(0), std::invalid_argument);
}

TEST_CASE("b_ladder") {
  CHECK(b_ladder(SquareMatrix(4)).size() == 0);
  const SquareMatrix m = M({{0, 0, 2}, {0, 0, 2}, {0, 0, 0}});
  CHECK(b_ladder(m).edges() == std::vector<E>{E::black(1, 3), E::black(2, 3)});
  CHECK(b_ladder(m, EdgeOrder::ColumnDescending).edges() ==
        std::vector<E>{E::black(2, 3), E::black(1, 3)});
  SquareMatrix band(5);
  for (int i = 1; i <= 4; ++i) band(i, i + 1) = 2;
  for (int i = 1; i <= 3; ++i) band(i, i + 2) = 2;
  CHECK(format_ladder(b_ladder(band, EdgeOrder::Band)) == "B1,2 B1,3 B2,3 B2,4 B3,4 B3,5 B4,5");
  CHECK_THROWS_AS(b_ladder(M({{0, 1}, {0, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(b_ladder(M({{0, 0}, {2, 0}})), std::invalid_argument);
}

TEST_CASE("eval_ladder") {
  const LadderEval b = eval_ladder(LadderDiagram(2, {E::black(1, 2)}));
  CHECK(b.contribution == M({{0, 2}, {2, 0}}));
  CHECK(b.perm.is_identity());
  const LadderEval w = eval_ladder(LadderDiagram(2, {E::white(1), E::white(1)}));
  CHECK(w == b);
  const LadderDiagram whites(3, {E::white(2), E::white(1), E::white(1), E::white(2)});
  const LadderEval e = eval_ladder(whites);
  CHECK(e.contribution == M({{0, 0, 2}, {0, 0, 2}, {2, 2, 0}}));
  CHECK(e.perm.is_identity());
  CHECK(e == eval_ladder(LadderDiagram(3, {E::black(2, 3), E::black(1, 3)})));
  CHECK(format_permutation(eval_ladder(LadderDiagram(3, {E::white(1)})).perm) == "2,1,3");
}

TEST_CASE("eval of a B-ladder is the symmetrized matrix") {
  const LadderEval e = eval_ladder(b_ladder(kExampleD));
  CHECK(e.contribution == kExampleD + kExampleD.transpose());
  CHECK(e.perm.is_identity());
}

TEST_CASE("moves from the table") {
  CHECK(apply_move(LadderDiagram(2, {E::black(1, 2)}), fwd(MoveKind::L1), 0).edges() ==
        std::vector<E>{E::white(1), E::white(1)});
  CHECK(apply_move(LadderDiagram(3, {E::black(1, 3), E::white(1)}), fwd(MoveKind::L6), 0).edges() ==
        std::vector<E>{E::white(1), E::black(2, 3)});
  CHECK(apply_move(LadderDiagram(3, {E::white(1), E::white(2), E::white(1)}), fwd(MoveKind::L4), 0)
            .edges() == std::vector<E>{E::white(2), E::white(1), E::white(2)});
  const LadderDiagram ww(2, {E::white(1), E::white(1)});
  CHECK(apply_move(ww, {MoveKind::L1, Direction::Backward}, 0).edges() ==
        std::vector<E>{E::black(1, 2)});
  // offset
  const LadderDiagram l(3, {E::white(2), E::black(1, 2)});
  CHECK(format_ladder(apply_move(l, fwd(MoveKind::L1), 1)) == "W2 W1 W1");
}

TEST_CASE("move failures name the reason") {
  const LadderDiagram l(4, {E::white(1), E::white(2)});
  try {
    apply_move(l, fwd(MoveKind::L3), 0);
    FAIL("L3 applied to adjacent half twists");
  } catch (const MoveError& e) {
    CHECK(e.reason() == MoveError::Reason::SideCondition);
  }
  try {
    apply_move(l, fwd(MoveKind::L1), 0);
    FAIL("L1 applied to a white rung");
  } catch (const MoveError& e) {
    CHECK(e.reason() == MoveError::Reason::PatternMismatch);
  }
  CHECK_THROWS_AS(apply_move(l, fwd(MoveKind::L4), 0), MoveError);
  CHECK_THROWS_AS(apply_move(l, fwd(MoveKind::L3), 5), MoveError);
  // L5 forbids a half twist touching the black rung's endpoints
  CHECK_THROWS_AS(apply_move(LadderDiagram(4, {E::black(1, 3), E::white(3)}), fwd(MoveKind::L5), 0),
                  MoveError);
  CHECK_NOTHROW(apply_move(LadderDiagram(5, {E::black(1, 4), E::white(2)}), fwd(MoveKind::L5), 0));
  CHECK_NOTHROW(apply_move(LadderDiagram(5, {E::black(1, 2), E::white(3)}), fwd(MoveKind::L5), 0));
  CHECK_THROWS_AS(apply_move(LadderDiagram(3, {E::black(1, 2), E::white(1)}), fwd(MoveKind::L6), 0),
                  MoveError);
}

TEST_CASE("every move keeps the eval") {
  auto rng = trial_rng(2024, 0);
  for (const Move move : testing::all_moves()) {
    CAPTURE(format_move(move));
    for (int t = 0; t < 100; ++t) {
      const auto inst = testing::random_move_instance(move, rng);
      REQUIRE(inst);
      CHECK(eval_ladder(inst->before) == eval_ladder(inst->after));
      // every move is invertible by the opposite direction
      const Move back{move.kind, move.direction == Direction::Forward ? Direction::Backward
                                                                      : Direction::Forward};
      CHECK(apply_move(inst->after, back, inst->at) == inst->before);
    }
  }
}

TEST_CASE("is_w_ladder") {
  CHECK(is_w_ladder(LadderDiagram(3)));
  CHECK(is_w_ladder(LadderDiagram(3, {E::white(2)})));
  CHECK_FALSE(is_w_ladder(LadderDiagram(3, {E::black(1, 3)})));
}

TEST_CASE("hook columns") {
  CHECK(format_ladder(hook_column_expand(5, 5, 2)) == "W4 W3 W2 W2 W3 W4");
  CHECK(format_ladder(hook_column_expand(2, 2, 1)) == "W1 W1");
  CHECK(format_ladder(hook_column(5, 5, 2)) == "B4,5 B3,5 B2,5");
  SquareMatrix column(5);
  for (int i = 2; i <= 4; ++i) column(i, 5) = 2;
  CHECK(eval_ladder(hook_column_expand(5, 5, 2)) == eval_ladder(b_ladder(column)));
  for (int l = 2; l <= 6; ++l) {
    for (int k = 1; k < l; ++k) {
      CAPTURE(l);
      CAPTURE(k);
      const LadderDiagram from = hook_column(l, l, k);
      const LadderDiagram to = replay(from, hook_column_script(l, k));
      CHECK(to == hook_column_expand(l, l, k));
      CHECK(eval_ladder(from) == eval_ladder(to));
    }
  }
}

TEST_CASE("band ladders rewrite with L1, L7 and L8") {
  SquareMatrix m(4);
  m(1, 2) = m(1, 3) = m(3, 4) = 2;
  const auto r = band_ladder_to_w(m);
  REQUIRE(r);
  CHECK(is_w_ladder(r->first));
  CHECK(eval_ladder(r->first) == eval_ladder(b_ladder(m)));
  CHECK(replay(b_ladder(m, EdgeOrder::Band), r->second) == r->first);
  // outside the band
  SquareMatrix wide(4);
  wide(1, 4) = wide(1, 2) = wide(2, 4) = 2;
  CHECK_FALSE(band_ladder_to_w(wide));
}

TEST_CASE("rewrite_to_w") {
  const auto one = rewrite_to_w(LadderDiagram(2, {E::black(1, 2)}), 1000);
  REQUIRE(one);
  CHECK(format_ladder(*one) == "W1 W1");

  RewriteStats stats;
  const auto d = rewrite_to_w(b_ladder(kExampleD), 200000, &stats);
  REQUIRE(d);
  CHECK(is_w_ladder(*d));
  CHECK(eval_ladder(*d) == eval_ladder(b_ladder(kExampleD)));

  RewriteStats none;
  CHECK_FALSE(rewrite_to_w(LadderDiagram(3, {E::black(1, 3)}), 1'000'000, &none));
  CHECK(none.exhausted);

  RewriteStats tiny;
  CHECK_FALSE(rewrite_to_w(b_ladder(kExampleD), 3, &tiny));
  CHECK_FALSE(tiny.exhausted);
}

TEST_CASE("ladder_to_word") {
  CHECK(format_word(ladder_to_word(hook_column_expand(5, 5, 2))) == "4 3 2 2 3 4");
  CHECK(ladder_to_word(LadderDiagram(3)).empty());
  CHECK(cn_matrix(parse_word("2 1 1 2", 3)) ==
        eval_ladder(LadderDiagram(3, {E::white(2), E::white(1), E::white(1), E::white(2)}))
            .contribution);
  CHECK_THROWS_AS(ladder_to_word(LadderDiagram(3, {E::black(1, 3)})), std::invalid_argument);
}

TEST_CASE("ladder text") {
  const LadderDiagram l = parse_ladder("B1,3 W2 w1 b2,3", 3);
  CHECK(format_ladder(l) == "B1,3 W2 W1 B2,3");
  CHECK(parse_ladder(format_ladder(l), 3) == l);
  CHECK_THROWS_AS(parse_ladder("X1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_ladder("B1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_ladder("W3", 3), std::invalid_argument);
  CHECK(parse_move("L6") == fwd(MoveKind::L6));
  CHECK(parse_move("L6-") == Move{MoveKind::L6, Direction::Backward});
  CHECK(format_move(parse_move("L9+")) == "L9+");
  CHECK_THROWS_AS(parse_move("L0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move("L10"), std::invalid_argument);
}

TEST_CASE("render_ladder is stable") {
  const std::string expected =
      "1   2   3\n"
      "|   |   |\n"
      "*===+===*   B1,3\n"
      "|   |   |\n"
      "|   o---o   W2\n"
      "|   |   |\n"
      "o---o   |   W1\n"
      "|   |   |\n";
  CHECK(render_ladder(parse_ladder("B1,3 W2 W1", 3)) == expected);
}
