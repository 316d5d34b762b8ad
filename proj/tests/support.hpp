#pragma once

#include <optional>
#include <random>

#include "crossmat/campaign.hpp"
#include "crossmat/ladder.hpp"

namespace crossmat::testing {

inline LadderEdge random_edge(int n, std::mt19937_64& rng) {
  if ((rng() & 1U) != 0) return LadderEdge::white(uniform(rng, 1, n - 1));
  const int i = uniform(rng, 1, n - 1);
  return LadderEdge::black(i, uniform(rng, i + 1, n));
}

struct MoveInstance {
  LadderDiagram before;
  LadderDiagram after;
  std::size_t at = 0;
};

// Rejection sampling: random ladders with a short random prefix and suffix
// around a random window until the move applies. n in [3, 6].
inline std::optional<MoveInstance> random_move_instance(Move move, std::mt19937_64& rng,
                                                        int attempts = 1'000'000) {
  const std::size_t span = move_span(move);
  for (int t = 0; t < attempts; ++t) {
    const int n = uniform(rng, 3, 6);
    LadderDiagram l(n);
    const int prefix = uniform(rng, 0, 2);
    const int suffix = uniform(rng, 0, 2);
    for (int k = 0; k < prefix; ++k) l.push_back(random_edge(n, rng));
    for (std::size_t k = 0; k < span; ++k) l.push_back(random_edge(n, rng));
    for (int k = 0; k < suffix; ++k) l.push_back(random_edge(n, rng));
    try {
      const auto at = static_cast<std::size_t>(prefix);
      LadderDiagram after = apply_move(l, move, at);
      return MoveInstance{l, std::move(after), at};
    } catch (const MoveError&) {
    }
  }
  return std::nullopt;
}

inline std::vector<Move> all_moves() {
  std::vector<Move> out;
  for (int k = 1; k <= 9; ++k) {
    out.push_back({static_cast<MoveKind>(k), Direction::Forward});
    out.push_back({static_cast<MoveKind>(k), Direction::Backward});
  }
  return out;
}

}  // namespace crossmat::testing
