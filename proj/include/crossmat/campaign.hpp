#pragma once

// Trial kernels for verification campaigns. Every trial is a pure function of
// its index, so the OpenMP kernel and the serial reference produce identical
// results; the serial path is kept for testing and benchmarking.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crossmat/braid.hpp"
#include "crossmat/matrix.hpp"

namespace crossmat {

enum class Execution { Serial, Parallel };

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
  friend bool operator==(const Failure&, const Failure&) = default;
};

using TrialOutcome = std::optional<Failure>;

/// splitmix64 finalizer; decorrelates (seed, index) pairs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Independent generator for trial `index` of a campaign seeded with `seed`.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(mix_seed(seed, index));
}

/// Uniform integer in [lo, hi]; modulo reduction keeps results identical
/// across standard libraries.
inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace detail {

template <typename Trial>
TrialOutcome guarded(Trial& trial, std::size_t index) {
  try {
    return trial(index);
  } catch (const std::exception& e) {
    return Failure{"trial " + std::to_string(index), "no exception", e.what()};
  }
}

}  // namespace detail

/// Runs trial(0..count-1). Outcomes are returned in index order regardless of
/// execution mode.
template <typename Trial>
std::vector<TrialOutcome> run_trials(std::size_t count, Execution exec, Trial&& trial) {
  std::vector<TrialOutcome> outcomes(count);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) outcomes[i] = detail::guarded(trial, i);
    return outcomes;
  }
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] = detail::guarded(trial, static_cast<std::size_t>(i));
  }
  return outcomes;
}

/// Failures in index order.
std::vector<Failure> collect_failures(const std::vector<TrialOutcome>& outcomes);

BraidWord random_word(int n, int length, std::mt19937_64& rng);
BraidWord random_positive_word(int n, int length, std::mt19937_64& rng);
/// w followed by the inverse of its permutation braid: always pure.
BraidWord random_pure_word(int n, int length, std::mt19937_64& rng);
Permutation random_permutation(int n, std::mt19937_64& rng);

/// Exhaustive check that every strictly upper triangular (0,2) n x n matrix
/// is realized by realize_cn02 exactly when it is T0, with the CN equation,
/// purity and length equal to the entry sum on every success.
struct Cn02Certificate {
  int n = 0;
  std::size_t candidates = 0;
  std::size_t t0 = 0;
  std::size_t realized = 0;
  std::vector<Failure> failures;
};

Cn02Certificate certify_cn02(int n, Execution exec);

}  // namespace crossmat
