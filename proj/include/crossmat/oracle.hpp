#pragma once

// Brute-force oracles and named verification campaigns.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossmat/braid.hpp"
#include "crossmat/campaign.hpp"
#include "crossmat/matrix.hpp"

namespace crossmat {

/// All 2^(n(n-1)/2) strictly upper triangular (0,2)-matrices, ordered
/// lexicographically by their row-major entry vectors. 1 <= n <= 6.
std::vector<SquareMatrix> enumerate_02(int n);

/// enumerate_02(n) filtered by is_t0. 2 <= n <= 6.
std::vector<SquareMatrix> enumerate_02_t0(int n);

/// Plain enumeration of positive words of length exactly sum_{i<j} M(i,j),
/// first match in lexicographic order of letters. Nothing is pruned or
/// memoized. `m` may be symmetric or strictly upper triangular.
std::optional<BraidWord> brute_force_realizable(const SquareMatrix& m, int max_len);

/// Deterministic pseudo-random word: uniform letters, uniform signs.
BraidWord random_word(int n, int length, std::uint64_t seed);

struct ClaimParams {
  int max_n = 0;             // 0: the claim's default
  std::size_t trials = 0;    // 0: the claim's default
  std::uint64_t seed = 1;
  Execution exec = Execution::Parallel;
};

struct VerificationReport {
  std::string claim;
  std::string description;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  std::map<std::string, long> counters;
  std::uint64_t seed = 0;
  std::chrono::duration<double> elapsed{};

  bool pass() const noexcept { return failures.empty(); }
};

/// Known claim ids, in a stable order.
const std::vector<std::string>& claim_ids();

/// Throws std::invalid_argument for an unknown id.
VerificationReport verify_claim(const std::string& claim, const ClaimParams& params = {});

std::string format_report(const VerificationReport& report, std::size_t max_failures = 10);
/// One JSON object: claim, instances, failures, seed, pass, elapsed_seconds, counters.
std::string report_json(const VerificationReport& report);

}  // namespace crossmat
