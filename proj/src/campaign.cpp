#include "crossmat/campaign.hpp"

#include <algorithm>
#include <numeric>

#include "crossmat/oracle.hpp"
#include "crossmat/realize.hpp"

namespace crossmat {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Failure> collect_failures(const std::vector<TrialOutcome>& outcomes) {
  std::vector<Failure> out;
  for (const auto& o : outcomes)
    if (o) out.push_back(*o);
  return out;
}

BraidWord random_word(int n, int length, std::mt19937_64& rng) {
  BraidWord w(n);
  if (n < 2) return w;
  for (int k = 0; k < length; ++k) {
    const int index = uniform(rng, 1, n - 1);
    const Sign sign = (rng() & 1U) != 0 ? Sign::Positive : Sign::Negative;
    w.push_back({index, sign});
  }
  return w;
}

BraidWord random_positive_word(int n, int length, std::mt19937_64& rng) {
  return make_positive(random_word(n, length, rng));
}

BraidWord random_pure_word(int n, int length, std::mt19937_64& rng) {
  const BraidWord w = random_word(n, length, rng);
  return concat(w, inverse(permutation_braid(braid_permutation(w))));
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int k = n - 1; k > 0; --k) {
    std::swap(images[static_cast<std::size_t>(k)], images[static_cast<std::size_t>(uniform(rng, 0, k))]);
  }
  return Permutation::from_images(std::move(images));
}

Cn02Certificate certify_cn02(int n, Execution exec) {
  const std::vector<SquareMatrix> all = enumerate_02(n);
  std::vector<char> realized(all.size(), 0);

  auto outcomes = run_trials(all.size(), exec, [&](std::size_t i) -> TrialOutcome {
    const SquareMatrix& m = all[i];
    const bool t0 = is_t0(m);
    const auto r = realize_cn02(m);
    const std::string input = format_matrix_array(m);
    if (t0 != r.ok()) {
      return Failure{input, t0 ? "realized" : "NotT0",
                     r.ok() ? "realized as " + format_word(r.value().word) : r.error().message()};
    }
    if (!r.ok()) {
      if (r.error().reason != RealizeFailure::NotT0) {
        return Failure{input, "NotT0", r.error().message()};
      }
      return std::nullopt;
    }
    realized[i] = 1;
    const BraidWord& w = r.value().word;
    const SquareMatrix cn = cn_matrix(w);
    if (cn != m + m.transpose()) {
      return Failure{input, format_matrix_array(m + m.transpose()), format_matrix_array(cn)};
    }
    if (!is_pure(w)) return Failure{input, "pure word", format_word(w)};
    if (static_cast<long>(w.length()) != m.upper_sum()) {
      return Failure{input, "length " + std::to_string(m.upper_sum()),
                     "length " + std::to_string(w.length())};
    }
    return std::nullopt;
  });

  Cn02Certificate cert;
  cert.n = n;
  cert.candidates = all.size();
  cert.t0 = static_cast<std::size_t>(
      std::count_if(all.begin(), all.end(), [](const SquareMatrix& m) { return is_t0(m); }));
  cert.realized = static_cast<std::size_t>(std::count(realized.begin(), realized.end(), 1));
  cert.failures = collect_failures(outcomes);
  return cert;
}

}  // namespace crossmat
