#include "crossmat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "crossmat/realize.hpp"
#include "json.hpp"

namespace crossmat {

std::vector<SquareMatrix> enumerate_02(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_02: n must be in [1, 6]");
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  const std::size_t bits = slots.size();
  std::vector<SquareMatrix> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    SquareMatrix m(n);
    // first slot is the most significant bit, so masks ascend lexicographically
    for (std::size_t s = 0; s < bits; ++s)
      if ((mask >> (bits - 1 - s)) & 1U) m(slots[s].first, slots[s].second) = 2;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<SquareMatrix> enumerate_02_t0(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("enumerate_02_t0: n must be in [2, 6]");
  auto all = enumerate_02(n);
  std::vector<SquareMatrix> out;
  for (auto& m : all)
    if (is_t0(m)) out.push_back(std::move(m));
  return out;
}

std::optional<BraidWord> brute_force_realizable(const SquareMatrix& m, int max_len) {
  const int n = m.size();
  const SquareMatrix target = m.strictly_upper() ? m + m.transpose() : m;
  const long length = target.upper_sum();
  if (length > max_len) return std::nullopt;
  if (n < 2) {
    return length == 0 ? std::optional<BraidWord>(BraidWord(std::max(n, 1))) : std::nullopt;
  }
  std::vector<int> digits(static_cast<std::size_t>(length), 1);
  while (true) {
    BraidWord w(n);
    for (int d : digits) w.push_back({d, Sign::Positive});
    if (cn_matrix(w) == target && is_pure(w)) return w;
    // odometer over letters 1..n-1, last letter fastest
    std::size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] == n - 1) digits[--pos] = 1;
    if (pos == 0) return std::nullopt;
    ++digits[pos - 1];
  }
}

BraidWord random_word(int n, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_word(n, length, rng);
}

namespace {

std::string word_text(const BraidWord& w) {
  return "n=" + std::to_string(w.strands()) + " [" + format_word(w) + "]";
}

std::string mat(const SquareMatrix& m) { return format_matrix_array(m); }

// Zero pattern first (each pair zero with probability 1/2, redrawn until T0),
// then entries for the nonzero pairs.
template <typename Fill>
SquareMatrix random_t0_pattern(int n, std::mt19937_64& rng, Fill&& fill) {
  while (true) {
    SquareMatrix pattern(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pattern(i, j) = static_cast<int>(rng() & 1U);
    if (!is_t0(pattern)) continue;
    SquareMatrix m(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (pattern(i, j)) fill(m, i, j);
    return m;
  }
}

struct Campaign {
  std::size_t instances = 0;
  std::vector<Failure> failures;

  void add(std::size_t count, const std::vector<TrialOutcome>& outcomes) {
    instances += count;
    auto f = collect_failures(outcomes);
    failures.insert(failures.end(), f.begin(), f.end());
  }
};

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }
std::size_t pick(std::size_t requested, std::size_t fallback) {
  return requested > 0 ? requested : fallback;
}

// Base length for random_pure_word so the closed-up word stays within `len`
// letters: the closing permutation braid adds at most n(n-1)/2.
int pure_base(int n, int len) { return std::max(0, len - n * (n - 1) / 2); }

// Word-property campaigns over n in [2, max_n], length in [0, 40].
template <typename Check>
void word_campaign(Campaign& c, const ClaimParams& p, int max_n, std::size_t trials, Check&& check) {
  auto outcomes = run_trials(trials, p.exec, [&](std::size_t i) -> TrialOutcome {
    auto rng = trial_rng(p.seed, i);
    const int n = uniform(rng, 2, max_n);
    const int len = uniform(rng, 0, 40);
    return check(n, len, rng);
  });
  c.add(trials, outcomes);
}

using ClaimFn = std::function<void(Campaign&, const ClaimParams&, VerificationReport&)>;

struct ClaimDef {
  std::string id;
  std::string description;
  ClaimFn run;
};

void claim_cn_decomposition(Campaign& c, const ClaimParams& p, VerificationReport&) {
  word_campaign(c, p, pick(p.max_n, 7), pick(p.trials, std::size_t{10000}),
                [](int n, int len, std::mt19937_64& rng) -> TrialOutcome {
                  const BraidWord w = random_word(n, len, rng);
                  const SquareMatrix u = ou_matrix(w);
                  const SquareMatrix cn = cn_matrix(w);
                  if (cn != u + u.transpose()) return Failure{word_text(w), mat(u + u.transpose()), mat(cn)};
                  return std::nullopt;
                });
}

void claim_adequate(Campaign& c, const ClaimParams& p, VerificationReport&) {
  word_campaign(c, p, pick(p.max_n, 7), pick(p.trials, std::size_t{10000}),
                [](int n, int len, std::mt19937_64& rng) -> TrialOutcome {
                  const BraidWord w = random_word(n, len, rng);
                  const SquareMatrix cn = cn_matrix(w);
                  if (auto v = t0_violation(cn)) {
                    return Failure{word_text(w), "T0 CN matrix", mat(cn)};
                  }
                  return std::nullopt;
                });
}

void claim_even_pure(Campaign& c, const ClaimParams& p, VerificationReport&) {
  word_campaign(c, p, pick(p.max_n, 7), pick(p.trials, std::size_t{10000}),
                [](int n, int len, std::mt19937_64& rng) -> TrialOutcome {
                  const bool make_pure = (rng() & 1U) != 0;
                  const BraidWord w =
                      make_pure ? random_pure_word(n, pure_base(n, len), rng) : random_word(n, len, rng);
                  const bool even = cn_matrix(w).all_even();
                  if (even != is_pure(w)) {
                    return Failure{word_text(w), is_pure(w) ? "even CN" : "some odd CN entry",
                                   mat(cn_matrix(w))};
                  }
                  return std::nullopt;
                });
}

void claim_ou_c(Campaign& c, const ClaimParams& p, VerificationReport&) {
  word_campaign(c, p, pick(p.max_n, 7), pick(p.trials, std::size_t{10000}),
                [](int n, int len, std::mt19937_64& rng) -> TrialOutcome {
                  const BraidWord w = random_positive_word(n, len, rng);
                  const SquareMatrix u = ou_matrix(w);
                  const SquareMatrix cm = crossing_matrix(w);
                  if (u != cm) return Failure{word_text(w), mat(u), mat(cm)};
                  return std::nullopt;
                });
}

void claim_bc_ou(Campaign& c, const ClaimParams& p, VerificationReport&) {
  word_campaign(c, p, pick(p.max_n, 7), pick(p.trials, std::size_t{10000}),
                [](int n, int len, std::mt19937_64& rng) -> TrialOutcome {
                  const BraidWord a = random_word(n, len, rng);
                  const BraidWord b = random_word(n, uniform(rng, 0, 40), rng);
                  const Permutation order = random_permutation(n, rng);
                  const Permutation rho_a = braid_permutation(a);
                  const BraidWord ab = concat(a, b);
                  const std::string input = word_text(a) + " * " + word_text(b) + " order " +
                                            format_permutation(order);
                  const SquareMatrix lhs = ou_matrix(ab, order);
                  const SquareMatrix rhs = ou_matrix(a, order) + ou_matrix(b, compose(rho_a, order));
                  if (lhs != rhs) return Failure{input, mat(rhs), mat(lhs)};
                  const SquareMatrix action =
                      ou_matrix(a) + permute_matrix(ou_matrix(b), rho_a.inverse());
                  if (ou_matrix(ab) != action) return Failure{input, mat(action), mat(ou_matrix(ab))};
                  return std::nullopt;
                });
}

void claim_n_sum(Campaign& c, const ClaimParams& p, VerificationReport&) {
  word_campaign(c, p, pick(p.max_n, 7), pick(p.trials, std::size_t{10000}),
                [](int n, int len, std::mt19937_64& rng) -> TrialOutcome {
                  const BraidWord a = random_pure_word(n, pure_base(n, len), rng);
                  const BraidWord b = random_word(n, uniform(rng, 0, 40), rng);
                  const SquareMatrix lhs = cn_matrix(concat(a, b));
                  const SquareMatrix rhs = cn_matrix(a) + cn_matrix(b);
                  if (lhs != rhs) return Failure{word_text(a) + " * " + word_text(b), mat(rhs), mat(lhs)};
                  return std::nullopt;
                });
}

void claim_order_rev(Campaign& c, const ClaimParams& p, VerificationReport&) {
  word_campaign(c, p, pick(p.max_n, 7), pick(p.trials, std::size_t{10000}),
                [](int n, int len, std::mt19937_64& rng) -> TrialOutcome {
                  const BraidWord w = random_word(n, len, rng);
                  const SquareMatrix lhs = cn_matrix(reverse_diagram(w));
                  const SquareMatrix rhs = reverse_matrix(cn_matrix(w));
                  if (lhs != rhs) return Failure{word_text(w), mat(rhs), mat(lhs)};
                  return std::nullopt;
                });
}

SquareMatrix random_symmetric_t0(int n, int max_entry, std::mt19937_64& rng) {
  SquareMatrix m = random_t0_pattern(n, rng, [&](SquareMatrix& out, int i, int j) {
    out(i, j) = uniform(rng, 1, max_entry);
  });
  return m + m.transpose();
}

// Positive pure realization of a random symmetric T0 matrix; `check` sees the result.
template <typename Check>
void positive_pure_campaign(Campaign& c, const ClaimParams& p, std::size_t trials, Check&& check) {
  const int max_n = pick(p.max_n, 5);
  auto outcomes = run_trials(trials, p.exec, [&](std::size_t i) -> TrialOutcome {
    auto rng = trial_rng(p.seed, i);
    const SquareMatrix m = random_symmetric_t0(uniform(rng, 2, max_n), 4, rng);
    const auto r = realize_crossing_positive_pure(m);
    if (!r) return Failure{mat(m), "positive pure realization", r.error().message()};
    return check(m, r.value().word);
  });
  c.add(trials, outcomes);
}

void claim_sy(Campaign& c, const ClaimParams& p, VerificationReport&) {
  positive_pure_campaign(c, p, pick(p.trials, std::size_t{500}),
                         [](const SquareMatrix& m, const BraidWord& w) -> TrialOutcome {
                           const SquareMatrix u = ou_matrix(w);
                           if (!is_positive(w) || !is_pure(w)) {
                             return Failure{mat(m), "positive pure word", word_text(w)};
                           }
                           if (!u.symmetric()) return Failure{word_text(w), "symmetric OU", mat(u)};
                           return std::nullopt;
                         });
}

void claim_sym_t0(Campaign& c, const ClaimParams& p, VerificationReport&) {
  const int max_n = pick(p.max_n, 7);
  const std::size_t trials = pick(p.trials, std::size_t{10000});
  auto outcomes = run_trials(trials, p.exec, [&](std::size_t i) -> TrialOutcome {
    auto rng = trial_rng(p.seed, i);
    const int n = uniform(rng, 2, max_n);
    SquareMatrix m(n);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) m(a, b) = m(b, a) = uniform(rng, 0, 1) * uniform(rng, 1, 3);
    if (is_t0(m) != is_t0(m + m.transpose())) {
      return Failure{mat(m), is_t0(m) ? "T0" : "not T0", mat(m + m.transpose())};
    }
    return std::nullopt;
  });
  c.add(trials, outcomes);
}

void claim_permutation_braids(Campaign& c, const ClaimParams& p, VerificationReport& report,
                              bool symmetric) {
  const int max_n = pick(p.max_n, 5);
  long total = 0;
  for (int n = 2; n <= max_n; ++n) {
    const auto perms = all_permutations(n);
    std::set<std::vector<std::vector<int>>> images;
    for (const Permutation& perm : perms) {
      ++c.instances;
      ++total;
      const BraidWord w = permutation_braid(perm);
      const std::string input = format_permutation(perm);
      const SquareMatrix cm = crossing_matrix(w);
      const SquareMatrix m = symmetric ? cm + cm.transpose() : cm;
      if (braid_permutation(w) != perm) {
        c.failures.push_back({input, "word with permutation " + input, word_text(w)});
      }
      if (static_cast<int>(w.length()) != perm.inversions() || !is_positive(w)) {
        c.failures.push_back({input, std::to_string(perm.inversions()) + " positive letters",
                              word_text(w)});
      }
      const SquareMatrix cn = cn_matrix(w);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if (cn(a, b) > 1) c.failures.push_back({input, "each pair crosses at most once", word_text(w)});
      if (symmetric ? !is_double_simple(m) : !is_simple(m)) {
        c.failures.push_back({input, symmetric ? "double simple" : "simple", mat(m)});
      }
      if (!images.insert(m.rows()).second) {
        c.failures.push_back({input, "matrix distinct from other permutations", mat(m)});
      }
    }
    // The image is every (double) simple matrix: count them independently.
    std::size_t predicate_count = 0;
    const int slots = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
      SquareMatrix m(n);
      int s = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b, ++s)
          if ((mask >> s) & 1U) {
            m(a, b) = 1;
            if (symmetric) m(b, a) = 1;
          }
      if (symmetric ? is_double_simple(m) : is_simple(m)) {
        ++predicate_count;
        if (!images.contains(m.rows())) {
          c.failures.push_back({mat(m), "image of some permutation braid", "no permutation"});
        }
      }
    }
    report.counters["matrices_n" + std::to_string(n)] = static_cast<long>(predicate_count);
  }
  report.counters["permutations"] = total;
}

void claim_ou5(Campaign& c, const ClaimParams& p, VerificationReport& report) {
  const int max_n = pick(p.max_n, 5);
  const std::size_t sufficiency = pick(p.trials, std::size_t{1000});
  const std::size_t necessity = p.trials > 0 ? p.trials : std::size_t{10000};

  auto suff = run_trials(sufficiency, p.exec, [&](std::size_t i) -> TrialOutcome {
    auto rng = trial_rng(p.seed, i);
    const int n = uniform(rng, 2, max_n);
    SquareMatrix m = random_t0_pattern(n, rng, [&](SquareMatrix& out, int a, int b) {
      // (a,b) and (b,a) entries in [0,8] with an even, positive sum
      while (true) {
        const int x = uniform(rng, 0, 8);
        const int y = (x % 2 == 0) ? 2 * uniform(rng, 0, 4) : 2 * uniform(rng, 0, 3) + 1;
        if (x + y == 0) continue;
        out(a, b) = x;
        out(b, a) = y;
        return;
      }
    });
    const auto r = realize_ou(m);
    if (!r) return Failure{mat(m), "OU realization", r.error().message()};
    const BraidWord& w = r.value().word;
    if (!is_pure(w)) return Failure{mat(m), "pure word", word_text(w)};
    if (ou_matrix(w) != m) return Failure{mat(m), mat(m), mat(ou_matrix(w))};
    return std::nullopt;
  });
  c.add(sufficiency, suff);
  report.counters["sufficiency_trials"] = static_cast<long>(sufficiency);

  auto nec = run_trials(necessity, p.exec, [&](std::size_t i) -> TrialOutcome {
    auto rng = trial_rng(p.seed ^ 0x5eedULL, i);
    const BraidWord w = random_pure_word(uniform(rng, 2, max_n), uniform(rng, 0, 40), rng);
    const SquareMatrix u = ou_matrix(w);
    const SquareMatrix s = u + u.transpose();
    if (!s.non_negative() || !s.all_even() || !is_t0(s)) {
      return Failure{word_text(w), "U + U^T non-negative even T0", mat(s)};
    }
    return std::nullopt;
  });
  c.add(necessity, nec);
  report.counters["necessity_trials"] = static_cast<long>(necessity);
}

// Certifies the single size n (default 5); instances counts the T0 matrices,
// which are the ones that must be realized. Every other candidate must be
// rejected as NotT0.
void claim_cn5(Campaign& c, const ClaimParams& p, VerificationReport& report) {
  const int n = pick(p.max_n, 5);
  const Cn02Certificate cert = certify_cn02(n, p.exec);
  c.instances += cert.t0;
  c.failures.insert(c.failures.end(), cert.failures.begin(), cert.failures.end());
  report.counters["candidates"] = static_cast<long>(cert.candidates);
  report.counters["t0"] = static_cast<long>(cert.t0);
  report.counters["realized"] = static_cast<long>(cert.realized);
}

void claim_5pp(Campaign& c, const ClaimParams& p, VerificationReport& report) {
  const std::size_t forward = pick(p.trials, std::size_t{500});
  const std::size_t converse = p.trials > 0 ? p.trials : std::size_t{2000};
  positive_pure_campaign(c, p, forward, [](const SquareMatrix& m, const BraidWord& w) -> TrialOutcome {
    if (!is_positive(w) || !is_pure(w)) return Failure{mat(m), "positive pure word", word_text(w)};
    if (crossing_matrix(w) != m) return Failure{mat(m), mat(m), mat(crossing_matrix(w))};
    return std::nullopt;
  });
  report.counters["forward_trials"] = static_cast<long>(forward);

  const int max_n = pick(p.max_n, 5);
  auto outcomes = run_trials(converse, p.exec, [&](std::size_t i) -> TrialOutcome {
    auto rng = trial_rng(p.seed ^ 0xc0ffeeULL, i);
    const BraidWord w =
        make_positive(random_pure_word(uniform(rng, 2, max_n), uniform(rng, 0, 40), rng));
    const SquareMatrix cm = crossing_matrix(w);
    if (!is_pure(w) || !cm.non_negative() || !cm.symmetric() || !is_t0(cm)) {
      return Failure{word_text(w), "non-negative symmetric T0", mat(cm)};
    }
    return std::nullopt;
  });
  c.add(converse, outcomes);
  report.counters["converse_trials"] = static_cast<long>(converse);
}

void claim_standard_form(Campaign& c, const ClaimParams& p, VerificationReport&) {
  const int max_n = pick(p.max_n, 5);
  const std::size_t trials = pick(p.trials, std::size_t{1000});
  auto outcomes = run_trials(trials, p.exec, [&](std::size_t i) -> TrialOutcome {
    auto rng = trial_rng(p.seed, i);
    const BraidWord w = random_word(uniform(rng, 2, max_n), uniform(rng, 0, 40), rng);
    const StandardForm f = standard_form(w);
    const SquareMatrix s = f.pure_ou + f.pure_ou.transpose();
    if (!is_pure(f.pure)) return Failure{word_text(w), "pure factor", word_text(f.pure)};
    if (!is_simple(f.simple_ou)) return Failure{word_text(w), "simple L1", mat(f.simple_ou)};
    if (!s.non_negative() || !s.all_even() || !is_t0(s)) {
      return Failure{word_text(w), "M1 + M1^T non-negative even T0", mat(s)};
    }
    const SquareMatrix u = ou_matrix(concat(f.pure, f.simple));
    if (u != f.pure_ou + f.simple_ou) {
      return Failure{word_text(w), mat(f.pure_ou + f.simple_ou), mat(u)};
    }
    return std::nullopt;
  });
  c.add(trials, outcomes);
}

void claim_oracle_agreement(Campaign& c, const ClaimParams& p, VerificationReport& report) {
  const int max_n = pick(p.max_n, 4);
  for (int n = 2; n <= max_n; ++n) {
    const auto all = enumerate_02(n);
    auto outcomes = run_trials(all.size(), p.exec, [&](std::size_t i) -> TrialOutcome {
      const SquareMatrix& m = all[i];
      const auto fast = realize_cn02(m);
      const auto brute = brute_force_realizable(m, 2 * n * (n - 1) / 2);
      const std::string input = format_matrix_array(m);
      if (fast.ok() != brute.has_value()) {
        return Failure{input, brute ? "realizable (oracle)" : "not realizable (oracle)",
                       fast ? "realized" : fast.error().message()};
      }
      if (!brute) return std::nullopt;
      const BraidWord& w = fast.value().word;
      if (w.length() != brute->length() || cn_matrix(w) != cn_matrix(*brute)) {
        return Failure{input, word_text(*brute), word_text(w)};
      }
      return std::nullopt;
    });
    c.add(all.size(), outcomes);
    report.counters["candidates_n" + std::to_string(n)] = static_cast<long>(all.size());
  }
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = {
      {"cn-decomposition", "N = U + U^T on random words", claim_cn_decomposition},
      {"prop-adequate", "every CN matrix is T0", claim_adequate},
      {"prop-even-pure", "CN entries all even exactly for pure diagrams", claim_even_pure},
      {"prop-OU-C", "OU matrix equals crossing matrix on positive words", claim_ou_c},
      {"prop-BC-OU", "OU matrix of a product: U(AB,p) = U(A,p) + U(B, rho_A p)", claim_bc_ou},
      {"prop-N-sum", "N(AB) = N(A) + N(B) when A is pure", claim_n_sum},
      {"prop-order-rev", "N of the mirrored diagram is the reversed N", claim_order_rev},
      {"prop-sy", "OU matrix of a positive pure diagram is symmetric", claim_sy},
      {"lem-symT0", "symmetric M is T0 iff M + M^T is T0", claim_sym_t0},
      {"lem-iii", "permutation braids <-> simple crossing matrices",
       [](Campaign& c, const ClaimParams& p, VerificationReport& r) {
         claim_permutation_braids(c, p, r, false);
       }},
      {"lem-iiii", "permutation braids <-> double simple CN matrices",
       [](Campaign& c, const ClaimParams& p, VerificationReport& r) {
         claim_permutation_braids(c, p, r, true);
       }},
      {"thm-OU5", "OU matrices of pure diagrams are those with M + M^T non-negative even T0",
       claim_ou5},
      {"cor-CN5", "every T0 strictly upper (0,2)-matrix is CN-realizable, exhaustively", claim_cn5},
      {"cor-5pp", "crossing matrices of positive pure braids are the non-negative symmetric T0 ones",
       claim_5pp},
      {"standard-form", "U(pure * simple) = M1 + L1 with L1 simple and M1 + M1^T even T0",
       claim_standard_form},
      {"oracle-agreement", "brute-force oracle and realize_cn02 agree on every (0,2)-matrix",
       claim_oracle_agreement},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

VerificationReport verify_claim(const std::string& claim, const ClaimParams& params) {
  const auto& defs = registry();
  auto it = std::find_if(defs.begin(), defs.end(), [&](const ClaimDef& d) { return d.id == claim; });
  if (it == defs.end()) throw std::invalid_argument("unknown claim '" + claim + "'");

  VerificationReport report;
  report.claim = it->id;
  report.description = it->description;
  report.seed = params.seed;
  const auto start = std::chrono::steady_clock::now();
  Campaign campaign;
  it->run(campaign, params, report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  report.instances = campaign.instances;
  report.failures = std::move(campaign.failures);
  return report;
}

std::string format_report(const VerificationReport& report, std::size_t max_failures) {
  std::ostringstream out;
  out << "claim: " << report.claim << '\n';
  out << "checks: " << report.description << '\n';
  out << "instances: " << report.instances << '\n';
  out << "seed: " << report.seed << '\n';
  for (const auto& [name, value] : report.counters) out << name << ": " << value << '\n';
  out << "failures: " << report.failures.size() << '\n';
  for (std::size_t k = 0; k < report.failures.size() && k < max_failures; ++k) {
    const auto& f = report.failures[k];
    out << "  input: " << f.input << "\n    expected: " << f.expected << "\n    got: " << f.got
        << '\n';
  }
  out << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string report_json(const VerificationReport& report) {
  nlohmann::json j;
  j["claim"] = report.claim;
  j["instances"] = report.instances;
  j["failures"] = report.failures.size();
  j["seed"] = report.seed;
  j["pass"] = report.pass();
  j["elapsed_seconds"] = report.elapsed.count();
  j["counters"] = report.counters;
  return j.dump();
}

}  // namespace crossmat
