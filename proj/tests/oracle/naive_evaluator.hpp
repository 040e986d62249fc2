#pragma once

// Reference evaluator used only by tests. It works on a plain answer matrix
// and shares no code with the engine:
//   - sub-goal score: integer code sum divided once by (count * top),
//   - key-goal score: inclusion-exclusion over every non-empty subset of
//     sub goals (probability that at least one is reached),
//   - participant score: product, in long double,
//   - 0/1 counts decided logically from the raw answers.

#include <cstddef>
#include <vector>

namespace sure::oracle {

struct NaiveParticipant {
  std::size_t row = 0;  // index into the input matrix
  std::vector<double> sub;
  std::vector<double> key;
  double overall = 0.0;
};

struct NaiveResult {
  std::vector<NaiveParticipant> participants;
  double general = 0.0;
  std::vector<double> key;
  std::vector<double> sub;
  std::size_t n_max = 0;
  std::size_t n_zero = 0;
};

// `question_sub[i]` is the flattened sub-goal index question i measures.
// `answers[p][i]` is a code in 0..top, or -1 for missing. With
// `exclude_missing` a row with any -1 is dropped; otherwise -1 counts as 0.
inline NaiveResult naive_evaluate(const std::vector<int>& subs_per_key,
                                  const std::vector<int>& question_sub, int top,
                                  const std::vector<std::vector<int>>& answers,
                                  bool exclude_missing) {
  std::size_t n_subs = 0;
  for (int s : subs_per_key) n_subs += static_cast<std::size_t>(s);

  NaiveResult res;
  res.key.assign(subs_per_key.size(), 0.0);
  res.sub.assign(n_subs, 0.0);
  long double general = 0.0L;
  std::vector<long double> key_sum(subs_per_key.size(), 0.0L);
  std::vector<long double> sub_sum(n_subs, 0.0L);

  for (std::size_t p = 0; p < answers.size(); ++p) {
    bool has_missing = false;
    for (int a : answers[p]) has_missing |= a < 0;
    if (has_missing && exclude_missing) continue;

    std::vector<long long> code_sum(n_subs, 0);
    std::vector<long long> count(n_subs, 0);
    for (std::size_t i = 0; i < question_sub.size(); ++i) {
      const int a = answers[p][i] < 0 ? 0 : answers[p][i];
      code_sum[static_cast<std::size_t>(question_sub[i])] += a;
      count[static_cast<std::size_t>(question_sub[i])] += 1;
    }

    NaiveParticipant np;
    np.row = p;
    for (std::size_t s = 0; s < n_subs; ++s) {
      np.sub.push_back(static_cast<double>(static_cast<long double>(code_sum[s]) /
                                           static_cast<long double>(count[s] * top)));
    }

    bool all_keys_full = true;
    bool some_key_empty = false;
    long double overall = 1.0L;
    std::size_t offset = 0;
    for (int m : subs_per_key) {
      long double any = 0.0L;
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        long double term = 1.0L;
        int bits = 0;
        for (int j = 0; j < m; ++j) {
          if (mask & (1u << j)) {
            term *= np.sub[offset + static_cast<std::size_t>(j)];
            ++bits;
          }
        }
        any += (bits % 2 == 1) ? term : -term;
      }
      bool full = false;
      bool empty = true;
      for (int j = 0; j < m; ++j) {
        const std::size_t s = offset + static_cast<std::size_t>(j);
        full |= code_sum[s] == count[s] * top;
        empty &= code_sum[s] == 0;
      }
      all_keys_full &= full;
      some_key_empty |= empty;
      np.key.push_back(static_cast<double>(any));
      overall *= any;
      offset += static_cast<std::size_t>(m);
    }
    np.overall = static_cast<double>(overall);

    general += overall;
    for (std::size_t k = 0; k < np.key.size(); ++k) key_sum[k] += np.key[k];
    for (std::size_t s = 0; s < n_subs; ++s) sub_sum[s] += np.sub[s];
    res.n_max += all_keys_full ? 1 : 0;
    res.n_zero += some_key_empty ? 1 : 0;
    res.participants.push_back(std::move(np));
  }

  const auto n = static_cast<long double>(res.participants.size());
  if (!res.participants.empty()) {
    res.general = static_cast<double>(general / n);
    for (std::size_t k = 0; k < key_sum.size(); ++k) res.key[k] = static_cast<double>(key_sum[k] / n);
    for (std::size_t s = 0; s < n_subs; ++s) res.sub[s] = static_cast<double>(sub_sum[s] / n);
  }
  return res;
}

}  // namespace sure::oracle
