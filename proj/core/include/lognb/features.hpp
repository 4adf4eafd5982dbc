// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lognb/log_event.hpp"
#include "lognb/tokenizer.hpp"

namespace lognb {

/// Document frequencies: each message contributes at most 1 per token, to
/// its own class and to the overall count. For every token and class,
/// per_class[c][t] <= overall[t] and the class counts sum to overall[t].
struct FrequencyTable {
    std::unordered_map<std::string, std::uint64_t> overall;
    std::array<std::unordered_map<std::string, std::uint64_t>, kNumClasses> per_class;
};

/// Streaming builder for FrequencyTable, mergeable by addition.
class FrequencyCounter {
  public:
    void add(const TokenBag& bag, ClassLabel label);
    void merge(const FrequencyCounter& other);

    std::uint64_t documents() const { return documents_; }

    /// Throws config_error("no training data") when nothing was counted.
    FrequencyTable take();

  private:
    FrequencyTable table_;
    std::uint64_t documents_ = 0;
};

FrequencyTable count_frequencies(std::span<const std::pair<TokenBag, ClassLabel>> labeled_bags);

/// The ordered feature tokens. `prealloc_count` of them were taken from the
/// rare (error) class before overall frequency got a say; never more than
/// ceil(quota_q * requested_p). The vocabulary is shorter than requested_p
/// when fewer distinct tokens exist; that is recorded here, not an error.
struct Vocabulary {
    std::vector<std::string> tokens;
    std::size_t prealloc_count = 0;
    std::size_t requested_p = 0;
    double quota_q = 0.0;

    std::size_t size() const { return tokens.size(); }
};

/// Two-phase selection. Phase 1 takes up to ceil(q*p) tokens by descending
/// error-class document frequency; phase 2 fills the remaining slots by
/// descending overall frequency, skipping tokens already chosen. Ties break
/// by ascending token text in both phases, so the result is deterministic
/// regardless of map iteration order.
///
/// The quota is what makes learning from rare events work: without it, the
/// feature budget fills up with majority-class tokens and the model never
/// accumulates evidence about errors.
Vocabulary select_vocabulary(const FrequencyTable& freqs, std::size_t p, double q);

/// presence[k] == (vocab.tokens[k] is in the message's bag).
using FeatureVector = std::vector<bool>;

FeatureVector vectorize(const TokenBag& bag, const Vocabulary& vocab);

}  // namespace lognb
