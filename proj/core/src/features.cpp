// SPDX-License-Identifier: Apache-2.0

#include "lognb/features.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lognb/errors.hpp"

namespace lognb {

void FrequencyCounter::add(const TokenBag& bag, ClassLabel label) {
    ++documents_;
    auto& cls = table_.per_class[class_index(label)];
    for (const std::string& token : bag) {
        ++table_.overall[token];
        ++cls[token];
    }
}

void FrequencyCounter::merge(const FrequencyCounter& other) {
    documents_ += other.documents_;
    for (const auto& [token, df] : other.table_.overall) table_.overall[token] += df;
    for (std::size_t c = 0; c < kNumClasses; ++c)
        for (const auto& [token, df] : other.table_.per_class[c])
            table_.per_class[c][token] += df;
}

FrequencyTable FrequencyCounter::take() {
    if (documents_ == 0) throw config_error("no training data");
    documents_ = 0;
    return std::move(table_);
}

FrequencyTable count_frequencies(
    std::span<const std::pair<TokenBag, ClassLabel>> labeled_bags) {
    FrequencyCounter counter;
    for (const auto& [bag, label] : labeled_bags) counter.add(bag, label);
    return counter.take();
}

namespace {

struct Ranked {
    const std::string* token;
    std::uint64_t df;
};

// Descending frequency, ties by ascending token text.
void rank(std::vector<Ranked>& entries) {
    std::sort(entries.begin(), entries.end(), [](const Ranked& x, const Ranked& y) {
        if (x.df != y.df) return x.df > y.df;
        return *x.token < *y.token;
    });
}

}  // namespace

Vocabulary select_vocabulary(const FrequencyTable& freqs, std::size_t p, double q) {
    if (p < 1) throw config_error("feature count p must be >= 1");
    if (!(q >= 0.0 && q <= 1.0)) throw config_error("quota fraction q must be in [0, 1]");

    std::size_t quota =
        static_cast<std::size_t>(std::ceil(q * static_cast<double>(p)));
    if (quota > p) quota = p;

    Vocabulary vocab;
    vocab.requested_p = p;
    vocab.quota_q = q;
    vocab.tokens.reserve(p);
    std::unordered_set<std::string_view> chosen;

    // Phase 1: reserve slots for the rare class before overall frequency
    // gets a say.
    const auto& error_freqs = freqs.per_class[class_index(ClassLabel::error)];
    std::vector<Ranked> by_error;
    by_error.reserve(error_freqs.size());
    for (const auto& [token, df] : error_freqs) by_error.push_back({&token, df});
    rank(by_error);
    for (const Ranked& r : by_error) {
        if (vocab.tokens.size() >= quota) break;
        vocab.tokens.push_back(*r.token);
        chosen.insert(*r.token);
    }
    vocab.prealloc_count = vocab.tokens.size();

    // Phase 2: fill the remainder by overall frequency.
    std::vector<Ranked> by_overall;
    by_overall.reserve(freqs.overall.size());
    for (const auto& [token, df] : freqs.overall) by_overall.push_back({&token, df});
    rank(by_overall);
    for (const Ranked& r : by_overall) {
        if (vocab.tokens.size() >= p) break;
        if (chosen.contains(*r.token)) continue;
        vocab.tokens.push_back(*r.token);
    }
    return vocab;
}

FeatureVector vectorize(const TokenBag& bag, const Vocabulary& vocab) {
    FeatureVector fv(vocab.tokens.size());
    for (std::size_t k = 0; k < vocab.tokens.size(); ++k)
        fv[k] = bag.contains(vocab.tokens[k]);
    return fv;
}

}  // namespace lognb
