// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lognb/features.hpp"
#include "lognb/log_event.hpp"
#include "lognb/tokenizer.hpp"

namespace lognb {

/// Binary Bernoulli naive Bayes model. Immutable after training; safe to
/// share across any number of concurrent classify calls.
///
/// Priors are unsmoothed class proportions. Conditionals are smoothed
/// presence probabilities (m + alpha) / (class_count + 2*alpha); the absent
/// probability is the exact floating complement, so present + absent == 1
/// and every stored probability lies strictly inside (0, 1). Scores are
/// accumulated in log space: with feature counts in the thousands, direct
/// probability products underflow.
struct NBModel {
    Vocabulary vocabulary;
    /// Tokenizer settings the vocabulary was built with. Classification of
    /// new text must tokenize the same way; stop words are carried along
    /// for self-description even though anything they would remove is
    /// out-of-vocabulary anyway.
    TokenizerConfig tokenizer;
    double alpha = 0.5;
    std::uint64_t train_size = 0;  // n
    std::array<std::uint64_t, kNumClasses> class_counts{};
    std::array<double, kNumClasses> class_log_priors{};
    // Indexed [class][feature].
    std::array<std::vector<double>, kNumClasses> present_prob;
    std::array<std::vector<double>, kNumClasses> log_present;
    std::array<std::vector<double>, kNumClasses> log_absent;

    std::size_t feature_count() const { return vocabulary.size(); }
    double absent_prob(std::size_t cls, std::size_t k) const {
        return 1.0 - present_prob[cls][k];
    }
};

/// One-pass trainer; add() may be called streaming so training memory does
/// not depend on corpus size.
class Trainer {
  public:
    /// Throws config_error when alpha <= 0.
    Trainer(Vocabulary vocabulary, double alpha, TokenizerConfig tokenizer = {});

    /// Throws config_error when fv length differs from the vocabulary.
    void add(const FeatureVector& fv, ClassLabel label);

    std::uint64_t total() const { return class_counts_[0] + class_counts_[1]; }

    /// Consumes the trainer; at most one call. Throws config_error on an
    /// empty training set and degenerate_training_error when only one class
    /// was seen.
    NBModel finish();

  private:
    Vocabulary vocabulary_;
    TokenizerConfig tokenizer_;
    double alpha_;
    std::array<std::uint64_t, kNumClasses> class_counts_{};
    std::array<std::vector<std::uint64_t>, kNumClasses> present_counts_;
    bool finished_ = false;
};

NBModel train(std::span<const std::pair<FeatureVector, ClassLabel>> examples,
              Vocabulary vocabulary, double alpha, TokenizerConfig tokenizer = {});

/// Unnormalized per-class log scores: log prior plus the sum of per-feature
/// log conditionals for the observed values. Index with class_index().
std::array<double, kNumClasses> posterior_scores(const NBModel& model,
                                                 const FeatureVector& fv);

/// Argmax of posterior_scores; exact ties resolve to non_error (alarming on
/// a perfect tie is unjustified, and a fixed rule keeps this testable).
ClassLabel classify(const NBModel& model, const FeatureVector& fv);

std::vector<ClassLabel> classify_many(const NBModel& model,
                                      std::span<const FeatureVector> fvs);

/// A (token, value) pair with the largest cross-class likelihood ratio
/// P(value|C_i) / P(value|C_j), ratio >= 1, favored_class the numerator.
struct InformativeFeature {
    std::string token;
    bool present = true;          // the feature value
    ClassLabel favored = ClassLabel::non_error;
    double ratio = 1.0;
};

/// Top-k by descending ratio; ties by ascending token, then present before
/// absent. Returns fewer than k when the vocabulary is small.
std::vector<InformativeFeature> most_informative(const NBModel& model, std::size_t k);

/// "Most Informative Features" block:
///   `                 circuit = True           True : False  =  12799.6 : 1.0`
std::string render_most_informative(std::span<const InformativeFeature> features);

inline constexpr int kModelFormatVersion = 1;

/// Versioned, self-describing JSON document: format_version, alpha, n,
/// class counts, the ordered vocabulary, the tokenizer settings, and the
/// per-token present-probabilities per class (absent is derived). A
/// save/load round trip reproduces classify decisions bit-exactly.
void save_model(const NBModel& model, std::ostream& out);
void save_model_file(const NBModel& model, const std::string& path);

/// Throws config_error on anything that is not a model document with a
/// matching format_version; io_error on unreadable input.
NBModel load_model(std::istream& in);
NBModel load_model_file(const std::string& path);

}  // namespace lognb
