// SPDX-License-Identifier: Apache-2.0

#include "lognb/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lognb/errors.hpp"

namespace lognb {

Trainer::Trainer(Vocabulary vocabulary, double alpha, TokenizerConfig tokenizer)
    : vocabulary_(std::move(vocabulary)),
      tokenizer_(std::move(tokenizer)),
      alpha_(alpha) {
    if (!(alpha > 0.0)) throw config_error("smoothing alpha must be > 0");
    for (auto& counts : present_counts_) counts.assign(vocabulary_.size(), 0);
}

void Trainer::add(const FeatureVector& fv, ClassLabel label) {
    if (finished_) throw config_error("trainer already finished");
    if (fv.size() != vocabulary_.size()) {
        throw config_error("feature vector length " + std::to_string(fv.size()) +
                           " does not match vocabulary size " +
                           std::to_string(vocabulary_.size()));
    }
    std::size_t cls = class_index(label);
    ++class_counts_[cls];
    auto& counts = present_counts_[cls];
    for (std::size_t k = 0; k < fv.size(); ++k)
        if (fv[k]) ++counts[k];
}

NBModel Trainer::finish() {
    if (finished_) throw config_error("trainer already finished");
    finished_ = true;
    std::uint64_t n = total();
    if (n == 0) throw config_error("no training examples");
    if (class_counts_[0] == 0 || class_counts_[1] == 0)
        throw degenerate_training_error(
            "degenerate training set: all examples belong to class " +
            std::string(to_string(class_at(class_counts_[0] == 0 ? 1 : 0))));

    NBModel model;
    model.vocabulary = std::move(vocabulary_);
    model.tokenizer = std::move(tokenizer_);
    model.alpha = alpha_;
    model.train_size = n;
    model.class_counts = class_counts_;
    std::size_t p = model.vocabulary.size();
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        model.class_log_priors[c] = std::log(static_cast<double>(class_counts_[c]) /
                                             static_cast<double>(n));
        model.present_prob[c].resize(p);
        model.log_present[c].resize(p);
        model.log_absent[c].resize(p);
        double denom = static_cast<double>(class_counts_[c]) + 2.0 * alpha_;
        for (std::size_t k = 0; k < p; ++k) {
            double present =
                (static_cast<double>(present_counts_[c][k]) + alpha_) / denom;
            model.present_prob[c][k] = present;
            model.log_present[c][k] = std::log(present);
            model.log_absent[c][k] = std::log(1.0 - present);
        }
    }
    return model;
}

NBModel train(std::span<const std::pair<FeatureVector, ClassLabel>> examples,
              Vocabulary vocabulary, double alpha, TokenizerConfig tokenizer) {
    Trainer trainer(std::move(vocabulary), alpha, std::move(tokenizer));
    for (const auto& [fv, label] : examples) trainer.add(fv, label);
    return trainer.finish();
}

std::array<double, kNumClasses> posterior_scores(const NBModel& model,
                                                 const FeatureVector& fv) {
    if (fv.size() != model.feature_count()) {
        throw config_error("feature vector length " + std::to_string(fv.size()) +
                           " does not match model vocabulary size " +
                           std::to_string(model.feature_count()));
    }
    std::array<double, kNumClasses> scores;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        double s = model.class_log_priors[c];
        const auto& lp = model.log_present[c];
        const auto& la = model.log_absent[c];
        for (std::size_t k = 0; k < fv.size(); ++k) s += fv[k] ? lp[k] : la[k];
        scores[c] = s;
    }
    return scores;
}

ClassLabel classify(const NBModel& model, const FeatureVector& fv) {
    auto scores = posterior_scores(model, fv);
    // Strict inequality: an exact tie stays non_error.
    return scores[class_index(ClassLabel::error)] >
                   scores[class_index(ClassLabel::non_error)]
               ? ClassLabel::error
               : ClassLabel::non_error;
}

std::vector<ClassLabel> classify_many(const NBModel& model,
                                      std::span<const FeatureVector> fvs) {
    std::vector<ClassLabel> labels;
    labels.reserve(fvs.size());
    for (const FeatureVector& fv : fvs) labels.push_back(classify(model, fv));
    return labels;
}

std::vector<InformativeFeature> most_informative(const NBModel& model, std::size_t k) {
    constexpr std::size_t err = class_index(ClassLabel::error);
    constexpr std::size_t ok = class_index(ClassLabel::non_error);
    std::vector<InformativeFeature> features;
    features.reserve(model.feature_count() * 2);
    for (std::size_t idx = 0; idx < model.feature_count(); ++idx) {
        for (bool present : {true, false}) {
            double p_err = present ? model.present_prob[err][idx]
                                   : model.absent_prob(err, idx);
            double p_ok = present ? model.present_prob[ok][idx]
                                  : model.absent_prob(ok, idx);
            InformativeFeature f;
            f.token = model.vocabulary.tokens[idx];
            f.present = present;
            if (p_err > p_ok) {
                f.favored = ClassLabel::error;
                f.ratio = p_err / p_ok;
            } else {
                f.favored = ClassLabel::non_error;
                f.ratio = p_ok / p_err;
            }
            features.push_back(std::move(f));
        }
    }
    std::sort(features.begin(), features.end(),
              [](const InformativeFeature& x, const InformativeFeature& y) {
                  if (x.ratio != y.ratio) return x.ratio > y.ratio;
                  if (x.token != y.token) return x.token < y.token;
                  return x.present && !y.present;
              });
    if (features.size() > k) features.resize(k);
    return features;
}

std::string render_most_informative(std::span<const InformativeFeature> features) {
    std::string out = "Most Informative Features\n";
    for (const InformativeFeature& f : features) {
        const char* value = f.present ? "True" : "False";
        const char* favored = f.favored == ClassLabel::error ? "True" : "False";
        const char* other = f.favored == ClassLabel::error ? "False" : "True";
        std::vector<char> buf(f.token.size() + 96);
        std::snprintf(buf.data(), buf.size(), "%24s = %-14s %5s : %-6s = %8.1f : 1.0\n",
                      f.token.c_str(), value, favored, other, f.ratio);
        out += buf.data();
    }
    return out;
}

}  // namespace lognb
