// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "lognb/classifier.hpp"
#include "lognb/errors.hpp"

namespace lognb {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatName = "lognb-model";

std::vector<std::string> sorted(const std::unordered_set<std::string>& words) {
    std::vector<std::string> v(words.begin(), words.end());
    std::sort(v.begin(), v.end());
    return v;
}

[[noreturn]] void bad_model(const std::string& what) {
    throw config_error("invalid model document: " + what);
}

}  // namespace

void save_model(const NBModel& model, std::ostream& out) {
    ordered_json doc;
    doc["format"] = kFormatName;
    doc["format_version"] = kModelFormatVersion;
    doc["alpha"] = model.alpha;
    doc["train_size"] = model.train_size;
    doc["class_counts"] = {
        {"error", model.class_counts[class_index(ClassLabel::error)]},
        {"non_error", model.class_counts[class_index(ClassLabel::non_error)]},
    };
    doc["tokenizer"] = {
        {"extra_token_chars", model.tokenizer.extra_token_chars},
        {"exclude_numbers", model.tokenizer.exclude_numbers},
        {"stop_words", sorted(model.tokenizer.stop_words)},
    };
    doc["vocabulary"] = {
        {"requested_p", model.vocabulary.requested_p},
        {"quota_q", model.vocabulary.quota_q},
        {"prealloc_count", model.vocabulary.prealloc_count},
        {"tokens", model.vocabulary.tokens},
    };
    doc["present_prob"] = {
        {"error", model.present_prob[class_index(ClassLabel::error)]},
        {"non_error", model.present_prob[class_index(ClassLabel::non_error)]},
    };
    out << doc.dump(2) << '\n';
}

void save_model_file(const NBModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write model file: " + path);
    save_model(model, out);
    out.flush();
    if (!out) throw io_error("write failure in model file: " + path);
}

NBModel load_model(std::istream& in) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad_model(e.what());
    }
    try {
        if (doc.value("format", "") != kFormatName) bad_model("missing lognb-model tag");
        int version = doc.at("format_version").get<int>();
        if (version != kModelFormatVersion) {
            bad_model("unsupported format_version " + std::to_string(version) +
                      " (expected " + std::to_string(kModelFormatVersion) + ")");
        }

        NBModel model;
        model.alpha = doc.at("alpha").get<double>();
        if (!(model.alpha > 0.0)) bad_model("alpha must be > 0");
        model.train_size = doc.at("train_size").get<std::uint64_t>();

        const auto& counts = doc.at("class_counts");
        model.class_counts[class_index(ClassLabel::error)] =
            counts.at("error").get<std::uint64_t>();
        model.class_counts[class_index(ClassLabel::non_error)] =
            counts.at("non_error").get<std::uint64_t>();
        if (model.class_counts[0] == 0 || model.class_counts[1] == 0)
            bad_model("both class counts must be positive");
        if (model.class_counts[0] + model.class_counts[1] != model.train_size)
            bad_model("class counts do not sum to train_size");

        const auto& tok = doc.at("tokenizer");
        model.tokenizer.extra_token_chars = tok.at("extra_token_chars").get<std::string>();
        model.tokenizer.exclude_numbers = tok.at("exclude_numbers").get<bool>();
        model.tokenizer.stop_words.clear();
        for (const auto& w : tok.at("stop_words"))
            model.tokenizer.stop_words.insert(w.get<std::string>());

        const auto& vocab = doc.at("vocabulary");
        model.vocabulary.requested_p = vocab.at("requested_p").get<std::size_t>();
        model.vocabulary.quota_q = vocab.at("quota_q").get<double>();
        model.vocabulary.prealloc_count = vocab.at("prealloc_count").get<std::size_t>();
        model.vocabulary.tokens = vocab.at("tokens").get<std::vector<std::string>>();

        const auto& probs = doc.at("present_prob");
        model.present_prob[class_index(ClassLabel::error)] =
            probs.at("error").get<std::vector<double>>();
        model.present_prob[class_index(ClassLabel::non_error)] =
            probs.at("non_error").get<std::vector<double>>();

        std::size_t p = model.vocabulary.tokens.size();
        std::uint64_t n = model.train_size;
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            if (model.present_prob[c].size() != p)
                bad_model("present_prob length does not match vocabulary");
            model.class_log_priors[c] =
                std::log(static_cast<double>(model.class_counts[c]) /
                         static_cast<double>(n));
            model.log_present[c].resize(p);
            model.log_absent[c].resize(p);
            for (std::size_t k = 0; k < p; ++k) {
                double present = model.present_prob[c][k];
                if (!(present > 0.0 && present < 1.0))
                    bad_model("present probability outside (0, 1)");
                model.log_present[c][k] = std::log(present);
                model.log_absent[c][k] = std::log(1.0 - present);
            }
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        bad_model(e.what());
    }
}

NBModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open model file: " + path);
    return load_model(in);
}

}  // namespace lognb
