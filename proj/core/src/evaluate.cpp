// SPDX-License-Identifier: Apache-2.0

#include "lognb/evaluate.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace lognb {
namespace {

// Two-decimal display. snprintf rounds the stored double correctly
// (half-to-even on the exact binary value).
std::string format2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string format2_or_na(const std::optional<double>& v) {
    return v ? format2(*v) : std::string("n/a");
}

std::string format4_or_na(const std::optional<double>& v) {
    if (!v) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

int digit_width(std::uint64_t v) {
    int w = 1;
    while (v >= 10) {
        v /= 10;
        ++w;
    }
    return w;
}

}  // namespace

void ConfusionCounter::add(ClassLabel predicted, ClassLabel actual) {
    if (actual == ClassLabel::error) {
        if (predicted == ClassLabel::error) ++matrix_.a;
        else ++matrix_.b;
    } else {
        if (predicted == ClassLabel::error) ++matrix_.c;
        else ++matrix_.d;
    }
}

ConfusionMatrix confusion(std::span<const ClassLabel> predicted,
                          std::span<const ClassLabel> actual) {
    if (predicted.size() != actual.size()) {
        throw config_error("predicted and actual label sequences differ in length: " +
                           std::to_string(predicted.size()) + " vs " +
                           std::to_string(actual.size()));
    }
    ConfusionCounter counter;
    for (std::size_t i = 0; i < predicted.size(); ++i)
        counter.add(predicted[i], actual[i]);
    return counter.matrix();
}

Metrics metrics(const ConfusionMatrix& cm) {
    std::uint64_t m = cm.total();
    if (m == 0) throw config_error("empty confusion matrix");
    Metrics out;
    out.accuracy = static_cast<double>(cm.a + cm.d) / static_cast<double>(m);
    if (cm.a + cm.b > 0) {
        double q = static_cast<double>(cm.a) / static_cast<double>(cm.a + cm.b);
        out.precision = q;
        out.error_recall = q;
    }
    if (cm.a + cm.c > 0)
        out.standard_precision =
            static_cast<double>(cm.a) / static_cast<double>(cm.a + cm.c);
    return out;
}

MetricsReport build_report(std::uint64_t n_documents, std::uint64_t p_features,
                           std::uint64_t n_train, std::uint64_t n_errors_total,
                           const ConfusionMatrix& matrix,
                           std::vector<InformativeFeature> top_features) {
    if (n_documents == 0) throw config_error("report requires at least one document");
    MetricsReport r;
    r.n_documents = n_documents;
    r.p_features = p_features;
    r.n_train = n_train;
    r.m_test = matrix.total();
    r.n_errors_total = n_errors_total;
    r.error_percentage =
        100.0 * static_cast<double>(n_errors_total) / static_cast<double>(n_documents);
    r.matrix = matrix;
    Metrics m = metrics(matrix);
    r.accuracy = m.accuracy;
    r.precision = m.precision;
    r.error_recall = m.error_recall;
    r.standard_precision = m.standard_precision;
    r.top_features = std::move(top_features);
    return r;
}

std::string render_report(const MetricsReport& r) {
    std::string out;
    out += "len(documents) = " + std::to_string(r.n_documents) + "\n";
    out += "len(features) = " + std::to_string(r.p_features) + "\n";
    out += "len(train_set) = " + std::to_string(r.n_train) + "\n";
    out += "len(test_set) = " + std::to_string(r.m_test) + "\n";
    out += "n_errs = " + std::to_string(r.n_errors_total) +
           ", percentage = " + format2(r.error_percentage) + "\n";
    out += "\nConfusion matrix =\n";
    int w = digit_width(r.matrix.a);
    w = std::max(w, digit_width(r.matrix.b));
    w = std::max(w, digit_width(r.matrix.c));
    w = std::max(w, digit_width(r.matrix.d));
    char buf[128];
    std::snprintf(buf, sizeof buf, "[%*llu %*llu]\n[%*llu %*llu]\n", w,
                  static_cast<unsigned long long>(r.matrix.a), w,
                  static_cast<unsigned long long>(r.matrix.b), w,
                  static_cast<unsigned long long>(r.matrix.c), w,
                  static_cast<unsigned long long>(r.matrix.d));
    out += buf;
    out += "Accuracy [0-1] = " + format2(r.accuracy) +
           ". Precision [0-1] = " + format2_or_na(r.precision) + "\n";
    out += render_most_informative(r.top_features);
    out += "\nError recall [0-1] = " + format4_or_na(r.error_recall) + " (a/(a+b))\n";
    out += "Standard precision [0-1] = " + format4_or_na(r.standard_precision) +
           " (a/(a+c))\n";
    return out;
}

std::string render_report_json(const MetricsReport& r) {
    nlohmann::ordered_json doc;
    doc["documents"] = r.n_documents;
    doc["features"] = r.p_features;
    doc["train_size"] = r.n_train;
    doc["test_size"] = r.m_test;
    doc["errors_total"] = r.n_errors_total;
    doc["error_percentage"] = r.error_percentage;
    doc["confusion"] = {{"a", r.matrix.a}, {"b", r.matrix.b},
                        {"c", r.matrix.c}, {"d", r.matrix.d}};
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    doc["accuracy"] = r.accuracy;
    doc["precision"] = opt(r.precision);
    doc["error_recall"] = opt(r.error_recall);
    doc["standard_precision"] = opt(r.standard_precision);
    auto& feats = doc["most_informative"] = nlohmann::ordered_json::array();
    for (const InformativeFeature& f : r.top_features) {
        feats.push_back({{"token", f.token},
                         {"value", f.present ? "present" : "absent"},
                         {"favored", to_string(f.favored)},
                         {"ratio", f.ratio}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace lognb
