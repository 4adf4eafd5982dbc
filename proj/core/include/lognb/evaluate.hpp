// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lognb/classifier.hpp"
#include "lognb/errors.hpp"
#include "lognb/log_event.hpp"

namespace lognb {

/// 2x2 layout with rows = actual class, error first:
///   [a b]   a: actual error,     predicted error
///   [c d]   b: actual error,     predicted non-error
///           c: actual non-error, predicted error
///           d: actual non-error, predicted non-error
struct ConfusionMatrix {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;
    std::uint64_t d = 0;

    std::uint64_t total() const { return a + b + c + d; }
    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Streaming confusion counter.
class ConfusionCounter {
  public:
    void add(ClassLabel predicted, ClassLabel actual);
    const ConfusionMatrix& matrix() const { return matrix_; }

  private:
    ConfusionMatrix matrix_;
};

/// Throws config_error on length mismatch.
ConfusionMatrix confusion(std::span<const ClassLabel> predicted,
                          std::span<const ClassLabel> actual);

struct Metrics {
    /// (a + d) / m
    double accuracy = 0.0;
    /// a / (a + b). Under this matrix layout the quotient is the error-class
    /// recall; the display name "Precision" is kept for report continuity
    /// and the standard-named extras below are reported alongside.
    std::optional<double> precision;
    /// a / (a + b), same value as `precision`, under its standard name.
    std::optional<double> error_recall;
    /// a / (a + c).
    std::optional<double> standard_precision;
};

/// Exact quotients. Undefined quotients (zero denominator) come back empty,
/// never 0 or a quiet NaN. Throws config_error when the matrix is empty.
Metrics metrics(const ConfusionMatrix& cm);

/// First n events train, the remainder tests. Order preserved, no
/// shuffling ever: the test set is strictly later in time than the
/// training set. Throws config_error unless 1 <= n < events.size().
template <class T>
std::pair<std::span<const T>, std::span<const T>>
split_time_consecutive(std::span<const T> events, std::size_t n) {
    if (n < 1 || n >= events.size()) {
        throw config_error("train size must satisfy 1 <= n < " +
                           std::to_string(events.size()) + ", got " + std::to_string(n));
    }
    return {events.first(n), events.subspan(n)};
}

struct MetricsReport {
    std::uint64_t n_documents = 0;
    std::uint64_t p_features = 0;
    std::uint64_t n_train = 0;
    std::uint64_t m_test = 0;
    std::uint64_t n_errors_total = 0;
    /// Percentage of error events among all documents (not just the test set).
    double error_percentage = 0.0;
    ConfusionMatrix matrix;
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> error_recall;
    std::optional<double> standard_precision;
    std::vector<InformativeFeature> top_features;
};

/// Assemble a report; derives m_test and all metric fields from the matrix.
MetricsReport build_report(std::uint64_t n_documents, std::uint64_t p_features,
                           std::uint64_t n_train, std::uint64_t n_errors_total,
                           const ConfusionMatrix& matrix,
                           std::vector<InformativeFeature> top_features);

/// Text block, in order: len(documents), len(features), len(train_set),
/// len(test_set), n_errs with 2-decimal percentage, the bracketed 2x2
/// matrix, "Accuracy [0-1] = x.xx. Precision [0-1] = x.xx" (or n/a), the
/// "Most Informative Features" ratio lines, then the standard-named extras.
/// Displayed accuracy/precision round to 2 decimals, half-to-even.
std::string render_report(const MetricsReport& report);

/// Machine-readable variant (JSON object, exact quotients, null for
/// undefined metrics).
std::string render_report_json(const MetricsReport& report);

}  // namespace lognb
