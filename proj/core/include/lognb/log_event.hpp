// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace lognb {

/// Event timestamp. Dialect A carries a four-digit year; dialect B has
/// none, so `year` is optional. Timestamps only order events within one
/// file; they are never fed to the classifier.
struct Timestamp {
    std::optional<int> year;  // four digits when present
    int month = 1;            // 1-12
    int day = 1;              // 1-31
    int hour = 0;             // 0-23
    int minute = 0;           // 0-59
    int second = 0;           // 0-59
    int millisecond = 0;      // 0-999

    friend bool operator==(const Timestamp&, const Timestamp&) = default;
};

/// One parsed log record. Trailing optional fields (FileName=, MethodName=
/// and friends) are not split out; they stay inside `content`.
struct LogEvent {
    Timestamp timestamp;
    std::optional<std::string> message_type;  // raw, case preserved
    std::string content;
    std::size_t source_line = 0;  // 1-based first line of the event in its file
};

/// Binary problem throughout: an event either is or is not an error.
enum class ClassLabel : std::uint8_t { non_error = 0, error = 1 };

inline constexpr std::size_t kNumClasses = 2;

/// Array index for per-class storage.
inline constexpr std::size_t class_index(ClassLabel c) {
    return static_cast<std::size_t>(c);
}

inline constexpr ClassLabel class_at(std::size_t i) {
    return i == 0 ? ClassLabel::non_error : ClassLabel::error;
}

inline constexpr ClassLabel other_class(ClassLabel c) {
    return c == ClassLabel::error ? ClassLabel::non_error : ClassLabel::error;
}

inline constexpr const char* to_string(ClassLabel c) {
    return c == ClassLabel::error ? "error" : "non_error";
}

struct LabeledEvent {
    LogEvent event;
    bool is_error = false;

    ClassLabel label() const {
        return is_error ? ClassLabel::error : ClassLabel::non_error;
    }
};

/// True iff the message type is present and contains "error",
/// case-insensitively. Content is never consulted, by contract: the type
/// field is the label source, and messages whose *content* mentions errors
/// ("Sending error 27 ...", "... No Error") must not flip the label.
bool is_error_type(const std::optional<std::string>& message_type);

LabeledEvent label_event(LogEvent event);

}  // namespace lognb
