// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lognb/log_event.hpp"

namespace lognb {

/// The line did not start a new event; it belongs to the previous one
/// (wrapped content).
struct Continuation {
    std::string text;
};

/// The line carries nothing usable.
struct Malformed {
    std::string reason;
};

using ParseResult = std::variant<LogEvent, Continuation, Malformed>;

/// Classify a single input line. Two timestamp dialects are recognized:
///
///   A: `YYYYMMDD HHMMSS.ttt ...`
///      The message type is the first whitespace-delimited token after the
///      timestamp (and after an optional five-digit sequence number), taken
///      only when that token, stripped of one trailing colon ("Error:" or
///      "ERROR :"), is purely alphabetic. Otherwise the whole remainder is
///      content. A five-digit sequence number always stays inside content.
///
///   B: `MM/DD HHMMSS.ttt|NNNNN|type|content`
///      No year. NNNNN is five digits (surrounding blanks tolerated); the
///      trimmed third pipe field is the type; everything after its closing
///      pipe is content, verbatim.
///
/// Lines that start with neither timestamp are continuations; blank or
/// whitespace-only lines are malformed. Nothing throws: every outcome is
/// encoded in the ParseResult.
ParseResult parse_line(std::string_view raw);

struct ParseStats {
    std::uint64_t lines_total = 0;
    std::uint64_t events = 0;
    std::uint64_t continuations_folded = 0;
    std::uint64_t malformed = 0;
    std::uint64_t orphans = 0;

    ParseStats& operator+=(const ParseStats& other);
    friend bool operator==(const ParseStats&, const ParseStats&) = default;
};

/// Key: value text block, one counter per line.
std::string render_stats(const ParseStats& stats);

using EventSink = std::function<void(LogEvent&&)>;

/// Incremental line-by-line parser. Continuation lines are folded
/// (space-joined) into the event under construction; continuations seen
/// before any event are counted as orphans and dropped. Memory use is
/// independent of input length: only the single pending event is held.
/// Lines are expected to be UTF-8-clean already; the stream/file entry
/// points below run sanitize_utf8 before feeding.
class StreamParser {
  public:
    explicit StreamParser(EventSink sink) : sink_(std::move(sink)) {}

    void feed_line(std::string_view raw);

    /// Flush the pending event. Call once after the last line.
    void finish();

    const ParseStats& stats() const { return stats_; }

  private:
    void flush_pending();

    EventSink sink_;
    ParseStats stats_;
    std::optional<LogEvent> pending_;
    std::size_t line_no_ = 0;
};

/// Replace invalid UTF-8 byte sequences with U+FFFD. Valid input comes
/// through untouched.
std::string sanitize_utf8(std::string_view line);

/// Parse a text stream (LF or CRLF). Throws io_error if the stream goes
/// bad mid-read; `name` is used in that message.
ParseStats parse_stream(std::istream& in, const EventSink& sink,
                        std::string_view name = "<stream>");

/// Streaming file parse. Throws io_error if the file cannot be opened or read.
ParseStats parse_file(const std::string& path, const EventSink& sink);

/// Convenience: collect events into a vector.
std::pair<std::vector<LogEvent>, ParseStats> parse_lines(std::span<const std::string> lines);
std::pair<std::vector<LogEvent>, ParseStats> parse_file(const std::string& path);

}  // namespace lognb
