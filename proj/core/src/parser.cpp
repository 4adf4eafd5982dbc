// SPDX-License-Identifier: Apache-2.0

#include "lognb/parser.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "lognb/errors.hpp"

namespace lognb {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

bool all_alpha(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (!std::isalpha(c)) return false;
    return true;
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

bool valid_date(int month, int day) {
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

bool valid_clock(int hour, int minute, int second) {
    return hour <= 23 && minute <= 59 && second <= 59;
}

// `HHMMSS.ttt` at s[pos, pos+10).
bool match_clock(std::string_view s, std::size_t pos, Timestamp& ts) {
    if (s.size() < pos + 10) return false;
    std::string_view hms = s.substr(pos, 6);
    if (!all_digits(hms) || s[pos + 6] != '.') return false;
    std::string_view ms = s.substr(pos + 7, 3);
    if (!all_digits(ms)) return false;
    ts.hour = to_int(hms.substr(0, 2));
    ts.minute = to_int(hms.substr(2, 2));
    ts.second = to_int(hms.substr(4, 2));
    ts.millisecond = to_int(ms);
    return valid_clock(ts.hour, ts.minute, ts.second);
}

// Dialect A prefix: `YYYYMMDD HHMMSS.ttt` followed by a space or the end
// of the line. 19 characters.
std::optional<Timestamp> match_timestamp_a(std::string_view line) {
    if (line.size() < 19) return std::nullopt;
    std::string_view date = line.substr(0, 8);
    if (!all_digits(date) || line[8] != ' ') return std::nullopt;
    Timestamp ts;
    ts.year = to_int(date.substr(0, 4));
    ts.month = to_int(date.substr(4, 2));
    ts.day = to_int(date.substr(6, 2));
    if (!valid_date(ts.month, ts.day)) return std::nullopt;
    if (!match_clock(line, 9, ts)) return std::nullopt;
    if (line.size() > 19 && line[19] != ' ') return std::nullopt;
    return ts;
}

// Dialect B prefix: `MM/DD HHMMSS.ttt` followed by '|'. 16 characters.
std::optional<Timestamp> match_timestamp_b(std::string_view line) {
    if (line.size() < 17 || line[2] != '/' || line[5] != ' ' || line[16] != '|')
        return std::nullopt;
    std::string_view mm = line.substr(0, 2);
    std::string_view dd = line.substr(3, 2);
    if (!all_digits(mm) || !all_digits(dd)) return std::nullopt;
    Timestamp ts;
    ts.month = to_int(mm);
    ts.day = to_int(dd);
    if (!valid_date(ts.month, ts.day)) return std::nullopt;
    if (!match_clock(line, 6, ts)) return std::nullopt;
    return ts;
}

std::size_t skip_spaces(std::string_view s, std::size_t pos) {
    while (pos < s.size() && is_space(s[pos])) ++pos;
    return pos;
}

std::size_t token_end(std::string_view s, std::size_t pos) {
    while (pos < s.size() && !is_space(s[pos])) ++pos;
    return pos;
}

// Message type and content for dialect A, applied to everything after the
// timestamp and its trailing space.
void parse_rest_a(std::string_view rest, LogEvent& ev) {
    std::size_t first = skip_spaces(rest, 0);
    if (first == rest.size()) {
        ev.content = std::string(rest);
        return;
    }
    std::size_t first_end = token_end(rest, first);
    std::string_view first_tok = rest.substr(first, first_end - first);

    // An optional five-digit sequence number may precede the type token. It
    // stays inside the content either way; its meaning is unknown.
    bool has_seq = first_tok.size() == 5 && all_digits(first_tok);
    std::size_t cand_start = first;
    std::size_t cand_end = first_end;
    if (has_seq) {
        cand_start = skip_spaces(rest, first_end);
        if (cand_start == rest.size()) {
            ev.content = std::string(rest);
            return;
        }
        cand_end = token_end(rest, cand_start);
    }
    std::string_view cand = rest.substr(cand_start, cand_end - cand_start);

    // Strip one trailing colon, either attached ("Error:") or as a separate
    // token ("ERROR :").
    std::size_t consumed_end = cand_end;
    if (!cand.empty() && cand.back() == ':') {
        cand.remove_suffix(1);
    } else {
        std::size_t colon_start = skip_spaces(rest, cand_end);
        std::size_t colon_end = token_end(rest, colon_start);
        if (rest.substr(colon_start, colon_end - colon_start) == ":")
            consumed_end = colon_end;
    }

    if (!all_alpha(cand)) {
        ev.content = std::string(rest);
        return;
    }
    ev.message_type = std::string(cand);
    std::string_view tail = rest.substr(skip_spaces(rest, consumed_end));
    if (has_seq) {
        ev.content = std::string(first_tok);
        if (!tail.empty()) {
            ev.content += ' ';
            ev.content += tail;
        }
    } else {
        ev.content = std::string(tail);
    }
}

}  // namespace

bool is_error_type(const std::optional<std::string>& message_type) {
    if (!message_type) return false;
    const std::string& t = *message_type;
    static constexpr std::string_view needle = "error";
    if (t.size() < needle.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= t.size(); ++i) {
        std::size_t j = 0;
        while (j < needle.size() &&
               std::tolower(static_cast<unsigned char>(t[i + j])) == needle[j])
            ++j;
        if (j == needle.size()) return true;
    }
    return false;
}

LabeledEvent label_event(LogEvent event) {
    bool is_error = is_error_type(event.message_type);
    return LabeledEvent{std::move(event), is_error};
}

ParseResult parse_line(std::string_view raw) {
    if (trim(raw).empty()) return Malformed{"blank"};

    if (auto ts = match_timestamp_a(raw)) {
        LogEvent ev;
        ev.timestamp = *ts;
        parse_rest_a(raw.size() > 20 ? raw.substr(20) : std::string_view{}, ev);
        return ev;
    }

    if (auto ts = match_timestamp_b(raw)) {
        std::string_view rest = raw.substr(17);
        std::size_t p1 = rest.find('|');
        if (p1 != std::string_view::npos) {
            std::size_t p2 = rest.find('|', p1 + 1);
            std::string_view seq = trim(rest.substr(0, p1));
            if (p2 != std::string_view::npos && seq.size() == 5 && all_digits(seq)) {
                LogEvent ev;
                ev.timestamp = *ts;
                std::string_view type = trim(rest.substr(p1 + 1, p2 - p1 - 1));
                if (!type.empty()) ev.message_type = std::string(type);
                ev.content = std::string(rest.substr(p2 + 1));
                return ev;
            }
        }
        // A dialect-B timestamp without the full pipe structure is not an
        // event start.
    }

    return Continuation{std::string(raw)};
}

ParseStats& ParseStats::operator+=(const ParseStats& other) {
    lines_total += other.lines_total;
    events += other.events;
    continuations_folded += other.continuations_folded;
    malformed += other.malformed;
    orphans += other.orphans;
    return *this;
}

std::string render_stats(const ParseStats& stats) {
    std::string out;
    out += "lines_total: " + std::to_string(stats.lines_total) + "\n";
    out += "events: " + std::to_string(stats.events) + "\n";
    out += "continuations_folded: " + std::to_string(stats.continuations_folded) + "\n";
    out += "malformed: " + std::to_string(stats.malformed) + "\n";
    out += "orphans: " + std::to_string(stats.orphans) + "\n";
    return out;
}

void StreamParser::flush_pending() {
    if (!pending_) return;
    if (trim(pending_->content).empty()) {
        // Nothing but a timestamp ever arrived; reject rather than emit an
        // event with no content.
        ++stats_.malformed;
    } else {
        ++stats_.events;
        sink_(std::move(*pending_));
    }
    pending_.reset();
}

void StreamParser::feed_line(std::string_view raw) {
    ++line_no_;
    ++stats_.lines_total;
    ParseResult result = parse_line(raw);
    if (auto* ev = std::get_if<LogEvent>(&result)) {
        flush_pending();
        ev->source_line = line_no_;
        pending_ = std::move(*ev);
    } else if (auto* cont = std::get_if<Continuation>(&result)) {
        if (pending_) {
            if (!pending_->content.empty()) pending_->content += ' ';
            pending_->content += cont->text;
            ++stats_.continuations_folded;
        } else {
            ++stats_.orphans;
        }
    } else {
        ++stats_.malformed;
    }
}

void StreamParser::finish() { flush_pending(); }

std::string sanitize_utf8(std::string_view line) {
    static constexpr std::string_view replacement = "\xEF\xBF\xBD";  // U+FFFD
    std::string out;
    out.reserve(line.size());
    std::size_t i = 0;
    while (i < line.size()) {
        unsigned char b = static_cast<unsigned char>(line[i]);
        if (b < 0x80) {
            out += static_cast<char>(b);
            ++i;
            continue;
        }
        std::size_t len = 0;
        unsigned lo = 0x80, hi = 0xBF;
        if (b >= 0xC2 && b <= 0xDF) {
            len = 2;
        } else if (b >= 0xE0 && b <= 0xEF) {
            len = 3;
            if (b == 0xE0) lo = 0xA0;        // no overlongs
            if (b == 0xED) hi = 0x9F;        // no surrogates
        } else if (b >= 0xF0 && b <= 0xF4) {
            len = 4;
            if (b == 0xF0) lo = 0x90;
            if (b == 0xF4) hi = 0x8F;
        }
        bool ok = len != 0 && i + len <= line.size();
        if (ok) {
            for (std::size_t j = 1; j < len && ok; ++j) {
                unsigned char cb = static_cast<unsigned char>(line[i + j]);
                unsigned jlo = (j == 1) ? lo : 0x80;
                unsigned jhi = (j == 1) ? hi : 0xBF;
                ok = cb >= jlo && cb <= jhi;
            }
        }
        if (ok) {
            out.append(line.substr(i, len));
            i += len;
        } else {
            out += replacement;
            ++i;
        }
    }
    return out;
}

ParseStats parse_stream(std::istream& in, const EventSink& sink, std::string_view name) {
    StreamParser parser(sink);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        parser.feed_line(sanitize_utf8(line));
    }
    if (in.bad()) {
        throw io_error("read failure in " + std::string(name) + " at line " +
                       std::to_string(line_no + 1));
    }
    parser.finish();
    return parser.stats();
}

ParseStats parse_file(const std::string& path, const EventSink& sink) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open file: " + path);
    return parse_stream(in, sink, path);
}

std::pair<std::vector<LogEvent>, ParseStats> parse_lines(std::span<const std::string> lines) {
    std::vector<LogEvent> events;
    StreamParser parser([&](LogEvent&& ev) { events.push_back(std::move(ev)); });
    for (const std::string& line : lines) parser.feed_line(sanitize_utf8(line));
    parser.finish();
    return {std::move(events), parser.stats()};
}

std::pair<std::vector<LogEvent>, ParseStats> parse_file(const std::string& path) {
    std::vector<LogEvent> events;
    ParseStats stats =
        parse_file(path, [&](LogEvent&& ev) { events.push_back(std::move(ev)); });
    return {std::move(events), stats};
}

}  // namespace lognb
